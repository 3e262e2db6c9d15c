from _irf6v import *  # noqa: F401,F403

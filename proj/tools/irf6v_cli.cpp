// Command-line surface: reproduce the correlator table, run single-length
// computations, verify the functional equations, emit plot data.
#include "irf6v/table_runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace irf6v;

void emit(const RunConfig& config, const std::string& payload) {
  if (!config.out_path.empty()) {
    std::ofstream out(config.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + config.out_path);
    out << payload;
  }
  std::cout << payload;
}

int run(const RunConfig& config) {
  if (config.command == "table" || config.command == "ed" || config.command == "nlie" ||
      config.command == "thermo") {
    RunConfig c = config;
    if (config.command == "ed") {
      if (c.lengths.empty()) c.lengths = {4, 8, 12};
      for (long L : c.lengths)
        if (L == CorrelatorTable::kInfiniteLength || L > 12)
          throw std::invalid_argument("ed command is restricted to L <= 12");
    } else if (config.command == "nlie") {
      if (c.lengths.empty()) c.lengths = {16, 32, 64, 128, 256, 512, 1024};
      for (long L : c.lengths)
        if (L == CorrelatorTable::kInfiniteLength || L < 8 || L % 4 != 0)
          throw std::invalid_argument(
              "nlie command needs finite lengths >= 8 with L = 0 mod 4");
    } else if (config.command == "thermo") {
      c.lengths = {CorrelatorTable::kInfiniteLength};
    }
    TableResult result = run_table(c);
    if (config.command == "ed") {
      // drop the cross-check NLIE rows; ed reports the ED pipeline alone
      std::erase_if(result.rows, [](const TableRow& r) { return r.method != "ed"; });
      result.cross_checks.clear();
      result.ok = true;
    } else if (config.command == "nlie") {
      std::erase_if(result.rows, [](const TableRow& r) { return r.method != "nlie"; });
      result.cross_checks.clear();
      result.ok = true;
    }
    emit(config, config.format == "json" ? table_to_json(result) : rows_to_csv(result.rows));
    if (config.command == "table") {
      for (auto& [L, diff] : result.cross_checks)
        std::cerr << "cross-check L=" << L << "  max |ed - nlie| = " << diff << "\n";
      return result.ok ? 0 : 1;
    }
    return 0;
  }
  if (config.command == "figure5") {
    auto rows = run_figure5(config);
    emit(config, config.format == "json" ? figure5_to_json(rows) : figure5_to_csv(rows));
    return 0;
  }
  if (config.command == "verify-qkz" || config.command == "verify-omega-fe") {
    VerifyReport report = config.command == "verify-qkz" ? run_verify_qkz(config)
                                                         : run_verify_omega_fe(config);
    emit(config, config.format == "json" ? verify_to_json(report) : verify_to_text(report));
    return report.ok ? 0 : 1;
  }
  throw std::invalid_argument("unknown command: " + config.command);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Ground-state short-distance correlators of the face version of the "
      "isotropic six-vertex model and its three-spin chain"};
  irf6v::RunConfig config;
  std::vector<std::string> length_tokens;

  app.add_option("--command", config.command,
                 "table | ed | nlie | thermo | verify-qkz | verify-omega-fe | figure5")
      ->required();
  app.add_option("--lengths", length_tokens,
                 "even chain lengths, comma separated; 'inf' for the thermodynamic row")
      ->delimiter(',');
  app.add_option("--x-max", config.x_max, "rapidity grid half-width (>= 15)");
  app.add_option("--n-points", config.n_points, "grid points, power of two (>= 256)");
  app.add_option("--tol", config.tol, "solver fixed-point tolerance");
  app.add_option("--max-iter", config.max_iter, "solver sweep limit");
  app.add_option("--format", config.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", config.out_path, "output file (also echoed to stdout)");
  app.add_option("--seed", config.seed, "seed for the inhomogeneity draws");

  CLI11_PARSE(app, argc, argv);

  try {
    for (auto& t : length_tokens) config.lengths.push_back(irf6v::parse_length(t));
    return run(config);
  } catch (const std::exception& e) {
    std::cerr << "error (" << config.command << "): " << e.what() << "\n";
    return 2;
  }
}

#include "irf6v/table_runner.hpp"

#include "irf6v/exact_diag.hpp"
#include "irf6v/omega.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace irf6v {

namespace {

using ojson = nlohmann::ordered_json;

std::string num10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

ojson row_json(const TableRow& r) {
  ojson j;
  j["L"] = (r.table.length == CorrelatorTable::kInfiniteLength)
               ? ojson("inf")
               : ojson(r.table.length);
  for (const char* name : CorrelatorTable::kTableColumns)
    j[name] = r.table.entries.at(name);
  j["method"] = r.method;
  return j;
}

} // namespace

std::vector<long> RunConfig::default_lengths() {
  return {4, 8, 12, 16, 32, 64, 128, 256, 512, 1024, CorrelatorTable::kInfiniteLength};
}

std::string format_length(long L) {
  return L == CorrelatorTable::kInfiniteLength ? "inf" : std::to_string(L);
}

long parse_length(const std::string& token) {
  if (token == "inf" || token == "Inf" || token == "INF")
    return CorrelatorTable::kInfiniteLength;
  size_t pos = 0;
  long v = std::stol(token, &pos);
  if (pos != token.size() || v <= 0) throw std::invalid_argument("bad length: " + token);
  return v;
}

CorrelatorTable ed_table(int L) {
  CorrelatorTable t;
  t.length = L;
  t.entries = ed_correlators(L);
  return t;
}

CorrelatorTable nlie_table(int L, const RapidityGrid& grid, double tol, int max_iter) {
  AuxSolution aux = solve_aux(L, grid, tol, max_iter);
  OmegaJet jet = omega_jet(aux);
  return correlators_from_jet(jet.values, L);
}

CorrelatorTable thermo_table() {
  return correlators_from_jet(thermo_jet(), CorrelatorTable::kInfiniteLength);
}

TableResult run_table(const RunConfig& config) {
  TableResult result;
  RapidityGrid grid(config.x_max, config.n_points);
  auto lengths = config.lengths.empty() ? RunConfig::default_lengths() : config.lengths;
  for (long L : lengths) {
    if (L == CorrelatorTable::kInfiniteLength) {
      result.rows.push_back({thermo_table(), "thermo"});
      continue;
    }
    if (L % 2 != 0) throw std::invalid_argument("lengths must be even");
    bool has_ed = L <= 12;
    bool has_nlie = L >= 8 && L % 4 == 0;
    CorrelatorTable ed, nlie;
    if (has_ed) {
      ed = ed_table(int(L));
      result.rows.push_back({ed, "ed"});
    }
    if (has_nlie) {
      nlie = nlie_table(int(L), grid, config.tol, config.max_iter);
      result.rows.push_back({nlie, "nlie"});
    }
    if (has_ed && has_nlie) {
      double diff = 0.0;
      for (const char* name : CorrelatorTable::kTableColumns)
        diff = std::max(diff, std::abs(ed.entries.at(name) - nlie.entries.at(name)));
      result.cross_checks.emplace_back(L, diff);
      if (diff > 1e-6) result.ok = false;
    }
  }
  return result;
}

std::vector<Figure5Row> run_figure5(const RunConfig& config) {
  auto lengths = config.lengths;
  if (lengths.empty()) lengths = {8, 12, 16, 32, 64, 128, 256, 512, 1024};
  if (!std::is_sorted(lengths.begin(), lengths.end()))
    throw std::invalid_argument("figure5 lengths must be sorted ascending");
  CorrelatorTable inf = thermo_table();
  RapidityGrid grid(config.x_max, config.n_points);
  std::vector<Figure5Row> rows;
  for (long L : lengths) {
    if (L == CorrelatorTable::kInfiniteLength || L < 8 || L % 4 != 0)
      throw std::invalid_argument("figure5 needs finite lengths >= 8 with L = 0 mod 4");
    CorrelatorTable t = nlie_table(int(L), grid, config.tol, config.max_iter);
    Figure5Row row;
    row.length = L;
    for (const char* name : CorrelatorTable::kTableColumns) {
      double denom = inf.entries.at(name);
      if (std::abs(denom) < 1e-14)
        throw std::runtime_error("thermodynamic normalizer vanishes for " + std::string(name));
      row.normalized[name] = t.entries.at(name) / denom;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

VerifyReport run_verify_qkz(const RunConfig& config) {
  auto lengths = config.lengths.empty() ? std::vector<long>{4, 8} : config.lengths;
  VerifyReport report;
  for (long L : lengths) {
    if (L != 4 && L != 8)
      throw std::invalid_argument(
          "verify-qkz supports L in {4, 8} (exact-diagonalization verification set)");
    auto u = draw_inhomogeneities(int(L), config.seed);
    for (int n : {2, 3}) {
      std::vector<cplx> lams;
      if (n == 2) lams = {cplx(0.3, 0.0), u[1]};
      else        lams = {cplx(0.3, 0.0), cplx(-0.17, 0.0), u[1]};
      double res = verify_qkz(int(L), n, lams, u);
      double thr = 1e-9;
      report.checks.push_back({"qkz L=" + std::to_string(L) + " n=" + std::to_string(n),
                               res, thr, res < thr});
    }
  }
  for (auto& c : report.checks) report.ok = report.ok && c.pass;
  return report;
}

VerifyReport run_verify_omega_fe(const RunConfig& config) {
  VerifyReport report;
  // ED-backed omega, inhomogeneous, lambda2 pinned to an inhomogeneity
  for (int L : {4, 8}) {
    auto u = draw_inhomogeneities(L, config.seed);
    auto omega_ed = [&](cplx a, cplx b) { return omega_from_ed(L, a, b, u); };
    double res = verify_omega_fe(omega_ed, cplx(0.3, 0.0), u[1]);
    report.checks.push_back({"omega-fe ed L=" + std::to_string(L), res, 1e-9, res < 1e-9});
  }
  // NLIE omega, homogeneous, lambda2 = 0
  RapidityGrid grid(config.x_max, config.n_points);
  for (int L : {8, 12}) {
    AuxSolution aux = solve_aux(L, grid, config.tol, config.max_iter);
    auto omega_fn = [&](cplx a, cplx b) { return omega_value(aux, a, b); };
    double res = verify_omega_fe(omega_fn, cplx(0.3, 0.0), cplx(0.0, 0.0));
    report.checks.push_back({"omega-fe nlie L=" + std::to_string(L), res, 1e-8, res < 1e-8});
  }
  // thermodynamic difference form
  {
    auto omega_fn = [](cplx a, cplx b) { return omega_inf(a - b); };
    double res = verify_omega_fe(omega_fn, cplx(0.4, 0.0), cplx(0.0, 0.0));
    report.checks.push_back({"omega-fe thermo", res, 1e-12, res < 1e-12});
  }
  for (auto& c : report.checks) report.ok = report.ok && c.pass;
  return report;
}

std::string rows_to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "L,x1,x1x2,x1x2x3,x1x3,y1y3,method\n";
  for (const auto& r : rows) {
    os << format_length(r.table.length);
    for (const char* name : CorrelatorTable::kTableColumns)
      os << "," << num10(r.table.entries.at(name));
    os << "," << r.method << "\n";
  }
  return os.str();
}

std::string figure5_to_csv(const std::vector<Figure5Row>& rows) {
  std::ostringstream os;
  os << "L,x1,x1x2,x1x2x3,x1x3,y1y3,method\n";
  for (const auto& r : rows) {
    os << r.length;
    for (const char* name : CorrelatorTable::kTableColumns)
      os << "," << num10(r.normalized.at(name));
    os << ",figure5\n";
  }
  return os.str();
}

std::string table_to_json(const TableResult& result) {
  ojson j;
  j["rows"] = ojson::array();
  for (const auto& r : result.rows) j["rows"].push_back(row_json(r));
  j["cross_checks"] = ojson::array();
  for (auto& [L, diff] : result.cross_checks)
    j["cross_checks"].push_back({{"L", L}, {"max_abs_diff", diff}});
  j["ok"] = result.ok;
  return j.dump(2) + "\n";
}

std::string figure5_to_json(const std::vector<Figure5Row>& rows) {
  ojson j;
  j["rows"] = ojson::array();
  for (const auto& r : rows) {
    ojson e;
    e["L"] = r.length;
    for (const char* name : CorrelatorTable::kTableColumns)
      e[name] = r.normalized.at(name);
    e["method"] = "figure5";
    j["rows"].push_back(e);
  }
  return j.dump(2) + "\n";
}

std::string verify_to_json(const VerifyReport& report) {
  ojson j;
  j["residuals"] = ojson::array();
  for (const auto& c : report.checks)
    j["residuals"].push_back({{"name", c.name},
                              {"residual", c.residual},
                              {"threshold", c.threshold},
                              {"pass", c.pass}});
  j["ok"] = report.ok;
  return j.dump(2) + "\n";
}

std::string verify_to_text(const VerifyReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks)
    os << (c.pass ? "pass" : "FAIL") << "  " << c.name << "  residual=" << num10(c.residual)
       << "  threshold=" << num10(c.threshold) << "\n";
  os << (report.ok ? "all checks passed" : "some checks FAILED") << "\n";
  return os.str();
}

} // namespace irf6v

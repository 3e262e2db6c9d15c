#ifndef IRF6V_TABLE_RUNNER_HPP
#define IRF6V_TABLE_RUNNER_HPP

#include "irf6v/density_correlators.hpp"
#include "irf6v/nlie_solver.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace irf6v {

struct RunConfig {
  std::string command = "table";
  std::vector<long> lengths;  // CorrelatorTable::kInfiniteLength for the inf row
  double x_max = 25.0;
  int n_points = 4096;
  double tol = 1e-13;
  int max_iter = 5000;
  std::string format = "csv";  // csv | json
  std::string out_path;        // empty: stdout only
  unsigned long long seed = 1;

  static std::vector<long> default_lengths();
};

// One correlator row tagged with the pipeline that produced it.
struct TableRow {
  CorrelatorTable table;
  std::string method;  // "ed" | "nlie" | "thermo"
};

struct TableResult {
  std::vector<TableRow> rows;
  std::vector<std::pair<long, double>> cross_checks;  // max |ed - nlie| per L
  bool ok = true;  // every cross-check below 1e-6
};

CorrelatorTable ed_table(int L);
CorrelatorTable nlie_table(int L, const RapidityGrid& grid, double tol, int max_iter);
CorrelatorTable thermo_table();

// table command: ED for even L <= 12, NLIE for L >= 8 with L = 0 mod 4
// (the twisted sector owns the ground state at L = 2 mod 4), closed forms for inf.
TableResult run_table(const RunConfig& config);

struct Figure5Row {
  long length;
  std::map<std::string, double> normalized;  // c_L / c_inf per column
};
std::vector<Figure5Row> run_figure5(const RunConfig& config);

struct VerifyCheck {
  std::string name;
  double residual;
  double threshold;
  bool pass;
};
struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool ok = true;
};

VerifyReport run_verify_qkz(const RunConfig& config);
VerifyReport run_verify_omega_fe(const RunConfig& config);

// serialization (schema: L,x1,x1x2,x1x2x3,x1x3,y1y3,method; 10 significant
// digits; the thermodynamic row prints L as "inf")
std::string rows_to_csv(const std::vector<TableRow>& rows);
std::string figure5_to_csv(const std::vector<Figure5Row>& rows);
std::string table_to_json(const TableResult& result);
std::string figure5_to_json(const std::vector<Figure5Row>& rows);
std::string verify_to_json(const VerifyReport& report);
std::string verify_to_text(const VerifyReport& report);

std::string format_length(long L);
long parse_length(const std::string& token);

} // namespace irf6v

#endif

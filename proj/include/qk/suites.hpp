#pragma once

#include <map>
#include <string>
#include <vector>

#include "qk/report.hpp"

namespace qk {

struct SuiteOptions {
  int n_max = 3;
  int r_max = 3;
  bool timing = true;
};

struct InstanceResult {
  std::string suite;
  std::map<std::string, std::string> params;  // n, r, s, family as applicable
  std::string status;                         // pass | fail | skipped
  std::string witness;                        // first failing identity, if any
  std::string note;                           // precondition for skipped runs
  long ms = -1;

  std::string sort_key() const;
};

struct SuiteResult {
  std::string suite;
  std::vector<InstanceResult> instances;
  bool pass() const;
};

const std::vector<std::string>& suite_names();  // excludes "all"
bool is_suite_name(const std::string& name);

/// Runs one suite (or "all") over the option grid. Instances are evaluated
/// independently (in parallel when threads are available) and sorted by key.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

std::string suite_result_json(const SuiteResult& res, bool timing);
std::string suite_result_table(const SuiteResult& res, bool timing);

/// The Wolf table rows (after solving the trace identities), as displayable
/// records.
struct WolfRow {
  std::string name;
  int n;
  std::string ideals;       // "sp(1):3, sp(n):10"
  std::string l_values;     // "2/4, 3/4"
  std::string rho_values;   // "(1-l)/2 list"
  std::string regularity;   // REGULAR | DEGENERATE
};
std::vector<WolfRow> wolf_rows(int n_classical = 2);
std::string wolf_rows_table(const std::vector<WolfRow>& rows);
std::string wolf_rows_json(const std::vector<WolfRow>& rows);

/// Spinor rank table for cmd_dims.
struct DimsRow {
  int r;
  long rank;
};
struct DimsResult {
  int n;
  std::vector<DimsRow> ranks;
  long total;
  long expected_total;  // 2^{2n}
  bool prim_dims_ok;    // kernel ranks match the binomial formula
};
DimsResult compute_dims(int n);
std::string dims_table(const DimsResult& d);
std::string dims_json(const DimsResult& d);

}  // namespace qk

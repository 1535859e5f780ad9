#pragma once

// Energy scans over a list of ansatz parameters, the flat key = value config
// format, CSV output and the self-validation suite.

#include <iosfwd>
#include <string>
#include <vector>

#include "jmnl/nonlinear.hpp"
#include "jmnl/scattering.hpp"

namespace jmnl {

struct ScanRequest {
  ModelConfig config = ModelConfig::published();
  double e_min = 0.5;
  double e_max = 6.0;
  int steps = 551;
  std::vector<double> nu_list{1, 2, 3, 4, 5, 6, 7};
  std::string output_path;

  /// Throws ConfigError(0, ...) on the first violated constraint.
  void validate() const;
  /// Inclusive-endpoint uniform grid.
  std::vector<double> energies() const;
};

/// Parses `key = value` lines; `#` starts a comment. Unset keys keep the
/// published resonance-scan values. Errors carry the offending line number.
ScanRequest parse_config(std::istream& in);
ScanRequest load_config(const std::string& path);

enum class RowStatus { ok, pole, degenerate };
std::string to_string(RowStatus s);

struct ScanRow {
  double nu = 0;
  ScatterPoint point;
  RowStatus status = RowStatus::ok;
};

/// One row per (nu, E), sorted by (nu, E). Runs on `threads` workers
/// (0 = hardware concurrency, capped by JMNL_THREADS when set).
std::vector<ScanRow> run_scan(const ScanRequest& req, int threads = 0);

/// Worker count from JMNL_THREADS, or `fallback` when unset. Throws
/// ConfigError if the variable is set but not a positive integer.
int worker_count_from_env(int fallback);

/// Header `nu,E,re_S,im_S,delta,amplitude,status`, %.17g fields.
void write_csv(std::ostream& out, const std::vector<ScanRow>& rows);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Lambda positivity, Omega Lambda Omega^T = I, three-route Green's
/// agreement, unitarity and recursion residuals for every nu in the request.
ValidationReport validate(const ScanRequest& req);

}  // namespace jmnl

// jmnl: energy scans and self-validation for the nonlinear J-matrix model.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "jmnl/errors.hpp"
#include "jmnl/scan.hpp"

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kNumerical = 3 };

int do_scan(const std::string& config_path, const std::string& out_override) {
  jmnl::ScanRequest req = jmnl::load_config(config_path);
  if (!out_override.empty()) req.output_path = out_override;

  const auto rows = jmnl::run_scan(req);
  std::size_t flagged = 0;
  for (const auto& r : rows) flagged += r.status != jmnl::RowStatus::ok;

  if (req.output_path.empty() || req.output_path == "-") {
    jmnl::write_csv(std::cout, rows);
  } else {
    std::ofstream out(req.output_path, std::ios::binary);
    if (!out) {
      std::cerr << "jmnl: cannot write '" << req.output_path << "'\n";
      return kCheckFailed;
    }
    jmnl::write_csv(out, rows);
    if (!out.flush()) {
      std::cerr << "jmnl: write to '" << req.output_path << "' failed\n";
      return kCheckFailed;
    }
  }
  if (flagged) std::cerr << "jmnl: " << flagged << " of " << rows.size() << " rows flagged\n";
  if (flagged == rows.size()) {
    std::cerr << "jmnl: every grid point is at a pole\n";
    return kNumerical;
  }
  return kOk;
}

int do_validate(const std::string& config_path) {
  const jmnl::ScanRequest req = jmnl::load_config(config_path);
  const auto report = jmnl::validate(req);
  for (const auto& c : report.checks)
    std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << '\n';
  return report.passed() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonlinear J-matrix scattering: S(E) scans and self-checks"};
  app.set_version_flag("--version", "jmnl " JMNL_VERSION);
  app.require_subcommand(1);

  std::string config_path, out_path;
  auto* scan = app.add_subcommand("scan", "Scan |1-S(E)| over the energy grid and write CSV");
  scan->add_option("--config", config_path, "key = value config file")->required()->check(CLI::ExistingFile);
  scan->add_option("--out", out_path, "CSV output path (overrides 'out'; '-' for stdout)");

  auto* val = app.add_subcommand("validate", "Run the invariant checks at the given config");
  val->add_option("--config", config_path, "key = value config file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (scan->parsed()) return do_scan(config_path, out_path);
    return do_validate(config_path);
  } catch (const jmnl::ConfigError& e) {
    std::cerr << "jmnl: config: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const jmnl::NumericalError& e) {
    std::cerr << "jmnl: numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const jmnl::InvariantViolation& e) {
    std::cerr << "jmnl: invariant violated: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "jmnl: " << e.what() << '\n';
    return kCheckFailed;
  }
}

#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "jmnl/errors.hpp"
#include "jmnl/scan.hpp"

namespace jmnl {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& text, int line, const std::string& key) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ConfigError(line, key + ": expected a number, got '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v))
    throw ConfigError(line, key + ": expected a number, got '" + text + "'");
  return v;
}

int parse_int(const std::string& text, int line, const std::string& key) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    throw ConfigError(line, key + ": expected an integer, got '" + text + "'");
  }
  if (used != text.size() || v < -1000000 || v > 1000000)
    throw ConfigError(line, key + ": expected an integer, got '" + text + "'");
  return static_cast<int>(v);
}

std::vector<double> parse_list(const std::string& text, int line, const std::string& key) {
  std::vector<double> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) out.push_back(parse_real(trim(item), line, key));
  if (out.empty()) throw ConfigError(line, key + ": empty list");
  return out;
}

}  // namespace

void ScanRequest::validate() const {
  try {
    config.validate();
  } catch (const DomainError& e) {
    throw ConfigError(0, e.what());
  }
  if (!(e_min > 0)) throw ConfigError(0, "e_min must be positive");
  if (!(e_max > e_min)) throw ConfigError(0, "e_max must exceed e_min");
  if (steps < 2) throw ConfigError(0, "steps must be at least 2");
  if (nu_list.empty()) throw ConfigError(0, "nu_list is empty");
  for (double nu : nu_list)
    if (!(nu > -1)) throw ConfigError(0, "nu must exceed -1");
}

std::vector<double> ScanRequest::energies() const {
  std::vector<double> out(steps);
  const double h = (e_max - e_min) / (steps - 1);
  for (int k = 0; k < steps; ++k) out[k] = e_min + k * h;
  out.back() = e_max;
  return out;
}

ScanRequest parse_config(std::istream& in) {
  ScanRequest req;
  std::set<std::string> seen;
  std::string raw;
  int line = 0;
  int k_line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError(line, "expected 'key = value'");
    std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty()) throw ConfigError(line, "missing key");
    if (value.empty()) throw ConfigError(line, key + ": missing value");
    const std::string canonical = key == "nu_list" ? "nu" : key;
    if (!seen.insert(canonical).second) throw ConfigError(line, "duplicate key '" + key + "'");

    auto& c = req.config;
    if (key == "ell") {
      c.basis.ell = parse_int(value, line, key);
      if (c.basis.ell < 0) throw ConfigError(line, "ell must be non-negative");
    } else if (key == "g") {
      c.g = parse_real(value, line, key);
    } else if (key == "lambda") {
      c.basis.lambda = parse_real(value, line, key);
      if (!(c.basis.lambda > 0)) throw ConfigError(line, "lambda must be positive");
    } else if (key == "nu" || key == "nu_list") {
      req.nu_list = parse_list(value, line, key);
      for (double nu : req.nu_list)
        if (!(nu > -1)) throw ConfigError(line, key + ": nu must exceed -1");
      c.nu = req.nu_list.front();
    } else if (key == "N") {
      c.N = parse_int(value, line, key);
      if (c.N < 2) throw ConfigError(line, "N must be at least 2");
    } else if (key == "K") {
      c.K = parse_int(value, line, key);
      k_line = line;
      if (c.K < 1) throw ConfigError(line, "K must be at least 1");
    } else if (key == "weight") {
      try {
        c.weight = parse_weight_choice(value);
      } catch (const DomainError& e) {
        throw ConfigError(line, e.what());
      }
    } else if (key == "e_min") {
      req.e_min = parse_real(value, line, key);
      if (!(req.e_min > 0)) throw ConfigError(line, "e_min must be positive");
    } else if (key == "e_max") {
      req.e_max = parse_real(value, line, key);
    } else if (key == "steps") {
      req.steps = parse_int(value, line, key);
      if (req.steps < 2) throw ConfigError(line, "steps must be at least 2");
    } else if (key == "out") {
      req.output_path = value;
    } else {
      throw ConfigError(line, "unknown key '" + key + "'");
    }
  }
  // Cross-key constraints are checked once everything is read.
  if (req.config.K > req.config.N) throw ConfigError(k_line, "K must not exceed N");
  req.validate();
  return req;
}

ScanRequest load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "cannot open config '" + path + "'");
  return parse_config(in);
}

}  // namespace jmnl

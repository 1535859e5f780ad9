#pragma once

#include <stdexcept>
#include <string>

namespace jmnl {

/// Argument outside the mathematical domain of an operation (e.g. nu <= -1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical procedure failed or lost the accuracy its contract promises.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A proven invariant (e.g. positive definiteness of Lambda) did not hold.
/// Signals a bug rather than a bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The energy sits on (or within the pole margin of) an eigenvalue of the
/// finite Hamiltonian block, where the finite Green's function diverges.
class PoleError : public NumericalError {
 public:
  PoleError(double energy, const std::string& what)
      : NumericalError(what), energy_(energy) {}
  double energy() const noexcept { return energy_; }

 private:
  double energy_;
};

/// Both numerator and denominator of the S-matrix ratio vanished.
class DegenerateEnergyError : public NumericalError {
 public:
  DegenerateEnergyError(double energy, const std::string& what)
      : NumericalError(what), energy_(energy) {}
  double energy() const noexcept { return energy_; }

 private:
  double energy_;
};

/// Malformed or out-of-range configuration; carries the 1-based line number
/// (0 when the problem is not tied to a single line).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace jmnl

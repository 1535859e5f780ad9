#pragma once

// The free (reference) problem in the oscillator basis
//
//   phi_n(r) = sqrt(2 Gamma(n+1)/Gamma(n+l+3/2)) (lambda r)^(l+1)
//              exp(-lambda^2 r^2 / 2) L_n^(l+1/2)(lambda^2 r^2),
//
// where the kinetic-energy operator is tridiagonal and the sine-like and
// cosine-like expansion coefficients s_n(E), c_n(E) solve
//
//   mu^2 P_n = (2n+l+3/2) P_n + sqrt(n(n+l+1/2)) P_{n-1}
//                             + sqrt((n+1)(n+l+3/2)) P_{n+1},
//
// with mu = sqrt(2E)/lambda. The sine-like solution satisfies the n = 0 row
// homogeneously; the cosine-like one carries a source term on that row.
//
// phi_n as written is orthonormal in d(lambda r), so int phi_n phi_m dr =
// delta_nm / lambda. s_n below pairs with that normalization:
// sum_n s_n phi_n(r) = sqrt(2kr) J_{l+1/2}(kr).

#include <vector>

#include "jmnl/real.hpp"

namespace jmnl {

struct BasisParams {
  double lambda = 1.0;  ///< scale, inverse length (a.u.)
  int ell = 0;          ///< angular momentum

  double nu_basis() const { return ell + 0.5; }
  /// Throws DomainError unless lambda > 0 and ell >= 0.
  void validate() const;
};

template <class T>
struct Kinematics {
  T energy;
  T k;   ///< sqrt(2E)
  T mu;  ///< k / lambda

  static Kinematics from_energy(T energy, const BasisParams& basis);
};

enum class CoefficientKind { sine, cosine, ansatz };

template <class T>
struct CoefficientVector {
  CoefficientKind kind;
  T energy;
  std::vector<T> values;

  T operator[](std::size_t n) const { return values[n]; }
  std::size_t size() const { return values.size(); }
};

/// (H0)_{nm} in energy units: a_n on the diagonal, b_n = b_{n,n+1} off it,
/// zero beyond the first off-diagonal.
template <class T>
T h0_element(int n, int m, const BasisParams& basis);

/// The leading size x size block of H0.
template <class T>
Matrix<T> h0_block(int size, const BasisParams& basis);

/// s_n(E) = (-1)^n 2 mu^(l+1) exp(-mu^2/2) Lt_n^(l+1/2)(mu^2), n < count.
template <class T>
CoefficientVector<T> sine_coefficients(T energy, const BasisParams& basis, int count);

/// Source term D of the cosine-like n = 0 row, in units of lambda^2/2:
///   (l+3/2-mu^2) c_0 + sqrt(l+3/2) c_1 = D,
///   D = (2/pi) sqrt(Gamma(l+3/2)) mu^(-l) exp(mu^2/2).
template <class T>
T cosine_source(T energy, const BasisParams& basis);

/// c_0 = -D * PV int_0^inf w(t) / (mu^2 - t) dt with w the unit-mass
/// Laguerre weight t^(l+1/2) e^-t / Gamma(l+3/2): the principal-value
/// second-kind solution, so that c_n +- i s_n are the outgoing/incoming
/// combinations. Closed form via Dawson's integral.
template <class T>
T cosine_seed(T energy, const BasisParams& basis);

/// c_0 from cosine_seed, c_1 from the source row, c_{n>=2} by forward
/// recurrence. Throws NumericalError when the Casoratian
/// b_n (s_n c_{n+1} - s_{n+1} c_n) drifts by more than 1e-8 relative,
/// i.e. when forward recurrence has lost the solution.
template <class T>
CoefficientVector<T> cosine_coefficients(T energy, const BasisParams& basis, int count);

/// Row residuals of the recurrence for rows 0 .. size-2 (row n needs
/// P_{n+1}), each divided by max_n |P_n|. The cosine kind subtracts its
/// source on row 0.
template <class T>
std::vector<T> recursion_residuals(const CoefficientVector<T>& coefficients, const BasisParams& basis);

double basis_function(int n, double r, const BasisParams& basis);

/// sqrt(2kr) J_{l+1/2}(kr)
double regular_solution(double energy, double r, const BasisParams& basis);

/// sqrt(2kr) Y_{l+1/2}(kr)
double irregular_solution(double energy, double r, const BasisParams& basis);

/// |sum_{n<count} s_n phi_n(r) - regular_solution| / |regular_solution|.
///
/// The partial sums do not converge pointwise: the terms decay like
/// n^(-1/2) times an oscillating factor in sqrt(n), so the error plateaus at
/// a few percent no matter how large count is.
double regular_solution_residual(double energy, double r, int count, const BasisParams& basis);

}  // namespace jmnl

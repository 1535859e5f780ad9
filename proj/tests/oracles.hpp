#pragma once

// Independent reference computations used only by the tests. None of these
// share code paths with the library routines they check.

#include <cmath>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "jmnl/reference.hpp"

namespace oracle {

// L_n^nu(z) from the explicit sum sum_k (-1)^k C(n+nu, n-k) z^k / k!.
inline long double laguerre_series(int n, long double nu, long double z) {
  std::vector<long double> binom(n + 1);
  binom[n] = 1;  // C(n+nu, 0)
  for (int k = n - 1; k >= 0; --k) binom[k] = binom[k + 1] * (nu + k + 1) / (n - k);
  long double sum = 0, zk = 1, fact = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      zk *= z;
      fact *= k;
    }
    sum += ((k % 2) ? -1.0L : 1.0L) * binom[k] * zk / fact;
  }
  return sum;
}

// ln Gamma by shifting x above 20 and applying Stirling's series.
inline long double ln_gamma_stirling(long double x) {
  long double shift = 0;
  while (x < 20) {
    shift -= std::log(x);
    x += 1;
  }
  const long double x2 = x * x;
  const long double series = 1 / (12 * x) - 1 / (360 * x * x2) + 1 / (1260 * x2 * x2 * x) -
                             1 / (1680 * x2 * x2 * x2 * x) + 1 / (1188 * x2 * x2 * x2 * x2 * x);
  return shift + (x - 0.5L) * std::log(x) - x + 0.5L * std::log(2 * 3.14159265358979323846264338327950288L) + series;
}

// J_{l+1/2}(x) from its power series.
inline long double bessel_half_series(int ell, long double x) {
  const long double a = ell + 0.5L;
  long double term = std::pow(x / 2, a) / std::tgamma(a + 1);
  long double sum = term;
  for (int m = 1; m < 200; ++m) {
    term *= -(x / 2) * (x / 2) / (m * (m + a));
    sum += term;
    if (std::fabs(term) < 1e-22L * std::fabs(sum)) break;
  }
  return sum;
}

// J_{l+1/2}(x) from the closed trigonometric forms of orders 1/2, -1/2 and
// upward recurrence (stable for x > l).
inline long double bessel_half_closed(int ell, long double x) {
  const long double pre = std::sqrt(2 / (3.14159265358979323846264338327950288L * x));
  long double jm = pre * std::cos(x);  // J_{-1/2}
  long double j = pre * std::sin(x);   // J_{1/2}
  for (int k = 0; k < ell; ++k) {
    const long double next = (2 * (k + 0.5L) / x) * j - jm;
    jm = j;
    j = next;
  }
  return j;
}

// PV int_0^inf w(t) / (mu^2 - t) dt with w = t^(l+1/2) e^-t / Gamma(l+3/2),
// by singularity subtraction on [0, 2 mu^2] and exp-sinh on the tail.
inline double principal_value(double mu, int ell) {
  const double nu = ell + 0.5;
  const double a = mu * mu;
  const double norm = std::tgamma(nu + 1);
  auto w = [&](double t) { return std::pow(t, nu) * std::exp(-t) / norm; };
  const double wa = w(a);
  auto near = [&](double t) {
    const double d = a - t;
    if (std::fabs(d) < 1e-9 * a) {
      // limit of (w(t) - w(a)) / (a - t) = -w'(a)
      return -(nu / a - 1) * wa;
    }
    return (w(t) - wa) / d;
  };
  // The subtracted w(a) / (a - t) term integrates to zero over [0, 2a].
  const double inner = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(near, 0.0, 2 * a, 15, 1e-14);
  boost::math::quadrature::exp_sinh<double> tail_rule;
  const double tail = tail_rule.integrate([&](double u) { return w(2 * a + u) / (a - 2 * a - u); }, 1e-14);
  return inner + tail;
}

// sum_{n<M} (1 - n/M) P_n phi_n(r): Riesz mean of the expansion.
inline double riesz_mean(const std::vector<double>& p, double r, const jmnl::BasisParams& basis, int M) {
  double sum = 0;
  for (int n = 0; n < M; ++n) sum += (1.0 - double(n) / M) * p[n] * jmnl::basis_function(n, r, basis);
  return sum;
}

// The Riesz mean converges with an O(1/M) bias; one Richardson step removes
// it: 2 R(2M) - R(M).
inline double riesz_richardson(const std::vector<double>& p, double r, const jmnl::BasisParams& basis, int M) {
  return 2 * riesz_mean(p, r, basis, 2 * M) - riesz_mean(p, r, basis, M);
}

// |1-S| extremum helpers for scans.
inline std::vector<int> local_maxima(const std::vector<double>& y) {
  std::vector<int> out;
  for (std::size_t k = 1; k + 1 < y.size(); ++k)
    if (y[k] > y[k - 1] && y[k] >= y[k + 1]) out.push_back(static_cast<int>(k));
  return out;
}

}  // namespace oracle

#include "jmnl/reference.hpp"

#include <cmath>
#include <string>

#include "jmnl/errors.hpp"
#include "jmnl/orthopoly.hpp"
#include "jmnl/special.hpp"

namespace jmnl {

namespace {

template <class T>
void require_energy(T energy, const char* who) {
  if (!(energy > 0))
    throw DomainError(std::string(who) + ": energy must be positive, got " + std::to_string(to_double(energy)));
}

// Recurrence coefficients in mu^2 units.
template <class T>
T diag_of(int n, int ell) {
  return T(2 * n) + T(ell) + T(3) / 2;
}

template <class T>
T off_of(int n, int ell) {  // couples n and n+1
  using std::sqrt;
  return sqrt(T(n + 1) * (T(n + 1) + T(ell) + T(1) / 2));
}

}  // namespace

void BasisParams::validate() const {
  if (!(lambda > 0)) throw DomainError("basis: lambda must be positive");
  if (ell < 0) throw DomainError("basis: ell must be non-negative");
}

template <class T>
Kinematics<T> Kinematics<T>::from_energy(T energy, const BasisParams& basis) {
  using std::sqrt;
  require_energy(energy, "kinematics");
  const T k = sqrt(2 * energy);
  return Kinematics{energy, k, k / T(basis.lambda)};
}

template <class T>
T h0_element(int n, int m, const BasisParams& basis) {
  const T scale = T(basis.lambda) * T(basis.lambda) / 2;
  if (n == m) return scale * diag_of<T>(n, basis.ell);
  if (m == n + 1) return scale * off_of<T>(n, basis.ell);
  if (n == m + 1) return scale * off_of<T>(m, basis.ell);
  return T(0);
}

template <class T>
Matrix<T> h0_block(int size, const BasisParams& basis) {
  Matrix<T> h = Matrix<T>::Zero(size, size);
  for (int n = 0; n < size; ++n) {
    h(n, n) = h0_element<T>(n, n, basis);
    if (n + 1 < size) h(n, n + 1) = h(n + 1, n) = h0_element<T>(n, n + 1, basis);
  }
  return h;
}

template <class T>
CoefficientVector<T> sine_coefficients(T energy, const BasisParams& basis, int count) {
  using std::exp;
  using std::pow;
  basis.validate();
  const auto kin = Kinematics<T>::from_energy(energy, basis);
  const T x = kin.mu * kin.mu;
  const T nu = T(basis.ell) + T(1) / 2;
  const T prefactor = 2 * pow(kin.mu, basis.ell + 1) * exp(-x / 2);
  auto lt = laguerre_orthonormal_all(count, nu, x);
  CoefficientVector<T> out{CoefficientKind::sine, energy, std::vector<T>(lt.size())};
  for (std::size_t n = 0; n < lt.size(); ++n) out.values[n] = (n % 2 ? -prefactor : prefactor) * lt[n];
  return out;
}

template <class T>
T cosine_source(T energy, const BasisParams& basis) {
  using std::exp;
  using std::pow;
  using std::sqrt;
  basis.validate();
  const auto kin = Kinematics<T>::from_energy(energy, basis);
  const T gamma = exp(ln_gamma(T(basis.ell) + T(3) / 2));
  return 2 / pi<T>() * sqrt(gamma) * pow(kin.mu, -basis.ell) * exp(kin.mu * kin.mu / 2);
}

template <class T>
T cosine_seed(T energy, const BasisParams& basis) {
  using std::exp;
  using std::pow;
  using std::sqrt;
  const auto kin = Kinematics<T>::from_energy(energy, basis);
  const T mu = kin.mu;
  // With t = s^2 and nu = l + 1/2 the principal value becomes
  //   (1/(mu Gamma(nu+1))) PV int_R s^p e^{-s^2} / (mu - s) ds,  p = 2l+2,
  // and s^p/(mu-s) = mu^p/(mu-s) - sum_{j<p} mu^(p-1-j) s^j, with
  // PV int_R e^{-s^2}/(mu-s) ds = 2 sqrt(pi) F(mu).
  const int p = 2 * basis.ell + 2;
  T pv = pow(mu, p) * 2 * sqrt(pi<T>()) * dawson(mu);
  for (int j = 0; j < p; j += 2) pv -= pow(mu, p - 1 - j) * exp(ln_gamma(T(j + 1) / 2));
  const T principal = pv / (mu * exp(ln_gamma(T(basis.ell) + T(3) / 2)));
  return -cosine_source(energy, basis) * principal;
}

template <class T>
CoefficientVector<T> cosine_coefficients(T energy, const BasisParams& basis, int count) {
  using std::abs;
  if (count < 1) throw DomainError("cosine_coefficients: count must be positive");
  const auto kin = Kinematics<T>::from_energy(energy, basis);
  const T x = kin.mu * kin.mu;
  const int ell = basis.ell;
  const T source = cosine_source(energy, basis);

  CoefficientVector<T> out{CoefficientKind::cosine, energy, std::vector<T>(count)};
  auto& c = out.values;
  c[0] = cosine_seed(energy, basis);
  if (count > 1) c[1] = (source - (diag_of<T>(0, ell) - x) * c[0]) / off_of<T>(0, ell);
  for (int n = 1; n + 1 < count; ++n)
    c[n + 1] = ((x - diag_of<T>(n, ell)) * c[n] - off_of<T>(n - 1, ell) * c[n - 1]) / off_of<T>(n, ell);

  if (count > 1) {
    const auto s = sine_coefficients(energy, basis, count);
    const T reference = s[0] * source;
    for (int n = 0; n + 1 < count; ++n) {
      const T casoratian = off_of<T>(n, ell) * (s[n] * c[n + 1] - s[n + 1] * c[n]);
      if (!(abs(casoratian - reference) <= T(1e-8) * abs(reference)))
        throw NumericalError("cosine_coefficients: forward recurrence unstable at n = " + std::to_string(n) +
                             " (E = " + std::to_string(to_double(energy)) + ", count = " + std::to_string(count) +
                             "); reduce count");
    }
  }
  return out;
}

template <class T>
std::vector<T> recursion_residuals(const CoefficientVector<T>& coefficients, const BasisParams& basis) {
  using std::abs;
  if (coefficients.kind == CoefficientKind::ansatz)
    throw DomainError("recursion_residuals: ansatz vectors do not obey the reference recurrence");
  const auto kin = Kinematics<T>::from_energy(coefficients.energy, basis);
  const T x = kin.mu * kin.mu;
  const auto& p = coefficients.values;
  const int size = static_cast<int>(p.size());
  T scale = 0;
  for (const T& v : p) scale = abs(v) > scale ? T(abs(v)) : scale;
  if (scale == 0) scale = 1;
  const T source = coefficients.kind == CoefficientKind::cosine ? cosine_source(coefficients.energy, basis) : T(0);

  std::vector<T> out;
  for (int n = 0; n + 1 < size; ++n) {
    T row = (diag_of<T>(n, basis.ell) - x) * p[n] + off_of<T>(n, basis.ell) * p[n + 1];
    if (n > 0) row += off_of<T>(n - 1, basis.ell) * p[n - 1];
    if (n == 0) row -= source;
    out.push_back(abs(row) / scale);
  }
  return out;
}

double basis_function(int n, double r, const BasisParams& basis) {
  basis.validate();
  if (!(r > 0)) throw DomainError("basis_function: r must be positive");
  const double nu = basis.nu_basis();
  const double t = basis.lambda * r;
  return std::sqrt(2.0) * laguerre_normalization(n, nu) * std::pow(t, basis.ell + 1) * std::exp(-t * t / 2) *
         laguerre(n, nu, t * t);
}

double regular_solution(double energy, double r, const BasisParams& basis) {
  const double x = std::sqrt(2 * energy) * r;
  // sqrt(2x) J_{l+1/2}(x) = 2x j_l(x) / sqrt(pi)
  return 2 * x * std::sph_bessel(basis.ell, x) / std::sqrt(pi<double>());
}

double irregular_solution(double energy, double r, const BasisParams& basis) {
  const double x = std::sqrt(2 * energy) * r;
  return 2 * x * std::sph_neumann(basis.ell, x) / std::sqrt(pi<double>());
}

double regular_solution_residual(double energy, double r, int count, const BasisParams& basis) {
  const auto s = sine_coefficients(energy, basis, count);
  double sum = 0;
  for (int n = 0; n < count; ++n) sum += s[n] * basis_function(n, r, basis);
  const double exact = regular_solution(energy, r, basis);
  return std::abs(sum - exact) / std::abs(exact);
}

#define JMNL_INSTANTIATE(T)                                                                         \
  template struct Kinematics<T>;                                                                    \
  template T h0_element<T>(int, int, const BasisParams&);                                           \
  template Matrix<T> h0_block<T>(int, const BasisParams&);                                          \
  template CoefficientVector<T> sine_coefficients<T>(T, const BasisParams&, int);                   \
  template T cosine_source<T>(T, const BasisParams&);                                               \
  template T cosine_seed<T>(T, const BasisParams&);                                                 \
  template CoefficientVector<T> cosine_coefficients<T>(T, const BasisParams&, int);                 \
  template std::vector<T> recursion_residuals<T>(const CoefficientVector<T>&, const BasisParams&);

JMNL_INSTANTIATE(double)
JMNL_INSTANTIATE(Quad)

#undef JMNL_INSTANTIATE

}  // namespace jmnl

#include "jmnl/scattering.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "jmnl/errors.hpp"
#include "jmnl/reference.hpp"

namespace jmnl {

namespace {

// Minimal complex arithmetic; std::complex is only specified for the
// built-in floating types.
template <class T>
struct Cx {
  T re;
  T im;
};

template <class T>
Cx<T> operator+(const Cx<T>& a, const Cx<T>& b) {
  return {a.re + b.re, a.im + b.im};
}

template <class T>
Cx<T> operator*(const Cx<T>& a, const Cx<T>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

template <class T>
Cx<T> operator/(const Cx<T>& a, const Cx<T>& b) {
  const T den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

template <class T>
bool is_finite(const T& x) {
  using std::isfinite;
  return isfinite(x);
}

template <class T>
ScatterPoint make_point(T energy, const Cx<T>& s) {
  using std::sqrt;
  ScatterPoint p;
  p.energy = to_double(energy);
  p.S = {to_double(s.re), to_double(s.im)};
  p.delta = std::arg(p.S) / 2;
  const T dre = T(1) - s.re;
  p.amplitude = to_double(T(sqrt(dre * dre + s.im * s.im)));
  return p;
}

struct Boundary {
  // c_{N-1}, s_{N-1}, c_N, s_N, b_{N-1}
  template <class T>
  static void load(T energy, const BasisParams& basis, int n, T& c0, T& s0, T& c1, T& s1, T& b) {
    const auto s = sine_coefficients(energy, basis, n + 1);
    const auto c = cosine_coefficients(energy, basis, n + 1);
    c0 = c[n - 1];
    s0 = s[n - 1];
    c1 = c[n];
    s1 = s[n];
    b = h0_element<T>(n - 1, n, basis);
  }
};

}  // namespace

template <class T>
Pencil<T>::Pencil(Matrix<T> a, Matrix<T> b, std::string label)
    : a_(std::move(a)), b_(std::move(b)), label_(std::move(label)) {
  if (a_.rows() != a_.cols() || b_.rows() != b_.cols() || a_.rows() != b_.rows() || a_.rows() == 0)
    throw DomainError("pencil: A and B must be square and of equal, nonzero size");
  if (a_ != a_.transpose() || b_ != b_.transpose()) throw DomainError("pencil: A and B must be symmetric");
  Eigen::LLT<Matrix<T>> llt(b_);
  if (llt.info() != Eigen::Success) throw DomainError("pencil: B is not positive definite");
}

template <class T>
Pencil<T> Pencil<T>::deflated() const {
  const int n = size() - 1;
  if (n < 1) throw DomainError("pencil: cannot deflate a 1 x 1 pencil");
  return Pencil(a_.topLeftCorner(n, n), b_.topLeftCorner(n, n), label_ + " (deflated)");
}

template <class T>
PencilSpectrum<T> generalized_eigen(const Pencil<T>& pencil) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Matrix<T>> solver(pencil.a(), pencil.b(),
                                                              Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
  if (solver.info() != Eigen::Success) throw NumericalError("generalized_eigen: factorization failed");
  PencilSpectrum<T> out;
  out.eigenvalues = solver.eigenvalues();
  out.eigenvectors = solver.eigenvectors();
  out.tau = (out.eigenvectors.transpose() * pencil.b() * out.eigenvectors).diagonal();
  return out;
}

template <class T>
Matrix<T> green_direct(const Matrix<T>& wave_op, double energy) {
  const auto n = wave_op.rows();
  const Matrix<T> identity = Matrix<T>::Identity(n, n);
  Eigen::PartialPivLU<Matrix<T>> lu(wave_op);
  Matrix<T> g = lu.inverse();
  g += lu.solve(identity - wave_op * g);
  const Matrix<T> r = wave_op * g - identity;
  // maxCoeff does not propagate NaN, so check finiteness separately.
  const bool finite = r.unaryExpr([](const T& x) { return T(is_finite(x) ? 0 : 1); }).sum() == 0;
  const T residual = finite ? max_abs(r) : T(std::numeric_limits<double>::infinity());
  if (!(residual < T(1e-9))) {
    std::ostringstream msg;
    msg << "green_direct: wave operator is singular to working precision at E = " << energy
        << " (||W G - I|| = " << to_double(residual) << ")";
    throw PoleError(energy, msg.str());
  }
  return g;
}

template <class T>
void check_pole_margin(const Vector<T>& eigenvalues, T energy) {
  using std::abs;
  for (Eigen::Index m = 0; m < eigenvalues.size(); ++m) {
    const T eps = eigenvalues(m);
    const T scale = abs(eps) > abs(energy) ? T(abs(eps)) : T(abs(energy));
    if (abs(eps - energy) <= T(kPoleMargin) * scale) {
      std::ostringstream msg;
      msg << "energy " << to_double(energy) << " is within the pole margin of eigenvalue " << to_double(eps);
      throw PoleError(to_double(energy), msg.str());
    }
  }
}

template <class T>
T green_corner_spectral(const Pencil<T>& pencil, T energy) {
  const auto spec = generalized_eigen(pencil);
  check_pole_margin(spec.eigenvalues, energy);
  const int last = pencil.size() - 1;
  T sum = 0;
  for (int m = 0; m <= last; ++m) {
    const T gamma = spec.eigenvectors(last, m);
    sum += gamma * gamma / (spec.tau(m) * (spec.eigenvalues(m) - energy));
  }
  return sum;
}

template <class T>
T green_corner_determinant(const Pencil<T>& pencil, T energy) {
  const int n = pencil.size();
  const auto full = generalized_eigen(pencil);
  check_pole_margin(full.eigenvalues, energy);
  Eigen::SelfAdjointEigenSolver<Matrix<T>> xi(pencil.b(), Eigen::EigenvaluesOnly);

  T value = T(1) / (xi.eigenvalues()(n - 1) * (full.eigenvalues(n - 1) - energy));
  if (n == 1) return value;

  const Pencil<T> reduced = pencil.deflated();
  Eigen::GeneralizedSelfAdjointEigenSolver<Matrix<T>> red(reduced.a(), reduced.b(),
                                                           Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  Eigen::SelfAdjointEigenSolver<Matrix<T>> xi_red(reduced.b(), Eigen::EigenvaluesOnly);
  if (red.info() != Eigen::Success || xi.info() != Eigen::Success || xi_red.info() != Eigen::Success)
    throw NumericalError("green_corner_determinant: eigensolver failed");
  for (int m = 0; m + 1 < n; ++m) {
    value *= xi_red.eigenvalues()(m) / xi.eigenvalues()(m);
    value *= (red.eigenvalues()(m) - energy) / (full.eigenvalues(m) - energy);
  }
  return value;
}

template <class T>
T green_corner(const NonlinearModel<T>& model, T energy) {
  const Matrix<T> h = model.hamiltonian(energy);
  Eigen::SelfAdjointEigenSolver<Matrix<T>> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("green_corner: eigensolver failed");
  check_pole_margin(Vector<T>(solver.eigenvalues()), energy);
  Matrix<T> op = h;
  op.diagonal().array() -= energy;
  const Matrix<T> g = green_direct(op, to_double(energy));
  const int last = model.size() - 1;
  return g(last, last);
}

template <class T>
ScatterPoint s_matrix(T energy, const NonlinearModel<T>& model) {
  const int n = model.size();
  T c0, s0, c1, s1, b;
  Boundary::load(energy, model.config().basis, n, c0, s0, c1, s1, b);
  const T g = green_corner(model, energy);
  const T x = c0 + b * g * c1;
  const T y = s0 + b * g * s1;
  const T den = x * x + y * y;
  if (!(den > 0) || !is_finite(den))
    throw DegenerateEnergyError(to_double(energy), "s_matrix: numerator and denominator vanish");
  return make_point(energy, Cx<T>{(x * x - y * y) / den, -2 * x * y / den});
}

template <class T>
ScatterPoint s_matrix_tr_form(T energy, const NonlinearModel<T>& model) {
  const int n = model.size();
  T c0, s0, c1, s1, b;
  Boundary::load(energy, model.config().basis, n, c0, s0, c1, s1, b);
  const T g = green_corner(model, energy);
  const Cx<T> minus0{c0, -s0}, plus0{c0, s0}, minus1{c1, -s1}, plus1{c1, s1};
  const Cx<T> t = minus0 / plus0;
  const Cx<T> r_minus = minus1 / minus0;
  const Cx<T> r_plus = plus1 / plus0;
  const Cx<T> gj{g * b, T(0)};
  const Cx<T> one{T(1), T(0)};
  const Cx<T> num = one + gj * r_minus;
  const Cx<T> den = one + gj * r_plus;
  if (!(den.re * den.re + den.im * den.im > 0))
    throw DegenerateEnergyError(to_double(energy), "s_matrix_tr_form: denominator vanishes");
  return make_point(energy, t * (num / den));
}

#define JMNL_INSTANTIATE(T)                                                        \
  template class Pencil<T>;                                                        \
  template PencilSpectrum<T> generalized_eigen<T>(const Pencil<T>&);               \
  template Matrix<T> green_direct<T>(const Matrix<T>&, double);                    \
  template void check_pole_margin<T>(const Vector<T>&, T);                         \
  template T green_corner_spectral<T>(const Pencil<T>&, T);                        \
  template T green_corner_determinant<T>(const Pencil<T>&, T);                     \
  template T green_corner<T>(const NonlinearModel<T>&, T);                         \
  template ScatterPoint s_matrix<T>(T, const NonlinearModel<T>&);                  \
  template ScatterPoint s_matrix_tr_form<T>(T, const NonlinearModel<T>&);

JMNL_INSTANTIATE(double)
JMNL_INSTANTIATE(Quad)

#undef JMNL_INSTANTIATE

}  // namespace jmnl

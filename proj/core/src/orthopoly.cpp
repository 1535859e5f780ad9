#include "jmnl/orthopoly.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "jmnl/errors.hpp"
#include "jmnl/special.hpp"

namespace jmnl {

namespace {

template <class T>
void require_nu(T nu, const char* who) {
  if (!(nu > -1))
    throw DomainError(std::string(who) + ": nu must exceed -1, got " + std::to_string(to_double(nu)));
}

template <class T>
T alpha_of(int n, T nu) {
  return T(2 * n + 1) + nu;
}

template <class T>
T beta_of(int n, T nu) {
  using std::sqrt;
  return -sqrt(T(n + 1) * (T(n + 1) + nu));
}

}  // namespace

template <class T>
T laguerre(int n, T nu, T z) {
  require_nu(nu, "laguerre");
  if (n < 0) throw DomainError("laguerre: negative degree");
  T prev = 1;
  if (n == 0) return prev;
  T cur = T(1) + nu - z;
  for (int k = 1; k < n; ++k) {
    T next = ((T(2 * k + 1) + nu - z) * cur - (T(k) + nu) * prev) / T(k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

template <class T>
T laguerre_normalization(int n, T nu) {
  using std::exp;
  require_nu(nu, "laguerre_normalization");
  return exp((ln_gamma(T(n + 1)) - ln_gamma(T(n + 1) + nu)) / 2);
}

template <class T>
T laguerre_orthonormal(int n, T nu, T z) {
  return laguerre_normalization(n, nu) * laguerre(n, nu, z);
}

template <class T>
std::vector<T> laguerre_orthonormal_all(int count, T nu, T z) {
  require_nu(nu, "laguerre_orthonormal_all");
  std::vector<T> out(count > 0 ? count : 0);
  if (count <= 0) return out;
  out[0] = laguerre_normalization(0, nu);
  if (count == 1) return out;
  out[1] = (z - alpha_of(0, nu)) * out[0] / beta_of(0, nu);
  for (int n = 1; n + 1 < count; ++n)
    out[n + 1] = ((z - alpha_of(n, nu)) * out[n] - beta_of(n - 1, nu) * out[n - 1]) / beta_of(n, nu);
  return out;
}

template <class T>
JacobiMatrix<T>::JacobiMatrix(T nu, int size) : nu_(nu) {
  require_nu(nu, "jacobi_matrix");
  if (size < 1) throw DomainError("jacobi_matrix: size must be positive");
  diagonal_.reserve(size);
  off_diagonal_.reserve(size - 1);
  for (int n = 0; n < size; ++n) diagonal_.push_back(alpha_of(n, nu));
  for (int n = 0; n + 1 < size; ++n) off_diagonal_.push_back(beta_of(n, nu));
}

template <class T>
Matrix<T> JacobiMatrix<T>::dense() const {
  const int n = size();
  Matrix<T> j = Matrix<T>::Zero(n, n);
  for (int k = 0; k < n; ++k) j(k, k) = diagonal_[k];
  for (int k = 0; k + 1 < n; ++k) j(k, k + 1) = j(k + 1, k) = off_diagonal_[k];
  return j;
}

template <class T>
Matrix<T> JacobiMatrix<T>::apply(const Matrix<T>& x) const {
  const int n = size();
  Matrix<T> y(n, x.cols());
  for (Eigen::Index c = 0; c < x.cols(); ++c) {
    for (int r = 0; r < n; ++r) {
      T acc = diagonal_[r] * x(r, c);
      if (r > 0) acc += off_diagonal_[r - 1] * x(r - 1, c);
      if (r + 1 < n) acc += off_diagonal_[r] * x(r + 1, c);
      y(r, c) = acc;
    }
  }
  return y;
}

template <class T>
JacobiMatrix<T> jacobi_matrix(T nu, int size) {
  return JacobiMatrix<T>(nu, size);
}

template <class T>
GaussRule<T> gauss_laguerre_rule(int count, T nu) {
  using std::exp;
  require_nu(nu, "gauss_laguerre_rule");
  if (count < 1) throw DomainError("gauss_laguerre_rule: count must be positive");
  const JacobiMatrix<T> jac(nu, count);
  Vector<T> diag(count);
  Vector<T> sub(count > 1 ? count - 1 : 0);
  for (int k = 0; k < count; ++k) diag(k) = jac.alpha(k);
  for (int k = 0; k + 1 < count; ++k) sub(k) = jac.beta(k);

  Eigen::SelfAdjointEigenSolver<Matrix<T>> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw NumericalError("gauss_laguerre_rule: eigensolver failed");

  const T mass = exp(ln_gamma(T(1) + nu));
  GaussRule<T> rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  for (int k = 0; k < count; ++k) {
    const T v0 = solver.eigenvectors()(0, k);
    rule.nodes[k] = solver.eigenvalues()(k);
    rule.weights[k] = mass * v0 * v0;
  }
  return rule;
}

template <class T>
Matrix<T> matrix_polynomial(int degree, T nu, int size) {
  if (degree < 0) throw DomainError("matrix_polynomial: negative degree");
  const JacobiMatrix<T> jac(nu, size);
  Matrix<T> prev = Matrix<T>::Identity(size, size) * laguerre_normalization(0, nu);
  if (degree == 0) return prev;
  Matrix<T> cur = (jac.apply(prev) - jac.alpha(0) * prev) / beta_of(0, nu);
  for (int n = 1; n < degree; ++n) {
    Matrix<T> next = (jac.apply(cur) - jac.alpha(n) * cur - beta_of(n - 1, nu) * prev) / beta_of(n, nu);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

template <class T>
LinearizationTable<T>::LinearizationTable(T nu, int K, int N, std::vector<Matrix<T>> blocks)
    : nu_(nu), K_(K), N_(N), blocks_(std::move(blocks)) {}

template <class T>
Matrix<T> LinearizationTable<T>::summed() const {
  Matrix<T> total = Matrix<T>::Zero(N_, N_);
  for (const auto& b : blocks_) total += b;
  return total;
}

template <class T>
LinearizationTable<T> linearization_table(int K, int N, T nu, int truncation) {
  require_nu(nu, "linearization_table");
  if (K < 1 || N < 1) throw DomainError("linearization_table: K and N must be positive");
  const int size = truncation > 0 ? truncation : linearization_truncation(K, N);
  // (B_i B_i)_{n,m}, n,m < N, needs B_i rows n < N and columns < N + i,
  // which are exact once size >= N + 2i.
  if (size < N + 2 * (K - 1))
    throw DomainError("linearization_table: truncation " + std::to_string(size) + " below exactness margin");

  const JacobiMatrix<T> jac(nu, size);
  std::vector<Matrix<T>> blocks;
  blocks.reserve(K);
  Matrix<T> prev = Matrix<T>::Identity(size, size) * laguerre_normalization(0, nu);
  Matrix<T> cur;
  for (int i = 0; i < K; ++i) {
    if (i == 1) {
      cur = (jac.apply(prev) - jac.alpha(0) * prev) / beta_of(0, nu);
    } else if (i > 1) {
      Matrix<T> next =
          (jac.apply(cur) - jac.alpha(i - 1) * cur - beta_of(i - 2, nu) * prev) / beta_of(i - 1, nu);
      prev = std::move(cur);
      cur = std::move(next);
    }
    const Matrix<T>& b = (i == 0) ? prev : cur;
    // B_i has exact zeros outside bandwidth i, so the product does too.
    Matrix<T> sq = b.topRows(N) * b.leftCols(N);
    // The recurrence leaves B_i symmetric only to rounding; copy the upper
    // triangle so D[i][n][m] == D[i][m][n] holds bit for bit.
    for (int n = 0; n < N; ++n)
      for (int m = n + 1; m < N; ++m) sq(m, n) = sq(n, m);
    blocks.push_back(std::move(sq));
  }
  return LinearizationTable<T>(nu, K, N, std::move(blocks));
}

template <class T>
T linearization_identity_residual(int i, int n, T nu, T z) {
  using std::abs;
  if (i < 0 || n < 0) throw DomainError("linearization_identity_residual: negative index");
  const int top = n + 2 * i;
  const auto table = linearization_table<T>(i + 1, top + 1, nu);
  const auto lt = laguerre_orthonormal_all(top + 1, nu, z);
  const T lhs = lt[i] * lt[i] * lt[n];
  T rhs = 0;
  for (int m = 0; m <= top; ++m) rhs += table(i, n, m) * lt[m];
  const T scale = abs(lhs) > 1 ? T(abs(lhs)) : T(1);
  return abs(lhs - rhs) / scale;
}

#define JMNL_INSTANTIATE(T)                                                                 \
  template T laguerre<T>(int, T, T);                                                        \
  template T laguerre_normalization<T>(int, T);                                             \
  template T laguerre_orthonormal<T>(int, T, T);                                            \
  template std::vector<T> laguerre_orthonormal_all<T>(int, T, T);                           \
  template class JacobiMatrix<T>;                                                           \
  template JacobiMatrix<T> jacobi_matrix<T>(T, int);                                        \
  template GaussRule<T> gauss_laguerre_rule<T>(int, T);                                     \
  template Matrix<T> matrix_polynomial<T>(int, T, int);                                     \
  template class LinearizationTable<T>;                                                     \
  template LinearizationTable<T> linearization_table<T>(int, int, T, int);                  \
  template T linearization_identity_residual<T>(int, int, T, T);

JMNL_INSTANTIATE(double)
JMNL_INSTANTIATE(Quad)

#undef JMNL_INSTANTIATE

}  // namespace jmnl

#pragma once

// Orthonormal Laguerre polynomials, their Jacobi matrix, Gauss-Laguerre
// rules, and the coefficients that linearize the triple product
// Lt_i(z) Lt_i(z) Lt_n(z) = sum_m D[i][n][m] Lt_m(z).
//
// Lt_n = A_n L_n^nu with A_n = sqrt(Gamma(n+1) / Gamma(n+nu+1)) is the
// orthonormal Laguerre polynomial for the weight z^nu e^-z on (0, inf).
// It obeys the symmetric recurrence
//   z Lt_n = alpha_n Lt_n + beta_n Lt_{n+1} + beta_{n-1} Lt_{n-1}
// with alpha_n = 2n + nu + 1 and beta_n = -sqrt((n+1)(n+nu+1)).

#include <vector>

#include "jmnl/real.hpp"

namespace jmnl {

/// Classical Laguerre polynomial L_n^nu(z) by upward degree recurrence.
template <class T>
T laguerre(int n, T nu, T z);

/// Normalization A_n, evaluated in log space so it never overflows.
template <class T>
T laguerre_normalization(int n, T nu);

template <class T>
T laguerre_orthonormal(int n, T nu, T z);

/// Lt_0(z) .. Lt_{count-1}(z) in one pass of the symmetric recurrence.
template <class T>
std::vector<T> laguerre_orthonormal_all(int count, T nu, T z);

/// Truncated Jacobi matrix of the orthonormal Laguerre recurrence.
template <class T>
class JacobiMatrix {
 public:
  JacobiMatrix(T nu, int size);

  T nu() const { return nu_; }
  int size() const { return static_cast<int>(diagonal_.size()); }
  /// alpha_n, n < size
  const std::vector<T>& diagonal() const { return diagonal_; }
  /// beta_n, n < size - 1
  const std::vector<T>& off_diagonal() const { return off_diagonal_; }

  T alpha(int n) const { return diagonal_[n]; }
  T beta(int n) const { return off_diagonal_[n]; }

  Matrix<T> dense() const;
  /// Returns J * x without forming J.
  Matrix<T> apply(const Matrix<T>& x) const;

 private:
  T nu_;
  std::vector<T> diagonal_;
  std::vector<T> off_diagonal_;
};

template <class T>
JacobiMatrix<T> jacobi_matrix(T nu, int size);

/// Gauss rule for int_0^inf f(z) z^nu e^-z dz, exact through degree
/// 2*count - 1. Golub-Welsch: nodes are the eigenvalues of the count x count
/// Jacobi matrix, weights Gamma(nu+1) times the squared first eigenvector
/// components.
template <class T>
struct GaussRule {
  std::vector<T> nodes;
  std::vector<T> weights;
};

template <class T>
GaussRule<T> gauss_laguerre_rule(int count, T nu);

/// B_i = Lt_i(J) for the size x size truncation of J, built by running the
/// three-term recurrence on matrices. Rows/columns n, m with
/// max(n, m) + degree < size agree with the infinite-matrix polynomial.
template <class T>
Matrix<T> matrix_polynomial(int degree, T nu, int size);

/// Truncation used internally for a table with K degrees and N outputs.
inline int linearization_truncation(int K, int N) { return N + 2 * K + 4; }

/// D[i][n][m] = (B_i B_i)_{n,m} for 0 <= i < K, 0 <= n, m < N.
template <class T>
class LinearizationTable {
 public:
  LinearizationTable(T nu, int K, int N, std::vector<Matrix<T>> blocks);

  T nu() const { return nu_; }
  int K() const { return K_; }
  int N() const { return N_; }

  T operator()(int i, int n, int m) const { return blocks_[i](n, m); }
  const Matrix<T>& block(int i) const { return blocks_[i]; }

  /// sum_i D[i], the Lambda matrix of the nonlinear term.
  Matrix<T> summed() const;

 private:
  T nu_;
  int K_;
  int N_;
  std::vector<Matrix<T>> blocks_;
};

/// Builds the table using a Jacobi truncation of `truncation` rows
/// (default linearization_truncation(K, N)). Truncations below N + 2K - 2
/// are rejected because they would leak truncation error into the block.
template <class T>
LinearizationTable<T> linearization_table(int K, int N, T nu, int truncation = 0);

/// |Lt_i^2 Lt_n - sum_{m <= n+2i} D[i][n][m] Lt_m| / max(1, |Lt_i^2 Lt_n|).
template <class T>
T linearization_identity_residual(int i, int n, T nu, T z);

}  // namespace jmnl

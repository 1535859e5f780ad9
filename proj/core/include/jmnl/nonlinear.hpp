#pragma once

// Nonlinear interaction of the toy model. With alpha^{ij}_{nm} = g
// delta_nm delta^ij and the weighted-Laguerre ansatz
//   f_n(E) = w(E) Lt_n^nu(mu^2),
// the quartic self-interaction becomes the energy-dependent block
//   W(E) = g w(E)^2 Lambda,   Lambda = sum_{i<K} D[i]   (N x N),
// which is added to H0 on the same N x N block (potential range M = N).

#include <string>

#include "jmnl/orthopoly.hpp"
#include "jmnl/real.hpp"
#include "jmnl/reference.hpp"

namespace jmnl {

enum class WeightChoice {
  fig1,  ///< w = mu^(2 nu) exp(-mu^2)
  sine,  ///< w = 2 mu^(l+1) exp(-mu^2/2); with nu = l+1/2, f_n = (-1)^n s_n
};

std::string to_string(WeightChoice w);
WeightChoice parse_weight_choice(const std::string& text);

struct ModelConfig {
  BasisParams basis{5.0, 1};
  double g = 2.0;
  double nu = 1.0;
  int N = 20;
  int K = 8;
  WeightChoice weight = WeightChoice::fig1;

  /// Throws DomainError naming the first violated constraint:
  /// N >= 2, 1 <= K <= N, nu > -1, g finite, plus BasisParams::validate.
  void validate() const;

  /// l = 1, g = 2, lambda = 5, N = 20, K = 8, fig1 weight.
  static ModelConfig published(double nu = 1.0);
};

template <class T>
T weight(T energy, const ModelConfig& config);

/// f_n(E) for n < count.
template <class T>
CoefficientVector<T> ansatz_coefficients(T energy, const ModelConfig& config, int count);

/// Lambda with its spectrum. The spectrum doubles as a positive-definiteness
/// certificate: construction fails unless sigma_min > 8 N eps ||Lambda||_2,
/// the resolution limit of the symmetric eigensolver in precision T.
template <class T>
class LambdaMatrix {
 public:
  LambdaMatrix(Matrix<T> entries, T nu, int K);

  const Matrix<T>& entries() const { return entries_; }
  T nu() const { return nu_; }
  int K() const { return K_; }
  int size() const { return static_cast<int>(entries_.rows()); }

  /// Eigenvalues sigma_n, ascending.
  const Vector<T>& eigenvalues() const { return sigma_; }
  /// Orthonormal eigenvectors (columns), matching eigenvalues().
  const Matrix<T>& eigenvectors() const { return vectors_; }
  T min_eigenvalue() const { return sigma_(0); }
  T max_eigenvalue() const { return sigma_(sigma_.size() - 1); }
  /// The acceptance threshold the minimum eigenvalue was checked against.
  T certificate_threshold() const { return threshold_; }

 private:
  Matrix<T> entries_;
  T nu_;
  int K_;
  Vector<T> sigma_;
  Matrix<T> vectors_;
  T threshold_;
};

/// Sums the linearization table. Throws InvariantViolation if Lambda is not
/// certified positive definite.
template <class T>
LambdaMatrix<T> lambda_matrix(const ModelConfig& config);

/// Omega = Q U^T with Q = diag(1/sqrt(sigma)), so Omega Lambda Omega^T = I.
template <class T>
struct OmegaTransform {
  Matrix<T> omega;
  Matrix<T> U;
  Vector<T> q;  ///< diagonal of Q
};

/// Throws NumericalError if ||Omega Lambda Omega^T - I||_max >= 1e-10.
template <class T>
OmegaTransform<T> omega_transform(const LambdaMatrix<T>& lambda);

/// H0 + g w(E)^2 Lambda - E on the N x N block.
template <class T>
Matrix<T> wave_operator(T energy, const ModelConfig& config, const LambdaMatrix<T>& lambda);

/// Config plus the energy-independent pieces (Lambda, H0 block), built once
/// and shared read-only across energies.
template <class T>
class NonlinearModel {
 public:
  explicit NonlinearModel(const ModelConfig& config);

  const ModelConfig& config() const { return config_; }
  const LambdaMatrix<T>& lambda() const { return lambda_; }
  const Matrix<T>& h0() const { return h0_; }
  int size() const { return config_.N; }

  /// H0 + g w(E)^2 Lambda: the energy-dependent Hamiltonian block.
  Matrix<T> hamiltonian(T energy) const;
  Matrix<T> wave_operator(T energy) const;

 private:
  ModelConfig config_;
  LambdaMatrix<T> lambda_;
  Matrix<T> h0_;
};

}  // namespace jmnl

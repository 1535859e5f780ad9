#include "jmnl/nonlinear.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "jmnl/errors.hpp"

namespace jmnl {

std::string to_string(WeightChoice w) {
  return w == WeightChoice::fig1 ? "fig1" : "sine";
}

WeightChoice parse_weight_choice(const std::string& text) {
  if (text == "fig1") return WeightChoice::fig1;
  if (text == "sine") return WeightChoice::sine;
  throw DomainError("unknown weight '" + text + "' (expected fig1 or sine)");
}

void ModelConfig::validate() const {
  basis.validate();
  if (N < 2) throw DomainError("N must be at least 2");
  if (K < 1) throw DomainError("K must be at least 1");
  if (K > N) throw DomainError("K must not exceed N");
  if (!(nu > -1)) throw DomainError("nu must exceed -1");
  if (!std::isfinite(g)) throw DomainError("g must be finite");
}

ModelConfig ModelConfig::published(double nu) {
  ModelConfig c;
  c.nu = nu;
  return c;
}

template <class T>
T weight(T energy, const ModelConfig& config) {
  using std::exp;
  using std::pow;
  const auto kin = Kinematics<T>::from_energy(energy, config.basis);
  const T x = kin.mu * kin.mu;
  switch (config.weight) {
    case WeightChoice::fig1:
      return pow(kin.mu, 2 * T(config.nu)) * exp(-x);
    case WeightChoice::sine:
      return 2 * pow(kin.mu, config.basis.ell + 1) * exp(-x / 2);
  }
  return T(0);
}

template <class T>
CoefficientVector<T> ansatz_coefficients(T energy, const ModelConfig& config, int count) {
  const auto kin = Kinematics<T>::from_energy(energy, config.basis);
  const T w = weight(energy, config);
  auto lt = laguerre_orthonormal_all(count, T(config.nu), kin.mu * kin.mu);
  for (auto& v : lt) v *= w;
  return CoefficientVector<T>{CoefficientKind::ansatz, energy, std::move(lt)};
}

template <class T>
LambdaMatrix<T>::LambdaMatrix(Matrix<T> entries, T nu, int K)
    : entries_(std::move(entries)), nu_(nu), K_(K) {
  Eigen::SelfAdjointEigenSolver<Matrix<T>> solver(entries_);
  if (solver.info() != Eigen::Success) throw NumericalError("lambda_matrix: eigensolver failed");
  sigma_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
  const T norm = sigma_.cwiseAbs().maxCoeff();
  threshold_ = T(8) * T(size()) * epsilon<T>() * norm;
  if (!(sigma_(0) > threshold_)) {
    std::ostringstream msg;
    msg << "lambda_matrix: positive definiteness not certified (nu = " << to_double(nu_) << ", K = " << K_
        << ", N = " << size() << "): sigma_min = " << to_double(sigma_(0))
        << ", resolution limit = " << to_double(threshold_);
    throw InvariantViolation(msg.str());
  }
}

template <class T>
LambdaMatrix<T> lambda_matrix(const ModelConfig& config) {
  config.validate();
  const auto table = linearization_table<T>(config.K, config.N, T(config.nu));
  return LambdaMatrix<T>(table.summed(), T(config.nu), config.K);
}

template <class T>
OmegaTransform<T> omega_transform(const LambdaMatrix<T>& lambda) {
  using std::sqrt;
  OmegaTransform<T> out;
  out.U = lambda.eigenvectors();
  out.q = lambda.eigenvalues().unaryExpr([](const T& s) { return T(1) / sqrt(s); });
  out.omega = out.q.asDiagonal() * out.U.transpose();
  const Matrix<T> check = out.omega * lambda.entries() * out.omega.transpose() -
                          Matrix<T>::Identity(lambda.size(), lambda.size());
  const T err = max_abs(check);
  if (!(err < T(1e-10))) {
    std::ostringstream msg;
    msg << "omega_transform: ||Omega Lambda Omega^T - I||_max = " << to_double(err);
    throw NumericalError(msg.str());
  }
  return out;
}

template <class T>
Matrix<T> wave_operator(T energy, const ModelConfig& config, const LambdaMatrix<T>& lambda) {
  const T w = weight(energy, config);
  Matrix<T> op = h0_block<T>(config.N, config.basis) + (T(config.g) * w * w) * lambda.entries();
  op.diagonal().array() -= energy;
  return op;
}

template <class T>
NonlinearModel<T>::NonlinearModel(const ModelConfig& config)
    : config_(config), lambda_(lambda_matrix<T>(config)), h0_(h0_block<T>(config.N, config.basis)) {}

template <class T>
Matrix<T> NonlinearModel<T>::hamiltonian(T energy) const {
  const T w = weight(energy, config_);
  return h0_ + (T(config_.g) * w * w) * lambda_.entries();
}

template <class T>
Matrix<T> NonlinearModel<T>::wave_operator(T energy) const {
  Matrix<T> op = hamiltonian(energy);
  op.diagonal().array() -= energy;
  return op;
}

#define JMNL_INSTANTIATE(T)                                                                   \
  template T weight<T>(T, const ModelConfig&);                                                \
  template CoefficientVector<T> ansatz_coefficients<T>(T, const ModelConfig&, int);           \
  template class LambdaMatrix<T>;                                                             \
  template LambdaMatrix<T> lambda_matrix<T>(const ModelConfig&);                              \
  template OmegaTransform<T> omega_transform<T>(const LambdaMatrix<T>&);                      \
  template Matrix<T> wave_operator<T>(T, const ModelConfig&, const LambdaMatrix<T>&);         \
  template class NonlinearModel<T>;

JMNL_INSTANTIATE(double)
JMNL_INSTANTIATE(Quad)

#undef JMNL_INSTANTIATE

}  // namespace jmnl

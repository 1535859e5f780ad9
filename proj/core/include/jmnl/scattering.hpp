#pragma once

// Finite Green's function of the N x N block and the elastic S-matrix
//
//   S(E) = [c_{N-1} - i s_{N-1} + b_{N-1} G (c_N - i s_N)]
//        / [c_{N-1} + i s_{N-1} + b_{N-1} G (c_N + i s_N)],
//
// with G = G_{N-1,N-1}(E) the corner of the inverse wave operator.
//
// Three routes to the corner are provided: direct inversion (normative),
// the spectral sum over generalized eigenpairs of a pencil (A, B), and a
// ratio of eigenvalue products that needs no eigenvectors.

#include <complex>
#include <limits>
#include <string>

#include "jmnl/nonlinear.hpp"
#include "jmnl/real.hpp"

namespace jmnl {

/// Energies closer than this (relative) to a pencil eigenvalue are poles.
inline constexpr double kPoleMargin = 1e-6;

/// Symmetric-definite pencil (A, B). Construction checks exact symmetry
/// and that B admits a Cholesky factorization.
template <class T>
class Pencil {
 public:
  Pencil(Matrix<T> a, Matrix<T> b, std::string label = {});

  const Matrix<T>& a() const { return a_; }
  const Matrix<T>& b() const { return b_; }
  const std::string& label() const { return label_; }
  int size() const { return static_cast<int>(a_.rows()); }

  /// The pencil with the last row and column removed from both matrices.
  Pencil deflated() const;

 private:
  Matrix<T> a_;
  Matrix<T> b_;
  std::string label_;
};

template <class T>
struct PencilSpectrum {
  Vector<T> eigenvalues;   ///< epsilon_n, ascending
  Matrix<T> eigenvectors;  ///< Gamma, columns, Gamma^T B Gamma = I
  Vector<T> tau;           ///< (Gamma^T B Gamma)_nn
};

/// Cholesky reduction to a standard symmetric problem.
template <class T>
PencilSpectrum<T> generalized_eigen(const Pencil<T>& pencil);

/// Inverse of the wave operator with one step of iterative refinement.
/// Throws PoleError (tagged with `energy`) when ||W G - I||_max >= 1e-9 or
/// the factorization breaks down.
template <class T>
Matrix<T> green_direct(const Matrix<T>& wave_op, double energy = std::numeric_limits<double>::quiet_NaN());

/// G_{N-1,N-1}(E) = sum_m Gamma_{N-1,m}^2 / (tau_m (eps_m - E)).
template <class T>
T green_corner_spectral(const Pencil<T>& pencil, T energy);

/// G_{N-1,N-1}(E) = (prod xi~ / prod xi) prod (eps~_m - E) / prod (eps_n - E),
/// with eps~, xi~ from the deflated pencil and xi the eigenvalues of B.
/// The products are accumulated as interleaved ratios, so they never
/// overflow.
template <class T>
T green_corner_determinant(const Pencil<T>& pencil, T energy);

/// Throws PoleError when `energy` is within kPoleMargin (relative) of one
/// of `eigenvalues`.
template <class T>
void check_pole_margin(const Vector<T>& eigenvalues, T energy);

struct ScatterPoint {
  double energy = 0;
  std::complex<double> S{1.0, 0.0};
  double delta = 0;      ///< arg(S)/2 in (-pi/2, pi/2]
  double amplitude = 0;  ///< |1 - S|
};

/// Normative Green's corner of the model at energy E: pole check against
/// the eigenvalues of H0 + g w^2 Lambda, then direct inversion.
template <class T>
T green_corner(const NonlinearModel<T>& model, T energy);

/// S-matrix from the first (c, s, b G) form.
template <class T>
ScatterPoint s_matrix(T energy, const NonlinearModel<T>& model);

template <class T>
ScatterPoint s_matrix(T energy, const ModelConfig& config) {
  return s_matrix(energy, NonlinearModel<T>(config));
}

/// S = T_{N-1} (1 + G J_{N-1,N} R^-_N) / (1 + G J_{N-1,N} R^+_N) with
/// T_n = (c_n - i s_n)/(c_n + i s_n) and
/// R^+-_n = (c_n +- i s_n)/(c_{n-1} +- i s_{n-1}).
template <class T>
ScatterPoint s_matrix_tr_form(T energy, const NonlinearModel<T>& model);

template <class T>
ScatterPoint s_matrix_tr_form(T energy, const ModelConfig& config) {
  return s_matrix_tr_form(energy, NonlinearModel<T>(config));
}

}  // namespace jmnl

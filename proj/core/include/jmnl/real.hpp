#pragma once

// Scalar types and dense matrix aliases shared by every module.
//
// Kernels are templated on the scalar and instantiated for `double` and
// `Quad` (IEEE binary128 via libquadmath). The Lambda matrix of the toy
// model is graded over ~17 decades at the published parameters, so the
// scattering pipeline runs in Quad by default.

#include <limits>

#include <boost/multiprecision/float128.hpp>
#include <Eigen/Core>

namespace jmnl {

using Quad = boost::multiprecision::float128;

}  // namespace jmnl

namespace Eigen {

// boost/multiprecision/eigen.hpp (boost 1.74) predates Eigen 3.4's use of
// NumTraits<T>::infinity(); GenericNumTraits supplies it from numeric_limits.
template <>
struct NumTraits<jmnl::Quad> : GenericNumTraits<jmnl::Quad> {
  using Real = jmnl::Quad;
  using NonInteger = jmnl::Quad;
  using Nested = jmnl::Quad;
  using Literal = jmnl::Quad;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static inline int digits10() { return std::numeric_limits<jmnl::Quad>::digits10; }
};

}  // namespace Eigen

namespace jmnl {

template <class T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

template <class T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

/// Machine epsilon of the working precision.
template <class T>
constexpr T epsilon() {
  return std::numeric_limits<T>::epsilon();
}

template <class T>
inline double to_double(const T& x) {
  return static_cast<double>(x);
}

template <class T>
Matrix<double> to_double(const Matrix<T>& m) {
  Matrix<double> out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = static_cast<double>(m(i, j));
  return out;
}

/// Largest absolute entry; the norm used for every "within tol" matrix check.
template <class T>
T max_abs(const Matrix<T>& m) {
  T best = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      T v = m(i, j) < 0 ? T(-m(i, j)) : m(i, j);
      if (v > best) best = v;
    }
  return best;
}

}  // namespace jmnl

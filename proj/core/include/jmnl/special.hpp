#pragma once

#include <boost/math/constants/constants.hpp>

#include "jmnl/real.hpp"

namespace jmnl {

template <class T>
inline T pi() {
  return boost::math::constants::pi<T>();
}

/// Natural log of Gamma(x) for x > 0. Throws DomainError otherwise.
template <class T>
T ln_gamma(T x);

/// Dawson's integral F(x) = exp(-x^2) * int_0^x exp(t^2) dt.
///
/// Evaluated from the positive-term series exp(-x^2) sum x^(2k+1)/(k!(2k+1))
/// for |x| <= 10 and from the asymptotic expansion beyond, where its
/// optimally truncated error is below exp(-100).
template <class T>
T dawson(T x);

}  // namespace jmnl

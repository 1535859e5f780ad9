#include "jmnl/special.hpp"

#include <cmath>
#include <string>

#include "jmnl/errors.hpp"

namespace jmnl {

template <class T>
T ln_gamma(T x) {
  using std::lgamma;
  if (!(x > 0)) throw DomainError("ln_gamma: argument must be positive, got " + std::to_string(to_double(x)));
  return lgamma(x);
}

template <class T>
T dawson(T x) {
  using std::abs;
  using std::exp;
  if (x < 0) return -dawson(T(-x));
  if (x == 0) return T(0);
  const T x2 = x * x;
  if (x <= 10) {
    // term_k = x^(2k+1)/k!, summed as term_k/(2k+1)
    T term = x;
    T sum = x;
    for (int k = 1; k < 2000; ++k) {
      term *= x2 / k;
      const T add = term / (2 * k + 1);
      sum += add;
      if (add < sum * epsilon<T>()) break;
    }
    return exp(-x2) * sum;
  }
  // F(x) ~ 1/(2x) * sum_k (2k-1)!! / (2x^2)^k
  T term = 1;
  T sum = 1;
  for (int k = 1; k < 200; ++k) {
    const T next = term * (2 * k - 1) / (2 * x2);
    if (abs(next) >= abs(term)) break;
    term = next;
    sum += term;
    if (abs(term) < epsilon<T>() * abs(sum)) break;
  }
  return sum / (2 * x);
}

template double ln_gamma<double>(double);
template Quad ln_gamma<Quad>(Quad);
template double dawson<double>(double);
template Quad dawson<Quad>(Quad);

}  // namespace jmnl

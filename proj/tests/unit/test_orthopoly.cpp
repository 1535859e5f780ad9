#include <doctest.h>

#include <cmath>
#include <random>

#include "jmnl/errors.hpp"
#include "jmnl/orthopoly.hpp"
#include "jmnl/special.hpp"
#include "oracles.hpp"

using jmnl::Quad;

TEST_CASE("laguerre matches the explicit sum") {
  for (double nu : {-0.5, 0.0, 1.0, 2.5, 7.0})
    for (int n : {0, 1, 2, 5, 9, 14})
      for (double z : {0.0, 0.3, 2.0, 7.5, 20.0}) {
        const double ref = static_cast<double>(oracle::laguerre_series(n, nu, z));
        CHECK(jmnl::laguerre(n, nu, z) == doctest::Approx(ref).epsilon(1e-10).scale(1.0));
      }
}

TEST_CASE("laguerre edge values") {
  // L_n^nu(0) = C(n+nu, n)
  CHECK(jmnl::laguerre(3, 1.0, 0.0) == doctest::Approx(4.0));
  CHECK(jmnl::laguerre(0, 2.0, 5.0) == 1.0);
  CHECK(jmnl::laguerre(1, 0.0, 1.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(jmnl::laguerre(2, -1.0, 1.0), jmnl::DomainError);
  CHECK_THROWS_AS(jmnl::laguerre(-1, 0.0, 1.0), jmnl::DomainError);
}

TEST_CASE("symmetric recurrence reproduces normalized polynomials") {
  const auto all = jmnl::laguerre_orthonormal_all(12, Quad(1.5), Quad(3.25));
  for (int n = 0; n < 12; ++n) {
    const Quad direct = jmnl::laguerre_orthonormal(n, Quad(1.5), Quad(3.25));
    CHECK(jmnl::to_double(abs(all[n] - direct)) < 1e-28);
  }
  CHECK(jmnl::laguerre_orthonormal_all(0, 1.0, 1.0).empty());
}

TEST_CASE("orthonormality by Gauss-Laguerre quadrature") {
  for (double nu : {-0.5, 0.0, 2.5}) {
    const auto rule = jmnl::gauss_laguerre_rule(30, Quad(nu));
    for (int n = 0; n < 8; ++n)
      for (int m = 0; m < 8; ++m) {
        Quad sum = 0;
        for (int k = 0; k < 30; ++k)
          sum += rule.weights[k] * jmnl::laguerre_orthonormal(n, Quad(nu), rule.nodes[k]) *
                 jmnl::laguerre_orthonormal(m, Quad(nu), rule.nodes[k]);
        CHECK(jmnl::to_double(sum) == doctest::Approx(n == m ? 1.0 : 0.0).epsilon(1e-20).scale(1.0));
      }
  }
}

TEST_CASE("Gauss rule integrates monomials exactly") {
  const double nu = 0.75;
  const auto rule = jmnl::gauss_laguerre_rule(10, Quad(nu));
  for (int k = 0; k < 20; ++k) {
    Quad sum = 0;
    for (int j = 0; j < 10; ++j) sum += rule.weights[j] * pow(rule.nodes[j], k);
    const Quad exact = exp(jmnl::ln_gamma(Quad(k + 1 + nu)));
    CHECK(jmnl::to_double(abs(sum / exact - 1)) < 1e-28);
  }
  CHECK_THROWS_AS(jmnl::gauss_laguerre_rule(0, 1.0), jmnl::DomainError);
}

TEST_CASE("Jacobi matrix entries and apply") {
  const auto j = jmnl::jacobi_matrix(1.0, 5);
  CHECK(j.alpha(0) == 2.0);
  CHECK(j.alpha(3) == 8.0);
  CHECK(j.beta(0) == doctest::Approx(-std::sqrt(2.0)));
  const jmnl::Matrix<double> x = jmnl::Matrix<double>::Random(5, 3);
  CHECK((j.apply(x) - j.dense() * x).cwiseAbs().maxCoeff() < 1e-14);
  CHECK_THROWS_AS(jmnl::jacobi_matrix(-1.0, 3), jmnl::DomainError);
}

TEST_CASE("matrix polynomial maps e_0 to Lt_0 e_i") {
  const Quad nu = 2.5;
  const int size = 12;
  for (int i = 0; i < 6; ++i) {
    const auto b = jmnl::matrix_polynomial(i, nu, size);
    const Quad p0 = jmnl::laguerre_normalization(0, nu);
    for (int n = 0; n < size; ++n)
      CHECK(jmnl::to_double(abs(b(n, 0) - (n == i ? p0 : Quad(0)))) < 1e-28);
  }
}

TEST_CASE("linearization table is symmetric and banded") {
  const auto t = jmnl::linearization_table(5, 12, Quad(1.0));
  for (int i = 0; i < 5; ++i)
    for (int n = 0; n < 12; ++n)
      for (int m = 0; m < 12; ++m) {
        CHECK(t(i, n, m) == t(i, m, n));
        if (std::abs(n - m) > 2 * i) CHECK(t(i, n, m) == 0);
      }
  // D[0] = Lt_0^2 I
  const Quad p0sq = 1 / exp(jmnl::ln_gamma(Quad(2)));
  CHECK(jmnl::to_double(abs(t(0, 3, 3) - p0sq)) < 1e-30);
  CHECK_THROWS_AS(jmnl::linearization_table(5, 12, Quad(1.0), 12 + 7), jmnl::DomainError);
}

TEST_CASE("linearization identity holds pointwise") {
  for (double nu : {0.0, 1.0, 2.5})
    for (int i = 0; i < 4; ++i)
      for (int n = 0; n < 8; ++n)
        for (double z : {0.0, 0.7, 5.0, 17.0, 30.0})
          CHECK(jmnl::to_double(jmnl::linearization_identity_residual(i, n, Quad(nu), Quad(z))) < 1e-20);
}

TEST_CASE("linearization coefficients match quadrature of Lt_i^2 Lt_n Lt_m") {
  const double nu = 1.0;
  const auto table = jmnl::linearization_table(4, 8, Quad(nu));
  const auto rule = jmnl::gauss_laguerre_rule(20, Quad(nu));
  for (int i = 0; i < 4; ++i)
    for (int n = 0; n < 8; ++n)
      for (int m = 0; m < 8; ++m) {
        Quad sum = 0;
        for (int k = 0; k < 20; ++k) {
          const auto lt = jmnl::laguerre_orthonormal_all(8, Quad(nu), rule.nodes[k]);
          sum += rule.weights[k] * lt[i] * lt[i] * lt[n] * lt[m];
        }
        CHECK(jmnl::to_double(abs(sum - table(i, n, m))) < 1e-25 * std::max(1.0, jmnl::to_double(abs(sum))));
      }
}

TEST_CASE("double and quad tables agree") {
  const auto td = jmnl::linearization_table(3, 6, 0.5);
  const auto tq = jmnl::linearization_table(3, 6, Quad(0.5));
  for (int i = 0; i < 3; ++i)
    CHECK((td.block(i) - jmnl::to_double(tq.block(i))).cwiseAbs().maxCoeff() < 1e-10);
}

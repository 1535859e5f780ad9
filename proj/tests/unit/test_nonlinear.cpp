#include <doctest.h>

#include <cmath>
#include <random>

#include "jmnl/errors.hpp"
#include "jmnl/nonlinear.hpp"
#include "jmnl/special.hpp"

using jmnl::ModelConfig;
using jmnl::Quad;
using jmnl::WeightChoice;

namespace {

ModelConfig unit_lambda(double nu, WeightChoice w, int ell = 0) {
  ModelConfig c = ModelConfig::published(nu);
  c.basis = {1.0, ell};
  c.weight = w;
  return c;
}

template <class T>
double identity_error(const jmnl::OmegaTransform<T>& om, const jmnl::Matrix<T>& lambda) {
  const auto n = lambda.rows();
  return jmnl::to_double(jmnl::max_abs(jmnl::Matrix<T>(om.omega * lambda * om.omega.transpose() - jmnl::Matrix<T>::Identity(n, n))));
}

}  // namespace

TEST_CASE("weight functions") {
  // mu = 1 at E = 1/2 with lambda = 1
  CHECK(jmnl::weight(0.5, unit_lambda(1.0, WeightChoice::fig1)) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(jmnl::weight(0.5, unit_lambda(1.0, WeightChoice::sine)) == doctest::Approx(2 * std::exp(-0.5)).epsilon(1e-14));
  CHECK(jmnl::weight(0.5, unit_lambda(1.0, WeightChoice::sine)) == doctest::Approx(1.2130613).epsilon(1e-7));
  CHECK(std::abs(jmnl::weight(1e-14, unit_lambda(1.0, WeightChoice::fig1))) < 1e-12);
}

TEST_CASE("weight choice names round-trip") {
  for (auto w : {WeightChoice::fig1, WeightChoice::sine}) CHECK(jmnl::parse_weight_choice(jmnl::to_string(w)) == w);
  CHECK_THROWS_AS(jmnl::parse_weight_choice("gauss"), jmnl::DomainError);
}

TEST_CASE("ansatz coefficients") {
  const auto c = unit_lambda(2.0, WeightChoice::fig1);
  const auto f = jmnl::ansatz_coefficients(1.3, c, 5);
  CHECK(f[0] == doctest::Approx(jmnl::weight(1.3, c) / std::sqrt(std::tgamma(3.0))).epsilon(1e-14));

  // With nu = l + 1/2 and the sine weight, f_n = (-1)^n s_n.
  for (int ell : {0, 1, 2}) {
    const auto cs = unit_lambda(ell + 0.5, WeightChoice::sine, ell);
    const auto fs = jmnl::ansatz_coefficients(Quad(0.9), cs, 12);
    const auto s = jmnl::sine_coefficients(Quad(0.9), cs.basis, 12);
    for (int n = 0; n < 12; ++n) {
      const Quad sign = (n % 2) ? -1 : 1;
      CHECK(jmnl::to_double(abs(fs[n] - sign * s[n])) < 1e-30);
    }
  }
}

TEST_CASE("ansatz coefficients stay finite") {
  for (double nu : {-0.9, 0.0, 3.5, 8.0})
    for (auto w : {WeightChoice::fig1, WeightChoice::sine})
      for (double e : {0.01, 1.0, 5.0, 10.0}) {
        ModelConfig c = ModelConfig::published(nu);
        c.weight = w;
        for (double v : jmnl::ansatz_coefficients(e, c, 41).values) CHECK(std::isfinite(v));
      }
}

TEST_CASE("model config validation") {
  ModelConfig c = ModelConfig::published();
  CHECK_NOTHROW(c.validate());
  c.K = 21;
  CHECK_THROWS_AS(c.validate(), jmnl::DomainError);
  c = ModelConfig::published();
  c.N = 1;
  CHECK_THROWS_AS(c.validate(), jmnl::DomainError);
  c = ModelConfig::published(-1.0);
  CHECK_THROWS_AS(c.validate(), jmnl::DomainError);
  c = ModelConfig::published();
  c.g = 0;
  CHECK_NOTHROW(c.validate());
}

TEST_CASE("Lambda for K = 1 is a multiple of the identity") {
  for (double nu : {0.0, 1.0, 2.5}) {
    ModelConfig c = ModelConfig::published(nu);
    c.K = 1;
    c.N = 6;
    const auto l = jmnl::lambda_matrix<Quad>(c);
    const Quad expect = 1 / exp(jmnl::ln_gamma(Quad(nu + 1)));
    CHECK(jmnl::to_double(jmnl::max_abs(jmnl::Matrix<Quad>(l.entries() - expect * jmnl::Matrix<Quad>::Identity(6, 6)))) < 1e-30);
  }
}

TEST_CASE("Lambda is positive definite for the published configurations") {
  for (int nu = 1; nu <= 7; ++nu) {
    const auto l = jmnl::lambda_matrix<Quad>(ModelConfig::published(nu));
    CHECK(l.min_eigenvalue() > 0);
    CHECK(l.min_eigenvalue() > l.certificate_threshold());
    CHECK(l.entries() == l.entries().transpose());
    CHECK(l.nu() == nu);
    CHECK(l.K() == 8);
  }
}

TEST_CASE("Lambda positivity: random (nu, K, N) draws give positive definite Lambda") {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> unu(-1.0, 8.0);
  for (int k = 0; k < 200; ++k) {
    double nu = unu(rng);
    if (nu <= -1) nu = -0.999;
    const int N = std::uniform_int_distribution<int>(2, 24)(rng);
    const int K = std::uniform_int_distribution<int>(1, std::min(10, N))(rng);
    ModelConfig c = ModelConfig::published(nu);
    c.N = N;
    c.K = K;
    CAPTURE(nu);
    CAPTURE(N);
    CAPTURE(K);
    const auto l = jmnl::lambda_matrix<Quad>(c);
    CHECK(l.min_eigenvalue() > 0);
  }
}

TEST_CASE("certificate rejects an indefinite matrix") {
  jmnl::Matrix<double> m(2, 2);
  m << 1, 2, 2, 1;
  CHECK_THROWS_AS(jmnl::LambdaMatrix<double>(m, 1.0, 1), jmnl::InvariantViolation);
}

TEST_CASE("Omega transform whitens Lambda") {
  const jmnl::Matrix<double> id = jmnl::Matrix<double>::Identity(3, 3);
  const auto om_id = jmnl::omega_transform(jmnl::LambdaMatrix<double>(id, 0.0, 1));
  CHECK((om_id.omega * om_id.omega.transpose() - id).cwiseAbs().maxCoeff() < 1e-14);

  jmnl::Matrix<double> d = jmnl::Matrix<double>::Zero(2, 2);
  d(0, 0) = 4;
  d(1, 1) = 1;
  const auto om_d = jmnl::omega_transform(jmnl::LambdaMatrix<double>(d, 0.0, 1));
  CHECK(identity_error(om_d, d) < 1e-14);

  ModelConfig c = ModelConfig::published(2.0);
  const auto l = jmnl::lambda_matrix<Quad>(c);
  const auto om = jmnl::omega_transform(l);
  CHECK(identity_error(om, l.entries()) < 1e-10);
  for (Eigen::Index n = 0; n < om.q.size(); ++n) CHECK(jmnl::to_double(abs(om.q(n) * om.q(n) * l.eigenvalues()(n) - 1)) < 1e-30);
}

TEST_CASE("wave operator") {
  ModelConfig c = ModelConfig::published(1.0);
  const auto l = jmnl::lambda_matrix<Quad>(c);

  SUBCASE("symmetric") {
    const auto w = jmnl::wave_operator(Quad(3.0), c, l);
    CHECK(w == w.transpose());
  }
  SUBCASE("zero coupling gives H0 - E") {
    ModelConfig c0 = c;
    c0.g = 0;
    const auto w = jmnl::wave_operator(Quad(2.2), c0, l);
    jmnl::Matrix<Quad> h = jmnl::h0_block<Quad>(c.N, c.basis);
    h.diagonal().array() -= Quad(2.2);
    CHECK(w == h);
  }
  SUBCASE("energy dependence factorizes") {
    const Quad e1 = 1.1, e2 = 4.7;
    const Quad w1 = jmnl::weight(e1, c), w2 = jmnl::weight(e2, c);
    jmnl::Matrix<Quad> expect = Quad(c.g) * (w1 * w1 - w2 * w2) * l.entries();
    expect.diagonal().array() -= e1 - e2;
    const jmnl::Matrix<Quad> diff = jmnl::wave_operator(e1, c, l) - jmnl::wave_operator(e2, c, l) - expect;
    CHECK(jmnl::to_double(jmnl::max_abs(diff)) < 1e-30 * jmnl::to_double(jmnl::max_abs(l.entries())));
  }
  SUBCASE("model caches the same pieces") {
    const jmnl::NonlinearModel<Quad> model(c);
    CHECK(model.size() == 20);
    CHECK(model.wave_operator(Quad(3.0)) == jmnl::wave_operator(Quad(3.0), c, l));
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fockspace/quadrature.hpp"
#include "fockspace/specfun.hpp"

using namespace fockspace;
using doctest::Approx;

TEST_CASE("quantum numbers validate their ranges") {
  CHECK_NOTHROW(QuantumNumbers::make(3, 2, -2));
  CHECK_THROWS_AS(QuantumNumbers::make(0, 0, 0), DomainError);
  CHECK_THROWS_AS(QuantumNumbers::make(2, 2, 0), DomainError);
  CHECK_THROWS_AS(QuantumNumbers::make(3, 1, 2), DomainError);
}

TEST_CASE("spin values") {
  CHECK(Spin::from_double(1.5).twice == 3);
  CHECK(Spin::half(1).value() == 0.5);
  CHECK_FALSE(Spin::half(3).is_integer());
  CHECK_THROWS(Spin::from_double(0.3));
}

TEST_CASE("null vector is isotropic") {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  for (int k = 0; k < 50; ++k) {
    const MonomialPair p{{g(rng), g(rng)}, {g(rng), g(rng)}};
    const NullVector a = NullVector::from_pair(p);
    CHECK(std::abs(a.self_dot()) < 1e-13 * (1.0 + std::norm(p.xi) + std::norm(p.eta)) * 4);
  }
}

TEST_CASE("laguerre") {
  CHECK(laguerre(0, 2.5, 7.0) == 1.0);
  CHECK(laguerre(1, 1.0, 2.0) == Approx(0.0));
  CHECK(laguerre(2, 0.0, 0.0) == Approx(1.0));
  // L_k^(a)(0) = binom(k + a, k)
  CHECK(laguerre(4, 3.0, 0.0) == Approx(35.0));
  for (double x : {0.3, 1.7, 4.2}) CHECK(laguerre(4, 2.0, x) == Approx(std::assoc_laguerre(4, 2, x)).epsilon(1e-13));
}

TEST_CASE("gegenbauer") {
  for (double x : {-0.8, 0.1, 0.6}) {
    CHECK(gegenbauer(0, 1.7, x) == 1.0);
    CHECK(gegenbauer(2, 1.0, x) == Approx(4 * x * x - 1));
  }
  for (int m = 0; m <= 8; ++m) {
    const double a = 1.5;
    const double expect = std::exp(std::lgamma(m + 2 * a) - std::lgamma(m + 1) - std::lgamma(2 * a));
    CHECK(gegenbauer(m, a, 1.0) == Approx(expect).epsilon(1e-13));
  }
  CHECK(gegenbauer(-1, 2.0, 0.3) == 0.0);
  // order 1/2 is Legendre
  CHECK(gegenbauer(5, 0.5, 0.37) == Approx(std::legendre(5, 0.37)).epsilon(1e-13));
}

TEST_CASE("spherical harmonics") {
  CHECK(std::abs(spherical_harmonic(0, 0, 0.4, 2.0) - 1.0 / std::sqrt(4 * pi)) < 1e-15);
  CHECK(spherical_harmonic(1, 0, 0.7, 1.0).real() == Approx(std::sqrt(3.0 / (4 * pi)) * std::cos(0.7)));
  for (int l = 0; l <= 6; ++l)
    for (int m = 0; m <= l; ++m)
      CHECK(spherical_harmonic(l, m, 1.1, 0.0).real() == Approx(std::sph_legendre(l, m, 1.1)).epsilon(1e-12));

  const AngularGrid grid = AngularGrid::make(16, 32);
  for (int l = 0; l <= 4; ++l)
    for (int m = -l; m <= l; ++m) {
      double s = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i) s += grid.weight[i] * std::norm(spherical_harmonic(l, m, grid.theta[i], grid.phi[i]));
      CHECK(s == Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("spherical bessel") {
  CHECK(spherical_bessel(0, 0.0) == 1.0);
  CHECK(spherical_bessel(2, 0.0) == 0.0);
  for (double x : {0.01, 0.5, 3.0, 17.0}) {
    CHECK(spherical_bessel(0, x) == Approx(std::sin(x) / x).epsilon(1e-13));
    CHECK(spherical_bessel(1, x) == Approx(std::sin(x) / (x * x) - std::cos(x) / x).epsilon(1e-10));
    for (int l = 2; l <= 8; ++l) CHECK(spherical_bessel(l, x) == Approx(std::sph_bessel(l, x)).epsilon(1e-10));
  }
}

TEST_CASE("wigner 3j") {
  CHECK(wigner_3j(Spin{2}, Spin{2}, Spin{2}, Spin{2}, Spin{0}, Spin{0}) == 0.0);
  CHECK(wigner_3j(Spin{1}, Spin{1}, Spin{0}, Spin{1}, Spin{-1}, Spin{0}) == Approx(1 / std::sqrt(2.0)));
  CHECK(wigner_3j(Spin{2}, Spin{2}, Spin{4}, Spin{0}, Spin{0}, Spin{0}) == Approx(std::sqrt(2.0 / 15)));
  // orthogonality: sum over all m of 3j^2 = 1
  const int j1 = 3, j2 = 2;  // 3/2 and 1
  for (int j3 = 1; j3 <= 5; j3 += 2) {
    double s = 0.0;
    for (int m1 = -j1; m1 <= j1; m1 += 2)
      for (int m2 = -j2; m2 <= j2; m2 += 2) {
        const double w = wigner_3j(Spin{j1}, Spin{j2}, Spin{j3}, Spin{m1}, Spin{m2}, Spin{-m1 - m2});
        s += w * w;
      }
    CHECK(s == Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("wigner D") {
  CHECK(std::abs(wigner_D(Spin{2}, Spin{0}, Spin{0}, 0, 0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(wigner_D(Spin{2}, Spin{2}, Spin{0}, 0, 0, 0)) < 1e-15);
  CHECK(wigner_D(Spin{1}, Spin{1}, Spin{1}, 0, 0.8, 0).real() == Approx(std::cos(0.4)));
  for (int l = 0; l <= 4; ++l)
    for (int m = -l; m <= l; ++m) {
      const double th = 1.3, ph = 0.4;
      const cplx lhs = std::sqrt(4 * pi / (2 * l + 1)) * std::conj(spherical_harmonic(l, m, th, ph));
      CHECK(std::abs(lhs - wigner_D(Spin{2 * l}, Spin{0}, Spin{2 * m}, 0.9, th, ph)) < 1e-13);
    }
}

TEST_CASE("representation matrices are unitary and match wigner_D") {
  const double psi = 0.3, th = 1.2, ph = -0.8;
  const Mat2c u = su2_from_euler(psi, th, ph);
  for (int tj = 0; tj <= 4; ++tj) {
    const Eigen::MatrixXcd d = wigner_D_matrix(Spin{tj}, u);
    CHECK((d * d.adjoint() - Eigen::MatrixXcd::Identity(tj + 1, tj + 1)).cwiseAbs().maxCoeff() < 1e-13);
    for (int a = 0; a <= tj; ++a)
      for (int b = 0; b <= tj; ++b)
        CHECK(std::abs(d(a, b) - wigner_D(Spin{tj}, Spin{2 * a - tj}, Spin{2 * b - tj}, psi, th, ph)) < 1e-13);
  }
}

TEST_CASE("monomial pair") {
  const cplx xi{0.3, 0.4}, eta{-0.2, 0.7};
  CHECK(std::abs(monomial_pair(0, 0, xi, eta) - 1.0) < 1e-15);
  CHECK(std::abs(monomial_pair(1, 1, xi, eta) - xi * xi / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(monomial_pair(1, -1, xi, eta) - eta * eta / std::sqrt(2.0)) < 1e-15);
  CHECK_THROWS(monomial_pair(1, 2, xi, eta));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "fockspace/hydrogen.hpp"
#include "fockspace/parallel.hpp"
#include "fockspace/quadrature.hpp"
#include "fockspace/specfun.hpp"

using namespace fockspace;
using doctest::Approx;

namespace {

bool increasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] > v[i - 1])) return false;
  return true;
}

}  // namespace

TEST_CASE("gauss-legendre exactness and weights") {
  const QuadratureRule two = gauss_legendre(2);
  CHECK(two.integrate([](double x) { return x * x; }) == Approx(2.0 / 3.0).epsilon(1e-15));
  for (int npts : {3, 8, 20, 64, 200}) {
    const QuadratureRule r = gauss_legendre(npts);
    CHECK(increasing(r.nodes));
    double s = 0.0;
    for (double w : r.weights) s += w;
    CHECK(s == Approx(2.0).epsilon(1e-14));
    for (int n = 0; n < npts && n <= 30; ++n)
      CHECK(r.integrate([&](double x) { return std::pow(x, 2 * n); }) == Approx(2.0 / (2 * n + 1)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(gauss_legendre(1), DimensionError);
  CHECK_THROWS_AS(gauss_legendre(5000), DimensionError);
}

TEST_CASE("gauss-legendre on an interval") {
  const QuadratureRule r = gauss_legendre(10, 1.0, 3.0);
  CHECK(r.integrate([](double x) { return x * x * x; }) == Approx(20.0).epsilon(1e-14));
}

TEST_CASE("gauss-laguerre") {
  const QuadratureRule r = gauss_laguerre(20, 0.0);
  CHECK(increasing(r.nodes));
  CHECK(r.integrate([](double) { return 1.0; }) == Approx(1.0).epsilon(1e-13));
  CHECK(gauss_laguerre(2, 0.0).integrate([](double t) { return t * t * t; }) == Approx(6.0).epsilon(1e-13));
  // e^{-2t}: substitute t = s / 2
  CHECK(r.integrate([](double) { return 0.5; }) == Approx(0.5).epsilon(1e-12));
  for (double a : {0.5, 1.0, 2.5}) {
    const QuadratureRule ra = gauss_laguerre(30, a);
    for (int k = 0; k <= 10; ++k)
      CHECK(ra.integrate([&](double t) { return std::pow(t, k); }) ==
            Approx(std::tgamma(k + a + 1)).epsilon(1e-11));
  }
  CHECK_THROWS_AS(gauss_laguerre(10, -1.0), DomainError);
}

TEST_CASE("gauss-hermite") {
  const QuadratureRule r = gauss_hermite(30);
  CHECK(increasing(r.nodes));
  for (int k = 0; k <= 12; ++k) {
    const double expect = std::tgamma(k + 0.5);
    CHECK(r.integrate([&](double x) { return std::pow(x, 2 * k); }) == Approx(expect).epsilon(1e-11));
  }
}

TEST_CASE("S3 grid measure") {
  const S3Grid g = S3Grid::make(12, 8, 12);
  double s = 0.0;
  for (double w : g.weight) s += w;
  CHECK(s == Approx(2 * pi * pi).epsilon(1e-12));
}

TEST_CASE("pairwise sum") {
  std::vector<double> v(100000, 0.1);
  CHECK(pairwise_sum(v) == Approx(10000.0).epsilon(1e-14));
}

TEST_CASE("radial hankel transform") {
  for (double p : {0.0, 0.3, 1.0, 2.5}) {
    const HankelResult h = radial_hankel(1, 0, p);
    CHECK(std::abs(h.value) == Approx(4 * std::sqrt(2.0 / pi) / std::pow(1 + p * p, 2)).epsilon(1e-8));
  }
  CHECK(std::abs(radial_hankel(2, 1, 0.0).value) < 1e-14);
  for (double p : {0.1, 0.4, 1.3}) {
    const cplx h = radial_hankel(4, 2, p).value;
    CHECK(std::abs(h) == Approx(std::abs(momentum_radial(4, 2, p))).epsilon(1e-6));
  }
}

TEST_CASE("parseval between radial and momentum sides") {
  const QuadratureRule gu = gauss_legendre(120, 0.0, 0.5 * pi);
  for (int n = 1; n <= 5; ++n)
    for (int l = 0; l < n; ++l) {
      const double d = 1.0 / n;
      const double mom = gu.integrate([&](double u) {
        const double p = d * std::tan(u);
        const double f = std::abs(radial_hankel(n, l, p).value);
        return f * f * p * p * d / (std::cos(u) * std::cos(u));
      });
      CHECK(mom == Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("monte carlo gaussian") {
  const McEstimate one = mc_gaussian(3, [](std::span<const double>) { return cplx(1.0); }, 20000, 5);
  CHECK(one.value == cplx(1.0));
  CHECK(one.std_error == 0.0);
  const McEstimate sq = mc_gaussian(2, [](std::span<const double> u) { return cplx(u[0] * u[0]); }, 200000, 11);
  CHECK(std::abs(sq.value.real() - 0.5) < 3 * sq.std_error);
  const McEstimate r2 = mc_gaussian(
      4, [](std::span<const double> u) { return cplx(u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + u[3] * u[3]); },
      200000, 12);
  CHECK(std::abs(r2.value.real() - 2.0) < 3 * r2.std_error);
}

TEST_CASE("monte carlo is deterministic across thread counts") {
  const auto f = [](std::span<const double> u) { return cplx(std::cos(u[0]) * u[1], u[2]); };
  setenv("FOCKSPACE_THREADS", "1", 1);
  const McEstimate a = mc_gaussian(3, f, 100000, 99);
  setenv("FOCKSPACE_THREADS", "4", 1);
  const McEstimate b = mc_gaussian(3, f, 100000, 99);
  unsetenv("FOCKSPACE_THREADS");
  CHECK(a.value == b.value);
  CHECK(a.std_error == b.std_error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fockspace/hydrogen.hpp"
#include "fockspace/quadrature.hpp"

using namespace fockspace;
using doctest::Approx;

namespace {

Vec3 random_point(std::mt19937_64& rng, double rmin, double rmax) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(rmin, rmax);
  Vec3 v{g(rng), g(rng), g(rng)};
  const double s = u(rng) / norm(v);
  for (auto& c : v) c *= s;
  return v;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("radial functions") {
  for (double r : {0.0, 0.5, 2.0, 7.0}) CHECK(radial_position(1, 0, r) == Approx(2 * std::exp(-r)).epsilon(1e-14));
  CHECK(radial_position(2, 1, 0.0) == 0.0);
  const QuadratureRule lag = gauss_laguerre(40, 0.0);
  const double s = 2.0 / 3.0;
  const double nrm = lag.integrate([&](double t) {
    const double r = t / s, R = radial_position(3, 1, r);
    return std::exp(t) * R * R * r * r / s;
  });
  CHECK(nrm == Approx(1.0).epsilon(1e-12));
  // the explicit omega argument matches the default 2/n
  CHECK(radial_position(3, 2, 1.7, 2.0 / 3.0) == Approx(radial_position(3, 2, 1.7)).epsilon(1e-15));
}

TEST_CASE("position wavefunction") {
  CHECK(std::abs(psi_position(QuantumNumbers::make(1, 0, 0), {0, 0, 0})) ==
        Approx(1 / std::sqrt(pi)).epsilon(1e-14));
  CHECK(std::abs(psi_position(QuantumNumbers::make(2, 1, 1), {0, 0, 1.3})) < 1e-16);

  // norm of (2,1,0): radial Laguerre times angular product grid
  const AngularGrid ang = AngularGrid::make(6, 8);
  const QuadratureRule lag = gauss_laguerre(30, 2.0);
  const QuantumNumbers qn = QuantumNumbers::make(2, 1, 0);
  double total = 0.0;
  for (std::size_t i = 0; i < ang.size(); ++i) {
    const double st = std::sin(ang.theta[i]), ct = std::cos(ang.theta[i]);
    total += ang.weight[i] * lag.integrate([&](double t) {
      const Vec3 x{t * st * std::cos(ang.phi[i]), t * st * std::sin(ang.phi[i]), t * ct};
      return std::exp(t) * std::norm(psi_position(qn, x));
    });
  }
  CHECK(total == Approx(1.0).epsilon(1e-10));
}

TEST_CASE("momentum wavefunction") {
  const QuantumNumbers ground = QuantumNumbers::make(1, 0, 0);
  CHECK(std::abs(psi_momentum(ground, {0, 0, 0})) == Approx(2 * std::sqrt(2.0) / pi).epsilon(1e-14));
  const QuadratureRule gu = gauss_legendre(100, 0.0, 0.5 * pi);
  const double d = 1.0 / 3.0;
  const double nrm = gu.integrate([&](double u) {
    const double p = d * std::tan(u), f = momentum_radial(3, 2, p);
    return f * f * p * p * d / (std::cos(u) * std::cos(u));
  });
  CHECK(nrm == Approx(1.0).epsilon(1e-10));
}

TEST_CASE("phase conventions differ by (-1)^l") {
  const Vec3 p{0.2, -0.1, 0.35};
  for (int l = 0; l <= 3; ++l) {
    const QuantumNumbers qn = QuantumNumbers::make(4, l, l > 0 ? 1 : 0);
    const cplx a = psi_momentum(qn, p, PhaseConvention::printed);
    const cplx b = psi_momentum(qn, p, PhaseConvention::fourier);
    CHECK(std::abs(a - (l % 2 ? -1.0 : 1.0) * b) < 1e-14 * std::abs(a) + 1e-300);
  }
}

TEST_CASE("difference form equals the lowered form") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 6; ++n)
    for (int l = 0; l < n; ++l)
      for (int k = 0; k < 4; ++k) {
        const QuantumNumbers qn = QuantumNumbers::make(n, l, -l);
        const Vec3 p = random_point(rng, 0.05, 2.0);
        CHECK(std::abs(psi_momentum_difference_form(qn, p) - psi_momentum(qn, p)) <
              1e-12 * std::max(1e-3, std::abs(psi_momentum(qn, p))));
      }
}

TEST_CASE("energies") {
  CHECK(energy(1) == -0.5);
  CHECK(energy(2) == -0.125);
  for (int n = 1; n <= 10; ++n) {
    CHECK(energy(n) / energy(1) == Approx(1.0 / (n * n)).epsilon(1e-15));
    CHECK(energy_from_oscillator(2 * n - 2) == energy(n));
  }
  CHECK_THROWS_AS(energy(0), DomainError);
  CHECK_THROWS_AS(energy_from_oscillator(3), DomainError);
}

TEST_CASE("fock map") {
  const double d = 0.7;
  const FockPoint eq = fock_map({0, 0, d}, d);
  CHECK(eq.y[2] == Approx(1.0));
  CHECK(std::abs(eq.y[3]) < 1e-16);
  const FockPoint south = fock_map({0, 0, 0}, d);
  CHECK(south.y[3] == -1.0);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const FockPoint f = fock_map(random_point(rng, 0.0, 20.0), 0.3 + k * 0.01);
    CHECK(std::abs(norm(f.y) - 1.0) < 1e-13);
    CHECK(f.x >= -1.0);
    CHECK(f.x <= 1.0);
  }
}

TEST_CASE("generating functions in closed reductions") {
  const MonomialPair pair{{0.3, 0.1}, {-0.2, 0.4}};
  const Vec3 r{0.4, -0.3, 1.2};
  GenFuncParams g = GenFuncParams::for_reference(2, 0.0, 0.3, pair);
  CHECK(genfunc_position(g, r) == cplx(0.0));
  CHECK(genfunc_momentum(g, r) == cplx(0.0));

  g = GenFuncParams::for_reference(2, cplx(0.3, 0.2), 0.0, MonomialPair{0.0, 0.0});
  const double omega = 2 * g.delta, rr = norm(r);
  const cplx z = g.z;
  const cplx expect = z / ((1.0 - z) * (1.0 - z)) * std::exp(-omega * rr * (1.0 + z) / (2.0 * (1.0 - z)));
  CHECK(rel(genfunc_position(g, r), expect) < 1e-14);

  const double p2 = norm2(r);
  const cplx dm = std::pow(g.delta * (1.0 + z), 2) + (1.0 - z) * (1.0 - z) * p2;
  CHECK(rel(genfunc_momentum_regulated(g, r), 2.0 / std::sqrt(2 * pi) * z / dm) < 1e-14);
  // alpha = 0 denominator is (p^2 + delta^2)(1 - 2 z x + z^2)
  const double x = fock_variable(p2, g.delta);
  CHECK(std::abs(dm - (p2 + g.delta * g.delta) * (1.0 - 2.0 * z * x + z * z)) < 1e-14 * std::abs(dm));

  CHECK_THROWS_AS(genfunc_position(GenFuncParams::for_reference(1, 1.2, 0.0, pair), r), DomainError);
}

TEST_CASE("beta derivative of the regulated function") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 10; ++k) {
    const GenFuncParams g = GenFuncParams::for_reference(1 + k % 3, std::polar(0.4, 0.3 * k), std::polar(0.3, 1.1 * k),
                                                         MonomialPair{std::polar(0.6, 0.7 * k), std::polar(0.5, -0.2 * k)});
    const BetaDerivativeCheck b = beta_derivative_check(g, random_point(rng, 0.1, 1.5));
    CHECK(b.relative_error < 1e-7);
  }
}

TEST_CASE("coefficient extraction reproduces the wavefunctions") {
  std::mt19937_64 rng(42);
  const int states[3][3] = {{1, 0, 0}, {2, 1, 0}, {3, 1, 1}};
  for (const auto& s : states) {
    const QuantumNumbers qn = QuantumNumbers::make(s[0], s[1], s[2]);
    for (int k = 0; k < 5; ++k) {
      const Vec3 r = random_point(rng, 0.2, 3.0);
      const CoefficientResult a = extract_coefficient(GenFuncKind::position, qn.n, qn.l, qn.m, qn.n, r);
      CHECK(rel(a.value, scaled_wavefunction(GenFuncKind::position, qn, r)) < 1e-6);
      const Vec3 p = random_point(rng, 0.2 / qn.n, 2.0 / qn.n);
      const CoefficientResult b = extract_coefficient(GenFuncKind::momentum, qn.n, qn.l, qn.m, qn.n, p);
      CHECK(rel(b.value, scaled_wavefunction(GenFuncKind::momentum, qn, p)) < 1e-6);
    }
  }
  // (l >= n) is absent from the expansion
  const CoefficientResult none = extract_coefficient(GenFuncKind::position, 1, 1, 0, 1, {0.3, 0.2, 0.5});
  CHECK(std::abs(none.value) < 1e-12);
}

TEST_CASE("node counts") {
  for (int n = 1; n <= 6; ++n)
    for (int l = 0; l < n; ++l) {
      int changes = 0;
      double prev = radial_position(n, l, 1e-6);
      for (int k = 1; k <= 20000; ++k) {
        const double v = radial_position(n, l, 60.0 * n * k / 20000);
        if (v * prev < 0) ++changes;
        if (v != 0) prev = v;
      }
      CHECK(changes == n - l - 1);
    }
}

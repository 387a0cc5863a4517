#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fockspace/quadmaps.hpp"

using namespace fockspace;
using doctest::Approx;

TEST_CASE("levi-civita map") {
  const LeviCivitaImage a = levi_civita({1, 0});
  CHECK(a.xp == Approx(0.0));
  CHECK(a.yp == Approx(1.0));
  CHECK(a.rp == Approx(1.0));
  const LeviCivitaImage b = levi_civita({1, 1});
  CHECK(b.xp == Approx(2.0));
  CHECK(b.yp == Approx(0.0));
  CHECK(b.rp == Approx(2.0));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  for (int k = 0; k < 200; ++k) {
    const LeviCivitaImage c = levi_civita({g(rng), g(rng)});
    CHECK(std::abs(c.xp * c.xp + c.yp * c.yp - c.rp * c.rp) <= 1e-13 * c.rp * c.rp);
  }
}

TEST_CASE("ks map") {
  const KsImage a = ks_map({1, 0, 0, 0});
  CHECK(a.x[2] == Approx(1.0));
  CHECK(a.r == Approx(1.0));
  const KsImage b = ks_map({0, 0, 1, 0});
  CHECK(b.x[2] == Approx(-1.0));
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  for (int k = 0; k < 200; ++k) {
    const Vec4 u{g(rng), g(rng), g(rng), g(rng)};
    const KsImage c = ks_map(u);
    CHECK(std::abs(norm2(c.x) - c.r * c.r) <= 1e-13 * c.r * c.r);
    CHECK(c.r == Approx(norm2(u)).epsilon(1e-14));
  }
}

TEST_CASE("cayley-klein parameters") {
  const Vec4 u = cayley_klein(1, 0, 0, 0);
  CHECK(u[0] == Approx(1.0));
  CHECK(std::abs(u[1]) + std::abs(u[2]) + std::abs(u[3]) < 1e-15);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const double r = 0.1 + 4 * uni(rng), th = pi * uni(rng), ph = 2 * pi * uni(rng) - pi, ps = 4 * pi * uni(rng);
    const Vec3 x = ks_map(cayley_klein(r, th, ph, ps)).x;
    CHECK(x[0] == Approx(r * std::sin(th) * std::cos(ph)).epsilon(1e-12).scale(r));
    CHECK(x[1] == Approx(r * std::sin(th) * std::sin(ph)).epsilon(1e-12).scale(r));
    CHECK(x[2] == Approx(r * std::cos(th)).epsilon(1e-12).scale(r));
  }
}

TEST_CASE("fiber invariance and fiber angle") {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g;
  for (int k = 0; k < 20; ++k) {
    const Vec4 u{g(rng), g(rng), g(rng), g(rng)};
    const KsImage base = ks_map(u);
    for (int s = 0; s < 64; ++s) {
      const double psi = 4 * pi * s / 64;
      const KsImage img = ks_map(fiber_rotate(u, psi));
      for (int i = 0; i < 3; ++i) CHECK(std::abs(img.x[i] - base.x[i]) <= 1e-13 * base.r);
    }
    // rotating by psi advances the fiber angle by psi / 2 (mod pi)
    const double d = fiber_angle(fiber_rotate(u, 0.6)) - fiber_angle(u);
    CHECK(std::abs(std::remainder(d - 0.3, pi)) < 1e-12);
  }
}

TEST_CASE("jacobian of (x, y, z, tau)") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (int k = 0; k < 20; ++k) {
    const Vec4 u{g(rng), g(rng), g(rng), g(rng)};
    CHECK(ks_jacobian(u) == Approx(8 * norm2(u)).epsilon(1e-8));
  }
}

TEST_CASE("hurwitz map") {
  Vec8 e{};
  e[0] = 1;
  const HurwitzImage a = hurwitz_map(e);
  CHECK(a.x[4] == Approx(1.0));
  CHECK(a.r == Approx(1.0));
  for (int i = 0; i < 4; ++i) CHECK(std::abs(a.x[i]) < 1e-15);
  Vec8 z3{};
  z3[4] = 1;
  CHECK(hurwitz_map(z3).x[4] == Approx(-1.0));
  std::mt19937_64 rng(6);
  std::normal_distribution<double> g;
  for (int k = 0; k < 200; ++k) {
    Vec8 u;
    for (auto& v : u) v = g(rng);
    const HurwitzImage h = hurwitz_map(u);
    CHECK(std::abs(norm2(h.x) - h.r * h.r) <= 1e-12 * h.r * h.r);
  }
}

TEST_CASE("lifted integrals") {
  const auto exp_r = [](const Vec3& x) { return std::exp(-norm(x)); };
  const auto gauss = [](const Vec3& x) { return std::exp(-norm2(x)); };
  CHECK(ks_integral(exp_r).value == Approx(8 * pi).epsilon(5e-3));
  CHECK(ks_integral(gauss).value == Approx(std::pow(pi, 1.5)).epsilon(5e-3));
  // e^{-2r}: 8 pi / a^3
  CHECK(ks_integral([](const Vec3& x) { return std::exp(-2 * norm(x)); }).value == Approx(pi).epsilon(5e-3));

  KsIntegralOptions mc;
  mc.method = KsMethod::monte_carlo;
  const KsIntegralResult a = ks_integral(exp_r, mc);
  CHECK(a.value == Approx(8 * pi).epsilon(5e-3));
  const KsIntegralResult ball = ks_integral([](const Vec3& x) { return norm2(x) < 1 ? 1.0 : 0.0; }, mc);
  CHECK(ball.value == Approx(4 * pi / 3).epsilon(1e-2));
  CHECK(ks_integral(exp_r, mc).value == a.value);
}

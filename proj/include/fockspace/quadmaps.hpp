#pragma once

// Quadratic maps R^2 -> R^2 (Levi-Civita), R^4 -> R^3 (Kustaanheimo-Stiefel)
// and R^8 -> R^5 (Hurwitz), with the KS volume-element identity.

#include <cstdint>
#include <functional>

#include "fockspace/types.hpp"

namespace fockspace {

struct LeviCivitaImage {
  double xp, yp, rp;
};

/// (2 u1 u2, u1^2 - u2^2, u1^2 + u2^2).
LeviCivitaImage levi_civita(const Vec2& u);

struct KsImage {
  Vec3 x;
  double r;
};

/// x + i y = 2 conj(z1) z2, z = |z1|^2 - |z2|^2, r = |u|^2 with z1 = u1 + i u2, z2 = u3 + i u4.
KsImage ks_map(const Vec4& u);

/// Euler-angle parameterization of R^4 whose KS image is the spherical point
/// (r, theta, phi); psi moves along the fiber only:
/// z1 = sqrt(r) cos(theta/2) e^{-i(phi+psi)/2}, z2 = sqrt(r) sin(theta/2) e^{i(phi-psi)/2}.
Vec4 cayley_klein(double r, double theta, double phi, double psi);

/// Rotation of u by the common phase e^{-i psi/2} on (z1, z2); leaves ks_map invariant.
Vec4 fiber_rotate(const Vec4& u, double psi);

/// Fiber coordinate tau = -(arg z1 + arg z2)/2, equal to psi/2 on cayley_klein points.
double fiber_angle(const Vec4& u);

/// |det d(x, y, z, tau)/du| by central differences; equals 8 |u|^2.
double ks_jacobian(const Vec4& u, double h = 1e-5);

struct HurwitzImage {
  Vec5 x;
  double r;
};

/// With z_k = u_{2k-1} + i u_{2k}: x1 + i x2 = 2(conj(z1) z3 + z2 conj(z4)),
/// x3 + i x4 = 2(conj(z1) z4 - z2 conj(z3)), x5 = r1 - r2, r = r1 + r2,
/// r1 = |z1|^2 + |z2|^2, r2 = |z3|^2 + |z4|^2.
HurwitzImage hurwitz_map(const Vec8& u);

enum class KsMethod { quadrature, monte_carlo };

struct KsIntegralOptions {
  KsMethod method = KsMethod::quadrature;
  int nodes = 40;  // Gauss-Hermite nodes per axis
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 42;
};

struct KsIntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;  // rule difference or one Monte Carlo standard error
};

/// (4/pi) * int_{R^4} f(ks_map(u)) |u|^2 d^4u, which equals int_{R^3} f d^3r.
KsIntegralResult ks_integral(const std::function<double(const Vec3&)>& f, const KsIntegralOptions& opt = {});

}  // namespace fockspace

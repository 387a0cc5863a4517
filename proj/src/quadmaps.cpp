#include "fockspace/quadmaps.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <span>
#include <vector>

#include "fockspace/parallel.hpp"
#include "fockspace/quadrature.hpp"

namespace fockspace {

LeviCivitaImage levi_civita(const Vec2& u) {
  return {2.0 * u[0] * u[1], u[0] * u[0] - u[1] * u[1], u[0] * u[0] + u[1] * u[1]};
}

KsImage ks_map(const Vec4& u) {
  KsImage out;
  out.x = {2.0 * (u[0] * u[2] + u[1] * u[3]), 2.0 * (u[0] * u[3] - u[1] * u[2]),
           u[0] * u[0] + u[1] * u[1] - u[2] * u[2] - u[3] * u[3]};
  out.r = norm2(u);
  return out;
}

Vec4 cayley_klein(double r, double theta, double phi, double psi) {
  if (r < 0.0) throw DomainError("cayley_klein: r must be non-negative");
  if (theta < 0.0 || theta > pi) throw DomainError("cayley_klein: theta must lie in [0, pi]");
  const double s = std::sqrt(r);
  const cplx z1 = std::polar(s * std::cos(0.5 * theta), -0.5 * (phi + psi));
  const cplx z2 = std::polar(s * std::sin(0.5 * theta), 0.5 * (phi - psi));
  return {z1.real(), z1.imag(), z2.real(), z2.imag()};
}

Vec4 fiber_rotate(const Vec4& u, double psi) {
  const cplx rot = std::polar(1.0, -0.5 * psi);
  const cplx z1 = rot * cplx(u[0], u[1]);
  const cplx z2 = rot * cplx(u[2], u[3]);
  return {z1.real(), z1.imag(), z2.real(), z2.imag()};
}

double fiber_angle(const Vec4& u) {
  return -0.5 * (std::arg(cplx(u[0], u[1])) + std::arg(cplx(u[2], u[3])));
}

double ks_jacobian(const Vec4& u, double h) {
  Eigen::Matrix4d jac;
  for (int c = 0; c < 4; ++c) {
    Vec4 up = u, dn = u;
    up[c] += h;
    dn[c] -= h;
    const KsImage a = ks_map(up), b = ks_map(dn);
    for (int r = 0; r < 3; ++r) jac(r, c) = (a.x[r] - b.x[r]) / (2.0 * h);
    // Differences of arg taken as the arg of a ratio, so branch cuts never enter.
    const cplx q1 = cplx(up[0], up[1]) / cplx(dn[0], dn[1]);
    const cplx q2 = cplx(up[2], up[3]) / cplx(dn[2], dn[3]);
    jac(3, c) = -0.5 * (std::arg(q1) + std::arg(q2)) / (2.0 * h);
  }
  return std::abs(jac.determinant());
}

HurwitzImage hurwitz_map(const Vec8& u) {
  const cplx z1(u[0], u[1]), z2(u[2], u[3]), z3(u[4], u[5]), z4(u[6], u[7]);
  const cplx a = 2.0 * (std::conj(z1) * z3 + z2 * std::conj(z4));
  const cplx b = 2.0 * (std::conj(z1) * z4 - z2 * std::conj(z3));
  const double r1 = std::norm(z1) + std::norm(z2);
  const double r2 = std::norm(z3) + std::norm(z4);
  return {{a.real(), a.imag(), b.real(), b.imag(), r1 - r2}, r1 + r2};
}

namespace {

double ks_product_rule(const std::function<double(const Vec3&)>& f, int nodes) {
  const QuadratureRule gh = gauss_hermite(nodes);
  // Weights of the e^{-x^2} rule times e^{x^2}, so the full integrand is used directly.
  std::vector<double> w(gh.size());
  for (std::size_t i = 0; i < gh.size(); ++i) w[i] = gh.weights[i] * std::exp(gh.nodes[i] * gh.nodes[i]);
  const std::size_t n = gh.size();
  std::vector<double> slab(n);
  parallel_chunks(n, [&](std::size_t a) {
    std::vector<double> terms;
    terms.reserve(n * n * n);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const Vec4 u{gh.nodes[a], gh.nodes[b], gh.nodes[c], gh.nodes[d]};
          const KsImage k = ks_map(u);
          terms.push_back(w[b] * w[c] * w[d] * f(k.x) * k.r);
        }
    slab[a] = w[a] * pairwise_sum(terms);
  });
  return 4.0 / pi * pairwise_sum(slab);
}

}  // namespace

KsIntegralResult ks_integral(const std::function<double(const Vec3&)>& f, const KsIntegralOptions& opt) {
  KsIntegralResult out;
  if (opt.method == KsMethod::quadrature) {
    if (opt.nodes < 4) throw DimensionError("ks_integral: need at least 4 nodes per axis");
    out.value = ks_product_rule(f, opt.nodes);
    const double coarse = ks_product_rule(f, (3 * opt.nodes) / 4);
    out.error_estimate = std::abs(out.value - coarse);
    return out;
  }
  // u has density pi^{-2} e^{-|u|^2}, so the integral is pi^2 E[g(u) e^{|u|^2}].
  const McEstimate mc = mc_gaussian(
      4,
      [&](std::span<const double> s) {
        const Vec4 u{s[0], s[1], s[2], s[3]};
        const KsImage k = ks_map(u);
        return cplx(f(k.x) * k.r * std::exp(k.r), 0.0);
      },
      opt.samples, opt.seed);
  out.value = 4.0 * pi * mc.value.real();
  out.error_estimate = 4.0 * pi * mc.std_error;
  return out;
}

}  // namespace fockspace

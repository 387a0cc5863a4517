#include "fockspace/hydrogen.hpp"

#include <cmath>
#include <vector>

namespace fockspace {

namespace {

cplx phase_factor(int l, PhaseConvention phase) {
  const cplx unit = phase == PhaseConvention::printed ? I : -I;
  cplx out{1.0, 0.0};
  for (int k = 0; k < l; ++k) out *= unit;
  return out;
}

void require_unit_disc(cplx z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("generating function: |z| must be < 1");
}

cplx checked_inverse(cplx d, const char* what) {
  if (!(std::abs(d) > 1e-300) || !std::isfinite(std::abs(d))) throw SingularityError(what);
  return 1.0 / d;
}

}  // namespace

double radial_normalization(int n, int l) {
  QuantumNumbers::make(n, l, 0);
  return 2.0 / (double(n) * n) * std::exp(0.5 * (log_factorial(n - l - 1) - log_factorial(n + l)));
}

double radial_position(int n, int l, double r, std::optional<double> omega) {
  if (r < 0.0) throw DomainError("radial_position: r must be non-negative");
  const double w = omega.value_or(2.0 / n);
  if (!(w > 0.0)) throw DomainError("radial_position: omega must be positive");
  const double x = w * r;
  return radial_normalization(n, l) * std::pow(x, l) * std::exp(-0.5 * x) * laguerre(n - l - 1, 2.0 * l + 1.0, x);
}

cplx psi_position(const QuantumNumbers& qn, const Vec3& r) {
  QuantumNumbers::make(qn.n, qn.l, qn.m);
  const SphericalAngles s = to_spherical(r);
  if (s.r == 0.0 && qn.l > 0) return 0.0;
  return radial_position(qn.n, qn.l, s.r) * spherical_harmonic(qn.l, qn.m, s.theta, s.phi);
}

double momentum_radial(int n, int l, double p) {
  if (p < 0.0) throw DomainError("momentum_radial: p must be non-negative");
  const double delta = 1.0 / n;
  const double s = p * p + delta * delta;
  const double x = fock_variable(p * p, delta);
  const double log_pref = std::log(radial_normalization(n, l)) + log_factorial(l) - 0.5 * std::log(2.0 * pi) +
                          std::log(double(n)) + (l + 1) * std::log(4.0 * delta) - (l + 2) * std::log(s);
  return std::exp(log_pref) * std::pow(p, l) * gegenbauer(n - l - 1, l + 1.0, x);
}

cplx psi_momentum(const QuantumNumbers& qn, const Vec3& p, PhaseConvention phase) {
  QuantumNumbers::make(qn.n, qn.l, qn.m);
  const SphericalAngles s = to_spherical(p);
  if (s.r == 0.0 && qn.l > 0) return 0.0;
  return phase_factor(qn.l, phase) * momentum_radial(qn.n, qn.l, s.r) *
         spherical_harmonic(qn.l, qn.m, s.theta, s.phi);
}

cplx psi_momentum_difference_form(const QuantumNumbers& qn, const Vec3& p, PhaseConvention phase) {
  QuantumNumbers::make(qn.n, qn.l, qn.m);
  const int n = qn.n, l = qn.l;
  const SphericalAngles s = to_spherical(p);
  if (s.r == 0.0 && l > 0) return 0.0;
  const double delta = 1.0 / n;
  const double p2 = s.r * s.r;
  const double x = fock_variable(p2, delta);
  const double bracket = gegenbauer(n - l - 1, l + 2.0, x) - gegenbauer(n - l - 3, l + 2.0, x);
  const double log_pref = std::log(radial_normalization(n, l)) + log_factorial(l + 1) - 0.5 * std::log(2.0 * pi) +
                          (l + 1) * std::log(4.0 * delta) - (l + 2) * std::log(p2 + delta * delta);
  return phase_factor(l, phase) * std::exp(log_pref) * std::pow(s.r, l) * bracket *
         spherical_harmonic(l, qn.m, s.theta, s.phi);
}

double energy(int n) {
  if (n < 1) throw DomainError("energy: n must be >= 1");
  return -0.5 / (double(n) * n);
}

double energy_from_oscillator(int n_osc) {
  if (n_osc < 0 || n_osc % 2) throw DomainError("energy_from_oscillator: index must be even and >= 0");
  return energy((n_osc + 2) / 2);
}

double fock_variable(double p2, double delta) {
  if (!(delta > 0.0)) throw DomainError("fock_variable: delta must be positive");
  return (p2 - delta * delta) / (p2 + delta * delta);
}

FockPoint fock_map(const Vec3& p, double delta) {
  if (!(delta > 0.0)) throw DomainError("fock_map: delta must be positive");
  const double p2 = norm2(p);
  const double s = p2 + delta * delta;
  FockPoint out;
  for (int i = 0; i < 3; ++i) out.y[i] = 2.0 * delta * p[i] / s;
  out.y[3] = (p2 - delta * delta) / s;
  out.x = out.y[3];
  return out;
}

GenFuncParams GenFuncParams::for_reference(int n0, cplx z, cplx alpha, MonomialPair pair, double beta) {
  if (n0 < 1) throw DomainError("GenFuncParams: reference n must be >= 1");
  return GenFuncParams{z, alpha, pair, beta, 1.0 / n0};
}

cplx genfunc_position(const GenFuncParams& g, const Vec3& r) {
  require_unit_disc(g.z);
  const double omega = 2.0 * g.delta;
  const double rr = norm(r);
  const cplx ar = NullVector::from_pair(g.pair).dot(r);
  const cplx one_minus = 1.0 - g.z;
  const cplx expo = -omega * rr * (1.0 + g.z) / (2.0 * one_minus) + g.alpha * omega * g.z * ar / (2.0 * one_minus * one_minus);
  return g.z / (one_minus * one_minus) * std::exp(expo);
}

cplx genfunc_momentum_regulated(const GenFuncParams& g, const Vec3& p) {
  require_unit_disc(g.z);
  if (g.beta < 0.0) throw DomainError("genfunc_momentum_regulated: beta must be >= 0");
  const cplx ap = NullVector::from_pair(g.pair).dot(p);
  const cplx lead = g.delta * (1.0 + g.z) + g.beta * (1.0 - g.z);
  const cplx d = lead * lead + (1.0 - g.z) * (1.0 - g.z) * norm2(p) + 2.0 * I * g.alpha * g.delta * g.z * ap;
  return 2.0 / std::sqrt(2.0 * pi) * g.z * checked_inverse(d, "genfunc_momentum_regulated: singular denominator");
}

cplx genfunc_momentum(const GenFuncParams& g, const Vec3& p) {
  require_unit_disc(g.z);
  const cplx ap = NullVector::from_pair(g.pair).dot(p);
  const cplx lead = g.delta * (1.0 + g.z);
  const cplx d = lead * lead + (1.0 - g.z) * (1.0 - g.z) * norm2(p) + 2.0 * I * g.alpha * g.delta * g.z * ap;
  const cplx inv = checked_inverse(d, "genfunc_momentum: singular denominator");
  return 4.0 * g.delta / std::sqrt(2.0 * pi) * g.z * (1.0 - g.z * g.z) * inv * inv;
}

BetaDerivativeCheck beta_derivative_check(const GenFuncParams& g, const Vec3& p, double step) {
  if (!(step > 0.0)) throw DomainError("beta_derivative_check: step must be positive");
  auto at = [&](double beta) {
    GenFuncParams q = g;
    q.beta = beta;
    return genfunc_momentum_regulated(q, p);
  };
  // f'(0) ~ (-3 f(0) + 4 f(h) - f(2h)) / (2h) has O(h^2) error; one Richardson
  // step with h/2 cancels it.
  auto one_sided = [&](double h) { return (-3.0 * at(0.0) + 4.0 * at(h) - at(2.0 * h)) / (2.0 * h); };
  const cplx coarse = one_sided(step);
  const cplx fine = one_sided(0.5 * step);
  BetaDerivativeCheck out;
  out.finite_difference = -(4.0 * fine - coarse) / 3.0;
  GenFuncParams q = g;
  q.beta = 0.0;
  out.closed_form = genfunc_momentum(q, p);
  out.relative_error = std::abs(out.finite_difference - out.closed_form) / std::abs(out.closed_form);
  return out;
}

namespace {

// Coefficient of z^n alpha^l xi^j eta^k by a product trapezoid rule on circles.
cplx cauchy_coefficient(GenFuncKind kind, int n, int l, int j, int k, int n0, const Vec3& point, const CauchyRadii& c,
                        double rz) {
  std::vector<cplx> wz(c.nz), wa(c.nalpha), wx(c.nxi), we(c.neta);
  std::vector<cplx> pz(c.nz), pa(c.nalpha), px(c.nxi), pe(c.neta);
  auto fill = [](std::vector<cplx>& nodes, std::vector<cplx>& weights, double radius, int power) {
    const int m = int(nodes.size());
    for (int s = 0; s < m; ++s) {
      const double t = 2.0 * pi * s / m;
      nodes[s] = std::polar(radius, t);
      weights[s] = std::polar(std::pow(radius, -power) / m, -power * t);
    }
  };
  fill(pz, wz, rz, n);
  fill(pa, wa, c.alpha, l);
  fill(px, wx, c.xi, j);
  fill(pe, we, c.eta, k);

  cplx total{};
  for (int a = 0; a < c.nalpha; ++a) {
    for (int x = 0; x < c.nxi; ++x) {
      for (int e = 0; e < c.neta; ++e) {
        cplx inner{};
        for (int s = 0; s < c.nz; ++s) {
          GenFuncParams g = GenFuncParams::for_reference(n0, pz[s], pa[a], MonomialPair{px[x], pe[e]});
          const cplx f = kind == GenFuncKind::position ? genfunc_position(g, point) : genfunc_momentum(g, point);
          inner += wz[s] * f;
        }
        total += wa[a] * wx[x] * we[e] * inner;
      }
    }
  }
  return total;
}

}  // namespace

CoefficientResult extract_coefficient(GenFuncKind kind, int n, int l, int m, int n0, const Vec3& point,
                                      const CauchyRadii& radii, double tolerance) {
  if (n < 1 || l < 0 || m < -l || m > l) throw DomainError("extract_coefficient: invalid (n, l, m)");
  if (!(radii.z > 0.0 && radii.z < 1.0)) throw DomainError("extract_coefficient: z radius must lie in (0, 1)");
  if (radii.nz <= n || radii.nalpha <= l || radii.nxi <= 2 * l || radii.neta <= 2 * l)
    throw DimensionError("extract_coefficient: too few circle nodes for the requested degree");
  const int j = l + m, k = l - m;
  const double scale = std::exp(0.5 * (log_factorial(j) + log_factorial(k)));
  const cplx a = scale * cauchy_coefficient(kind, n, l, j, k, n0, point, radii, radii.z);
  const cplx b = scale * cauchy_coefficient(kind, n, l, j, k, n0, point, radii, 0.75 * radii.z);
  CoefficientResult out;
  out.value = a;
  out.residual = std::abs(a - b) / std::max(std::abs(a), 1e-300);
  if (std::abs(a) < 1e-14 && std::abs(b) < 1e-14) out.residual = std::abs(a - b);
  out.converged = std::isfinite(out.residual) && out.residual <= tolerance;
  return out;
}

cplx scaled_wavefunction(GenFuncKind kind, const QuantumNumbers& qn, const Vec3& point) {
  const double pref = std::sqrt(4.0 * pi / (2 * qn.l + 1)) / radial_normalization(qn.n, qn.l);
  if (kind == GenFuncKind::position) return pref * psi_position(qn, point);
  return pref * psi_momentum(qn, point, PhaseConvention::fourier);
}

}  // namespace fockspace

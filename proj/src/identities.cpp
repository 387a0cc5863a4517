#include "fockspace/identities.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fockspace/quadrature.hpp"

namespace fockspace {

IdentityCase IdentityCase::make(std::string id, cplx lhs, cplx rhs) {
  return IdentityCase{std::move(id), lhs, rhs, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs))};
}

GegenbauerGenFunc genfunc_gegenbauer(double a, double t, double x) {
  if (!(a > 0.0)) throw DomainError("genfunc_gegenbauer: a must be positive");
  if (!(std::abs(t) < 1.0)) throw DomainError("genfunc_gegenbauer: |t| must be < 1");
  if (std::abs(x) > 1.0) throw DomainError("genfunc_gegenbauer: |x| must be <= 1");
  GegenbauerGenFunc out;
  out.closed = std::pow(1.0 - 2.0 * x * t + t * t, -a);

  // C_m(x) by the three-term recurrence; C_m(1) = (2a)_m / m! bounds |C_m(x)|.
  double c_prev = 0.0, c = 1.0, bound = 1.0, power = 1.0, sum = 0.0;
  constexpr int max_terms = 20000;
  out.converged = false;
  int m = 0;
  for (; m < max_terms; ++m) {
    sum += power * c;
    const double next = (2.0 * (m + a) * x * c - (m + 2.0 * a - 1.0) * c_prev) / (m + 1);
    c_prev = c;
    c = next;
    bound *= (m + 2.0 * a) / (m + 1);
    power *= t;
    // Later bound terms shrink by a factor of at most max(ratio, |t|) each,
    // so the neglected tail is below term / (1 - that factor).
    const double ratio = std::max((m + 1 + 2.0 * a) / (m + 2) * std::abs(t), std::abs(t));
    const double term = std::abs(power) * bound;
    if (ratio < 1.0 && term / (1.0 - ratio) < 1e-15 * std::max(1.0, std::abs(sum))) {
      out.converged = true;
      ++m;
      break;
    }
  }
  out.series = sum;
  out.terms = m;
  out.residual = std::abs(out.closed - out.series) / std::max(1.0, std::abs(out.closed));
  return out;
}

namespace {

// (w/2)^{1/2-a} J_{a-1/2}(w) = sum_k (-1)^k (w/2)^{2k} / (k! Gamma(k + a + 1/2)).
double reduced_bessel_series(double a, double w) {
  const double q = 0.25 * w * w;
  double term = 1.0 / std::tgamma(a + 0.5);
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= -q / (k * (k + a - 0.5));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double reduced_bessel(double a, double w) {
  if (w < 0.5) return reduced_bessel_series(a, w);
  const double pref = std::pow(0.5 * w, 0.5 - a);
  const double ai = std::round(a);
  if (ai >= 1.0 && std::abs(a - ai) < 1e-15) {
    // J_{l+1/2}(w) = sqrt(2 w / pi) j_l(w) with l = a - 1.
    return pref * std::sqrt(2.0 * w / pi) * spherical_bessel(int(ai) - 1, w);
  }
  return pref * std::cyl_bessel_j(a - 0.5, w);
}

}  // namespace

IdentityCase bessel_genfunc(double a, double z, double chi) {
  if (!(a > 0.0)) throw DomainError("bessel_genfunc: a must be positive");
  if (z < 0.0) throw DomainError("bessel_genfunc: z must be non-negative");
  if (chi < 0.0 || chi > pi) throw DomainError("bessel_genfunc: chi must lie in [0, pi]");
  const double c = std::cos(chi);
  const double w = z * std::sin(chi);
  const cplx lhs = std::exp(z * c) * reduced_bessel(a, std::max(w, 0.0));

  // k_n = Gamma(2a) z^n / (Gamma(a+1/2) Gamma(2a+n)); |C_n^{(a)}(c)| <= (2a)_n / n!,
  // so each term is bounded by z^n / (n! Gamma(a+1/2)).
  double k = 1.0 / std::tgamma(a + 0.5);
  double bound = k;
  double c_prev = 0.0, cn = 1.0, sum = 0.0;
  for (int n = 0; n < 2000; ++n) {
    sum += k * cn;
    if (n > 2.0 * z && bound < 1e-18 * std::max(1.0, std::abs(sum))) break;
    const double next = (2.0 * (n + a) * c * cn - (n + 2.0 * a - 1.0) * c_prev) / (n + 1);
    c_prev = cn;
    cn = next;
    k *= z / (2.0 * a + n);
    bound *= z / (n + 1);
  }
  return IdentityCase::make("bessel_genfunc", lhs, sum);
}

double gegenbauer_recurrence(double a, int n, double x) {
  if (!(a > 0.5)) throw DomainError("gegenbauer_recurrence: a must exceed 1/2");
  if (n < 0) throw DomainError("gegenbauer_recurrence: n must be >= 0");
  const double lhs = (n + a) * gegenbauer(n + 1, a - 1.0, x);
  const double hi = (a - 1.0) * gegenbauer(n + 1, a, x);
  const double lo = (a - 1.0) * gegenbauer(n - 1, a, x);
  const double scale = std::max({1.0, std::abs(lhs), std::abs(hi), std::abs(lo)});
  return std::abs(lhs - (hi - lo)) / scale;
}

IntegralRep integral_rep(int l, double alpha, double chi, int quad_nodes) {
  if (l < 0) throw DomainError("integral_rep: l must be >= 0");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("integral_rep: alpha must lie in (0, 1)");
  if (!(chi > 0.0 && chi < pi)) throw DomainError("integral_rep: chi must lie in (0, pi)");
  const double sigma = 1.0 - alpha * std::cos(chi);
  if (!(sigma > 0.0)) throw DomainError("integral_rep: integral diverges for 1 - alpha cos chi <= 0");
  const double b = alpha * std::sin(chi);
  const QuadratureRule rule = gauss_laguerre(quad_nodes, l + 1.0);
  // t = tau / sigma: int e^{-sigma t} t^{l+1} j_l(b t) dt = sigma^{-(l+2)} int e^{-tau} tau^{l+1} j_l(b tau / sigma) dtau.
  const double scaled = rule.integrate([&](double tau) { return spherical_bessel(l, b * tau / sigma); });
  IntegralRep out;
  out.lhs = std::pow(1.0 - 2.0 * alpha * std::cos(chi) + alpha * alpha, -(l + 1.0));
  out.rhs_integral = scaled * std::pow(sigma, -(l + 2.0));
  out.calibration = out.rhs_integral / out.lhs;
  out.reduced_constant = out.calibration / std::pow(b, l);
  out.expected_constant = std::exp(l * std::log(2.0) + log_factorial(l));
  return out;
}

double integral_rep_printed_rhs(int l, double chi, int quad_nodes) {
  if (!(chi > 0.0 && chi < pi)) throw DomainError("integral_rep_printed_rhs: chi must lie in (0, pi)");
  const double sigma = 1.0 - std::cos(chi);
  const double b = std::sin(chi);
  const QuadratureRule rule = gauss_laguerre(quad_nodes, l + 1.0);
  const double scaled = rule.integrate([&](double tau) { return spherical_bessel(l, b * tau / sigma); });
  const double sign = l % 2 ? -1.0 : 1.0;
  return sign / (pi * std::exp((l + 1) * std::log(2.0) + log_factorial(l))) * scaled * std::pow(sigma, -(l + 2.0));
}

PlaneWave plane_wave_partial(const Vec3& r, const Vec3& rp, int L) {
  if (L < 0) throw DomainError("plane_wave_partial: L must be >= 0");
  const SphericalAngles a = to_spherical(r), b = to_spherical(rp);
  PlaneWave out;
  out.exact = std::exp(I * dot(r, rp));
  cplx il{1.0, 0.0};
  for (int l = 0; l <= L; ++l) {
    const double jl = spherical_bessel(l, a.r * b.r);
    cplx msum{};
    for (int m = -l; m <= l; ++m)
      msum += std::conj(spherical_harmonic(l, m, b.theta, b.phi)) * spherical_harmonic(l, m, a.theta, a.phi);
    out.partial += 4.0 * pi * il * jl * msum;
    il *= I;
  }
  out.residual = std::abs(out.exact - out.partial);
  return out;
}

Duplication duplication_check(int n) {
  if (n < 0) throw DomainError("duplication_check: n must be >= 0");
  const double lhs = std::lgamma(0.5) + std::lgamma(2.0 * n + 2.0);
  const double rest = std::lgamma(n + 1.5) + std::lgamma(n + 1.0);
  Duplication out;
  out.printed_ratio = std::exp(lhs - (2 * n * std::log(2.0) + rest));
  out.printed_residual = std::abs(out.printed_ratio - 1.0);
  out.corrected_residual = std::abs(std::exp(lhs - ((2 * n + 1) * std::log(2.0) + rest)) - 1.0);
  return out;
}

Vec4 s3_from_angles(double chi, double theta, double phi, double v) {
  const double s = v * std::sin(chi);
  return {s * std::sin(theta) * std::cos(phi), s * std::sin(theta) * std::sin(phi), s * std::cos(theta),
          v * std::cos(chi)};
}

Mat2c su2_from_s3(const Vec4& v) {
  Mat2c u;
  u << cplx(v[3], v[2]), cplx(v[1], v[0]), cplx(-v[1], v[0]), cplx(v[3], -v[2]);
  return u;
}

cplx hyperspherical_Y(int n, int l, int m, const Vec4& v) {
  QuantumNumbers::make(n, l, m);
  const double vv = norm(v);
  if (vv == 0.0) throw DomainError("hyperspherical_Y: v must be nonzero");
  const Vec3 r{v[0], v[1], v[2]};
  const double rr = norm(r);
  const double cos_chi = v[3] / vv;
  const double log_norm = (l + 1) * std::log(2.0) + log_factorial(l) +
                          0.5 * (std::log(double(n)) + log_factorial(n - l - 1) - std::log(2.0 * pi) -
                                 log_factorial(n + l));
  // v^{n-1} sin^l(chi) Y_lm(r_hat) = v^{n-1-l} * (|r|^l Y_lm(r_hat)).
  return std::exp(log_norm) * std::pow(vv, n - 1 - l) * gegenbauer(n - l - 1, l + 1.0, cos_chi) *
         (rr == 0.0 ? (l == 0 ? spherical_harmonic(0, 0, 0.0, 0.0) : cplx{}) : solid_harmonic(l, m, r));
}

cplx hyperspherical_laplacian(int n, int l, int m, const Vec4& v, double h) {
  cplx lap = -8.0 * hyperspherical_Y(n, l, m, v);
  for (int k = 0; k < 4; ++k) {
    Vec4 up = v, dn = v;
    up[k] += h;
    dn[k] -= h;
    lap += hyperspherical_Y(n, l, m, up) + hyperspherical_Y(n, l, m, dn);
  }
  return lap / (h * h);
}

TripleD triple_D_integral(int n, Spin m1, Spin m2, int l, int m, int theta_nodes) {
  if (n < 1 || l < 0) throw DomainError("triple_D_integral: need n >= 1, l >= 0");
  const Spin j = Spin::half(n - 1);
  if (std::abs(m1.twice) > j.twice || std::abs(m2.twice) > j.twice || (m1.twice - j.twice) % 2 ||
      (m2.twice - j.twice) % 2 || std::abs(m) > l)
    throw IndexError("triple_D_integral: magnetic index out of range");
  const Spin L = Spin::integer(l), M = Spin::integer(m), zero{0};

  // The integrand is a trigonometric polynomial in theta with half-angle
  // factors, so Gauss-Legendre runs in theta itself with the sin(theta) weight.
  const QuadratureRule gt = gauss_legendre(theta_nodes, 0.0, pi);
  const int nang = n + l + 2;
  const double dang = 2.0 * pi / nang;
  cplx sum{};
  for (std::size_t a = 0; a < gt.size(); ++a) {
    const double th = gt.nodes[a];
    const double w = gt.weights[a] * std::sin(th);
    for (int p = 0; p < nang; ++p) {
      for (int f = 0; f < nang; ++f) {
        const double psi = p * dang, phi = f * dang;
        sum += w * wigner_D(j, j, m1, psi, th, phi) * wigner_D(j, -j, m2, psi, th, phi) *
               wigner_D(L, zero, M, psi, th, phi);
      }
    }
  }
  TripleD out;
  out.numeric = sum * dang * dang / (8.0 * pi * pi);
  out.threej_product = wigner_3j(j, j, L, j, -j, zero) * wigner_3j(j, j, L, m1, m2, M);
  out.residual = std::abs(out.numeric - out.threej_product);
  return out;
}

cplx passage_rhs(int n, int l, int m, const Vec4& v) {
  QuantumNumbers::make(n, l, m);
  const Spin j = Spin::half(n - 1), L = Spin::integer(l), M = Spin::integer(m);
  const Eigen::MatrixXcd d = wigner_D_matrix(j, su2_from_s3(v));
  cplx sum{};
  for (int a = 0; a <= j.twice; ++a) {
    const Spin m1{-j.twice + 2 * a};
    for (int b = 0; b <= j.twice; ++b) {
      const Spin m2{-j.twice + 2 * b};
      const double w3 = wigner_3j(j, j, L, m1, -m2, M);
      if (w3 == 0.0) continue;
      const int e = (j.twice - m2.twice) / 2;
      sum += (e % 2 ? -1.0 : 1.0) * w3 * d(a, b);
    }
  }
  cplx phase{1.0, 0.0};
  for (int k = 0; k < l; ++k) phase *= -I;
  return phase / pi * std::sqrt(0.5 * n) * std::sqrt(2.0 * l + 1.0) * sum;
}

cplx passage_phase(int n, int l) {
  // Largest-modulus ratio over a few generic points, so a node of either side never decides it.
  const double pts[4][3] = {{0.7, 1.1, 0.4}, {1.9, 0.6, 2.3}, {1.2, 2.5, 4.1}, {2.6, 1.4, 5.6}};
  cplx best{1.0, 0.0};
  double best_mod = 0.0;
  for (int m = -l; m <= l; ++m) {
    for (const auto& p : pts) {
      const Vec4 v = s3_from_angles(p[0], p[1], p[2]);
      const cplx rhs = passage_rhs(n, l, m, v);
      if (std::abs(rhs) > best_mod) {
        best_mod = std::abs(rhs);
        best = hyperspherical_Y(n, l, m, v) / rhs;
      }
    }
  }
  return best;
}

PassageCheck passage_residual(int n, int l, int m, double chi, double theta, double phi) {
  const Vec4 v = s3_from_angles(chi, theta, phi);
  PassageCheck out;
  out.lhs = hyperspherical_Y(n, l, m, v);
  out.rhs = passage_rhs(n, l, m, v);
  out.phase = passage_phase(n, l);
  out.residual = std::abs(out.lhs - out.phase * out.rhs);
  return out;
}

}  // namespace fockspace

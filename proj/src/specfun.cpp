#include "fockspace/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace fockspace {

namespace {

constexpr int kFactorialTable = 256;

const std::vector<double>& log_factorial_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kFactorialTable);
    t[0] = 0.0;
    for (int k = 1; k < kFactorialTable; ++k) t[k] = t[k - 1] + std::log(double(k));
    return t;
  }();
  return table;
}

cplx ipow(cplx base, int e) {
  cplx result{1.0, 0.0};
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool valid_projection(Spin j, Spin m) {
  return j.twice >= 0 && std::abs(m.twice) <= j.twice && (j.twice - m.twice) % 2 == 0;
}

// j_l by upward recurrence; stable for x >= l.
double bessel_upward(int l, double x) {
  const double j0 = std::sin(x) / x;
  if (l == 0) return j0;
  double prev = j0;
  double cur = (j0 - std::cos(x)) / x;
  for (int k = 1; k < l; ++k) {
    const double next = (2 * k + 1) / x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double bessel_series(int l, double x) {
  // x^l / (2l+1)!! * sum_k (-x^2/2)^k / (k! (2l+3)(2l+5)...(2l+2k+1))
  double lead = 1.0;
  for (int k = 1; k <= l; ++k) lead *= x / (2 * k + 1);
  const double y = -0.5 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    term *= y / (k * (2 * l + 2 * k + 1));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return lead * sum;
}

// Miller's downward recurrence normalized by sum_k (2k+1) j_k^2 = 1.
double bessel_miller(int l, double x) {
  const double top = std::max<double>(l, x);
  const int start = int(top) + 20 + int(std::sqrt(40.0 * top));
  double next = 0.0;  // j_{k+1}
  double cur = 1e-30;  // j_k
  double norm = (2 * start + 1) * cur * cur;
  double at_l = 0.0;
  double j1 = 0.0;
  for (int k = start; k >= 1; --k) {
    const double prev = (2 * k + 1) / x * cur - next;
    next = cur;
    cur = prev;
    norm += (2 * (k - 1) + 1) * cur * cur;
    if (k - 1 == l) at_l = cur;
    if (k - 1 == 1) j1 = cur;
    if (std::abs(cur) > 1e150) {
      cur *= 1e-150;
      next *= 1e-150;
      at_l *= 1e-150;
      j1 *= 1e-150;
      norm *= 1e-300;
    }
  }
  const double j0 = cur;
  double value = at_l / std::sqrt(norm);
  // Fix the overall sign against whichever low-order closed form is larger.
  const double true_j0 = std::sin(x) / x;
  const double true_j1 = (true_j0 - std::cos(x)) / x;
  const double ref = std::abs(true_j0) > std::abs(true_j1) ? true_j0 : true_j1;
  const double got = std::abs(true_j0) > std::abs(true_j1) ? j0 : j1;
  if ((ref < 0) != (got < 0)) value = -value;
  return value;
}

}  // namespace

Spin Spin::from_double(double v) {
  const double t = 2.0 * v;
  const double r = std::round(t);
  if (std::abs(t - r) > 1e-9) throw DomainError("angular momentum must be a multiple of 1/2");
  return Spin{int(r)};
}

QuantumNumbers QuantumNumbers::make(int n, int l, int m) {
  if (!valid(n, l, m))
    throw DomainError("invalid quantum numbers (n=" + std::to_string(n) + ", l=" + std::to_string(l) +
                      ", m=" + std::to_string(m) + ")");
  return QuantumNumbers{n, l, m};
}

NullVector NullVector::from_pair(const MonomialPair& p) {
  const cplx xi2 = p.xi * p.xi;
  const cplx eta2 = p.eta * p.eta;
  return NullVector{-xi2 + eta2, -I * (xi2 + eta2), 2.0 * p.xi * p.eta};
}

double log_factorial(int k) {
  if (k < 0) throw DomainError("factorial of a negative integer");
  if (k < kFactorialTable) return log_factorial_table()[k];
  return std::lgamma(double(k) + 1.0);
}

double laguerre(int k, double a, double x) {
  if (a <= -1.0) throw DomainError("laguerre: superscript must exceed -1");
  if (k < 0) throw DomainError("laguerre: negative degree");
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + a - x;
  for (int i = 1; i < k; ++i) {
    const double next = ((2 * i + 1 + a - x) * cur - (i + a) * prev) / (i + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

double gegenbauer(int m, double a, double x) {
  if (a <= -0.5) throw DomainError("gegenbauer: order must exceed -1/2");
  if (m < 0) return 0.0;
  if (m == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * a * x;
  for (int k = 1; k < m; ++k) {
    const double next = (2.0 * x * (k + a) * cur - (k + 2.0 * a - 1.0) * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

cplx spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) throw IndexError("spherical_harmonic: need |m| <= l");
  const int am = std::abs(m);
  const double x = std::cos(theta);
  const double s = std::sin(theta);

  // Normalized associated Legendre function including sqrt((2l+1)/4pi).
  double pmm = std::sqrt(1.0 / (4.0 * pi));
  for (int i = 1; i <= am; ++i) pmm *= -std::sqrt((2.0 * i + 1.0) / (2.0 * i)) * s;
  double plm = pmm;
  if (l > am) {
    double p_prev = pmm;
    double p_cur = x * std::sqrt(2.0 * am + 3.0) * pmm;
    for (int ll = am + 2; ll <= l; ++ll) {
      const double a = std::sqrt((4.0 * ll * ll - 1.0) / (double(ll) * ll - double(am) * am));
      const double b = std::sqrt(((ll - 1.0) * (ll - 1.0) - double(am) * am) / (4.0 * (ll - 1.0) * (ll - 1.0) - 1.0));
      const double p_next = a * (x * p_cur - b * p_prev);
      p_prev = p_cur;
      p_cur = p_next;
    }
    plm = p_cur;
  }
  const cplx y = plm * std::exp(I * (double(am) * phi));
  if (m >= 0) return y;
  return (am % 2 ? -1.0 : 1.0) * std::conj(y);
}

cplx solid_harmonic(int l, int m, const Vec3& r) {
  const auto sph = to_spherical(r);
  if (sph.r == 0.0) return l == 0 ? cplx{std::sqrt(1.0 / (4.0 * pi)), 0.0} : cplx{};
  return std::pow(sph.r, l) * spherical_harmonic(l, m, sph.theta, sph.phi);
}

double spherical_bessel(int l, double x) {
  if (l < 0) throw DomainError("spherical_bessel: negative order");
  if (x < 0.0) return (l % 2 ? -1.0 : 1.0) * spherical_bessel(l, -x);
  if (x == 0.0) return l == 0 ? 1.0 : 0.0;
  if (x < 1.0) return bessel_series(l, x);
  if (x >= l) return bessel_upward(l, x);
  return bessel_miller(l, x);
}

double wigner_3j(Spin j1, Spin j2, Spin j3, Spin m1, Spin m2, Spin m3) {
  if (m1.twice + m2.twice + m3.twice != 0) return 0.0;
  if (!valid_projection(j1, m1) || !valid_projection(j2, m2) || !valid_projection(j3, m3)) return 0.0;
  const int a = j1.twice + j2.twice - j3.twice;
  const int b = j1.twice - j2.twice + j3.twice;
  const int c = -j1.twice + j2.twice + j3.twice;
  if (a < 0 || b < 0 || c < 0 || a % 2 || b % 2 || c % 2) return 0.0;

  // Everything below is in whole units.
  const int J1 = j1.twice, J2 = j2.twice, J3 = j3.twice;
  const int M1 = m1.twice, M2 = m2.twice, M3 = m3.twice;
  const int j1pm1 = (J1 + M1) / 2, j1mm1 = (J1 - M1) / 2;
  const int j2pm2 = (J2 + M2) / 2, j2mm2 = (J2 - M2) / 2;
  const int j3pm3 = (J3 + M3) / 2, j3mm3 = (J3 - M3) / 2;
  const int s12 = a / 2, s13 = b / 2, s23 = c / 2;
  const int total = (J1 + J2 + J3) / 2;

  const double log_pref =
      0.5 * (log_factorial(s12) + log_factorial(s13) + log_factorial(s23) - log_factorial(total + 1) +
             log_factorial(j1pm1) + log_factorial(j1mm1) + log_factorial(j2pm2) + log_factorial(j2mm2) +
             log_factorial(j3pm3) + log_factorial(j3mm3));

  // k runs over max(0, j2-j3-m1, j1-j3+m2) .. min(j1+j2-j3, j1-m1, j2+m2)
  const int t1 = (J2 - J3 - M1) / 2;
  const int t2 = (J1 - J3 + M2) / 2;
  const int kmin = std::max({0, t1, t2});
  const int kmax = std::min({s12, j1mm1, j2pm2});
  if (kmin > kmax) return 0.0;

  std::vector<double> logs;
  logs.reserve(kmax - kmin + 1);
  for (int k = kmin; k <= kmax; ++k) {
    logs.push_back(-(log_factorial(k) + log_factorial(k - t1) + log_factorial(k - t2) + log_factorial(s12 - k) +
                     log_factorial(j1mm1 - k) + log_factorial(j2pm2 - k)));
  }
  const double top = *std::max_element(logs.begin(), logs.end());
  double sum = 0.0;
  for (int k = kmin; k <= kmax; ++k) sum += (k % 2 ? -1.0 : 1.0) * std::exp(logs[k - kmin] - top);

  const int phase_units = (J1 - J2 - M3) / 2;
  const double phase = (phase_units % 2 == 0) ? 1.0 : -1.0;
  return phase * sum * std::exp(log_pref + top);
}

double wigner_small_d(Spin j, Spin mp, Spin m, double theta) {
  if (!valid_projection(j, mp) || !valid_projection(j, m))
    throw IndexError("wigner_small_d: invalid projection for the given j");
  const int jpmp = (j.twice + mp.twice) / 2, jmmp = (j.twice - mp.twice) / 2;
  const int jpm = (j.twice + m.twice) / 2, jmm = (j.twice - m.twice) / 2;
  const int diff = (m.twice - mp.twice) / 2;  // m - mp
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const double log_root =
      0.5 * (log_factorial(jpmp) + log_factorial(jmmp) + log_factorial(jpm) + log_factorial(jmm));

  const int smin = std::max(0, -diff);
  const int smax = std::min(jpmp, jmm);
  double sum = 0.0;
  for (int k = smin; k <= smax; ++k) {
    const double coeff = std::exp(log_root - log_factorial(jpmp - k) - log_factorial(k) -
                                  log_factorial(diff + k) - log_factorial(jmm - k));
    const int cpow = jpmp + jmm - 2 * k;  // 2j + mp - m - 2k
    const int spow = diff + 2 * k;
    const double sign = ((diff + k) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * coeff * std::pow(c, cpow) * std::pow(s, spow);
  }
  return sum;
}

cplx wigner_D(Spin j, Spin mp, Spin m, double psi, double theta, double phi) {
  const double d = wigner_small_d(j, mp, m, theta);
  return std::exp(-I * (mp.value() * psi + m.value() * phi)) * d;
}

Eigen::MatrixXcd wigner_D_matrix(Spin j, const Mat2c& U) {
  if (j.twice < 0) throw IndexError("wigner_D_matrix: negative j");
  const int dim = j.twice + 1;
  Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(dim, dim);
  for (int row = 0; row < dim; ++row) {
    const int p = row;        // j + mp
    const int q = dim - 1 - row;  // j - mp
    for (int col = 0; col < dim; ++col) {
      const int e1 = col;  // j + m
      cplx acc{};
      for (int k = std::max(0, e1 - q); k <= std::min(p, e1); ++k) {
        const int t = e1 - k;
        const double binom = std::exp(log_factorial(p) - log_factorial(k) - log_factorial(p - k) +
                                      log_factorial(q) - log_factorial(t) - log_factorial(q - t));
        acc += binom * ipow(U(0, 0), k) * ipow(U(0, 1), p - k) * ipow(U(1, 0), t) * ipow(U(1, 1), q - t);
      }
      const double scale = std::exp(0.5 * (log_factorial(col) + log_factorial(dim - 1 - col) -
                                           log_factorial(p) - log_factorial(q)));
      D(row, col) = acc * scale;
    }
  }
  return D;
}

Mat2c su2_from_euler(double psi, double theta, double phi) {
  auto uz = [](double a) {
    Mat2c u = Mat2c::Zero();
    u(0, 0) = std::exp(-I * (0.5 * a));
    u(1, 1) = std::exp(I * (0.5 * a));
    return u;
  };
  Mat2c uy;
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  uy << c, s, -s, c;
  return uz(psi) * uy * uz(phi);
}

cplx monomial_pair(Spin j, Spin m, cplx xi, cplx eta) {
  if (!valid_projection(j, m)) throw IndexError("monomial_pair: need |m| <= j");
  const int jpm = (j.twice + m.twice) / 2;
  const int jmm = (j.twice - m.twice) / 2;
  const double norm = std::exp(-0.5 * (log_factorial(jpm) + log_factorial(jmm)));
  return norm * ipow(xi, jpm) * ipow(eta, jmm);
}

cplx monomial_pair(int l, int m, cplx xi, cplx eta) {
  if (l < 0 || std::abs(m) > l) throw IndexError("monomial_pair: need |m| <= l");
  return monomial_pair(Spin::integer(l), Spin::integer(m), xi, eta);
}

}  // namespace fockspace

#include "fockspace/clifford.hpp"

#include <cmath>
#include <span>
#include <string>

#include "fockspace/quadrature.hpp"
#include "fockspace/specfun.hpp"

namespace fockspace {

namespace {

double sum_squares(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

// Recursion on x_1..x_{2k}. The scalar x2 + i x1 plays the role of A_1 so
// that level 2 comes out of the same block formula.
Eigen::MatrixXcd recurse(int k, const double* x) {
  if (k == 1) {
    Eigen::MatrixXcd a(1, 1);
    a(0, 0) = cplx(x[1], x[0]);
    return a;
  }
  const Eigen::MatrixXcd inner = recurse(k - 1, x);
  const Eigen::Index s = inner.rows();
  const cplx d(x[2 * k - 1], x[2 * k - 2]);
  Eigen::MatrixXcd a(2 * s, 2 * s);
  a.topLeftCorner(s, s) = d * Eigen::MatrixXcd::Identity(s, s);
  a.topRightCorner(s, s) = inner;
  a.bottomLeftCorner(s, s) = -inner.adjoint();
  a.bottomRightCorner(s, s) = std::conj(d) * Eigen::MatrixXcd::Identity(s, s);
  return a;
}

void check_level(int n) {
  if (n < 1 || n > max_clifford_level) throw DimensionError("clifford: level must lie in [1, 6]");
}

cplx closed_base(const std::vector<double>& x, cplx alpha) {
  const double last = x.back();
  return 1.0 - 2.0 * alpha * last + alpha * alpha * sum_squares(x);
}

cplx ipow(cplx b, int e) {
  cplx r{1.0, 0.0};
  for (int k = 0; k < e; ++k) r *= b;
  return r;
}

}  // namespace

CliffordMatrix build_A(int n, const std::vector<double>& x) {
  check_level(n);
  if (int(x.size()) != CliffordMatrix::parameter_count(n))
    throw DimensionError("build_A: level " + std::to_string(n) + " needs " +
                         std::to_string(CliffordMatrix::parameter_count(n)) + " parameters");
  CliffordMatrix out{n, x, {}};
  if (n == 1) {
    out.entries.resize(2, 2);
    out.entries << cplx(x[2], x[1]), cplx(0.0, x[0]), cplx(0.0, x[0]), cplx(x[2], -x[1]);
    return out;
  }
  out.entries = recurse(n, x.data());
  const double r2 = sum_squares(x);
  const Eigen::MatrixXcd gram = out.entries * out.entries.adjoint();
  const Eigen::MatrixXcd expected = r2 * Eigen::MatrixXcd::Identity(gram.rows(), gram.cols());
  if ((gram - expected).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, r2))
    throw DomainError("build_A: A A^dagger != |x|^2 I");
  return out;
}

std::vector<Eigen::MatrixXcd> gammas(int n) {
  check_level(n);
  const int count = CliffordMatrix::parameter_count(n);
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::vector<double> e(count, 0.0);
    e[i] = 1.0;
    out.push_back(build_A(n, e).entries);
  }
  return out;
}

Eigen::Matrix4cd printed_A3(const std::vector<double>& x) {
  if (x.size() != 6) throw DimensionError("printed_A3: needs 6 parameters");
  const double x1 = x[0], x2 = x[1], x3 = x[2], x4 = x[3], x5 = x[4], x6 = x[5];
  Eigen::Matrix4cd a;
  a << cplx(x6, x5), 0.0, cplx(-x1, x2), cplx(-x4, x3),
       0.0, cplx(x6, x5), cplx(-x4, -x3), cplx(x1, x2),
       cplx(x1, x2), cplx(x4, -x3), cplx(x6, -x5), 0.0,
       cplx(x4, x3), cplx(-x1, x2), 0.0, cplx(x6, -x5);
  return a;
}

std::vector<double> printed_A3_relabel(const std::vector<double>& x) {
  if (x.size() != 6) throw DimensionError("printed_A3_relabel: needs 6 parameters");
  return {-x[2], x[3], x[1], -x[0], x[4], x[5]};
}

int det_exponent(int n) {
  check_level(n);
  return n == 1 ? 1 : 1 << (n - 2);
}

GaussianResult det_identity(int n, const std::vector<double>& x, cplx alpha) {
  const CliffordMatrix a = build_A(n, x);
  const Eigen::Index s = a.entries.rows();
  const Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(s, s) - alpha * a.entries;
  GaussianResult out;
  out.method = GaussianMethod::determinant;
  out.closed_form = ipow(closed_base(x, alpha), det_exponent(n));
  if (std::abs(out.closed_form) < 1e-12) throw SingularityError("det_identity: closed form vanishes");
  out.value = m.partialPivLu().determinant();
  out.residual = std::abs(out.value - out.closed_form);
  return out;
}

cplx bargmann_closed(int n, const std::vector<double>& x, cplx alpha) {
  const GaussianResult d = det_identity(n, x, alpha);
  return n == 1 ? 1.0 / std::sqrt(d.value) : 1.0 / d.value;
}

GaussianResult gaussian_mc(int n, const std::vector<double>& x, cplx alpha, std::uint64_t samples,
                           std::uint64_t seed) {
  const CliffordMatrix a = build_A(n, x);
  if (!(std::abs(alpha) * std::sqrt(sum_squares(x)) < 1.0))
    throw DomainError("gaussian_mc: integrand not integrable, need |alpha| |x| < 1");
  if (samples < 10'000) throw DomainError("gaussian_mc: need at least 10^4 samples");
  const Eigen::Index s = a.entries.rows();
  const Eigen::MatrixXcd aa = alpha * a.entries;

  McEstimate mc;
  if (n == 1) {
    mc = mc_gaussian(
        2,
        [&](std::span<const double> u) {
          const cplx q = u[0] * (aa(0, 0) * u[0] + aa(0, 1) * u[1]) + u[1] * (aa(1, 0) * u[0] + aa(1, 1) * u[1]);
          return std::exp(q);
        },
        samples, seed);
  } else {
    mc = mc_gaussian(
        int(2 * s),
        [&](std::span<const double> u) {
          Eigen::VectorXcd z(s);
          for (Eigen::Index k = 0; k < s; ++k) z[k] = cplx(u[2 * k], u[2 * k + 1]);
          return std::exp(z.dot(aa * z));  // Eigen's dot conjugates the first argument
        },
        samples, seed);
  }
  GaussianResult out;
  out.method = GaussianMethod::monte_carlo;
  out.value = mc.value;
  out.std_error = mc.std_error;
  out.closed_form = bargmann_closed(n, x, alpha);
  out.residual = std::abs(out.value - out.closed_form);
  return out;
}

double gegenbauer_series_check(int n, const std::vector<double>& x, cplx alpha, int terms) {
  if (terms < 0) throw DomainError("gegenbauer_series_check: terms must be >= 0");
  build_A(n, x);
  const cplx base = closed_base(x, alpha);
  const cplx closed = n == 1 ? 1.0 / std::sqrt(base) : 1.0 / ipow(base, det_exponent(n));
  const double r = std::sqrt(sum_squares(x));
  const double order = n == 1 ? 0.5 : double(det_exponent(n));
  const double c = r > 0.0 ? x.back() / r : 0.0;
  cplx sum{};
  cplx power{1.0, 0.0};
  for (int m = 0; m < terms; ++m) {
    sum += power * gegenbauer(m, order, c);
    power *= alpha * r;
  }
  return std::abs(closed - sum);
}

}  // namespace fockspace

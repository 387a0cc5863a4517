#include "fockspace/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>

#include "fockspace/hydrogen.hpp"
#include "fockspace/parallel.hpp"
#include "fockspace/specfun.hpp"

namespace fockspace {

namespace {

void check_size(int npts) {
  if (npts < 2 || npts > 4096) throw DimensionError("quadrature: npts must lie in [2, 4096]");
}

// Golub-Welsch for a symmetric Jacobi matrix.
QuadratureRule golub_welsch(RuleKind kind, double alpha, const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag,
                            double mu0) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, offdiag, Eigen::ComputeEigenvectors);
  const auto& vals = solver.eigenvalues();
  const auto& vecs = solver.eigenvectors();
  QuadratureRule rule{kind, alpha, {}, {}};
  rule.nodes.resize(diag.size());
  rule.weights.resize(diag.size());
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    rule.nodes[i] = vals[i];
    rule.weights[i] = mu0 * vecs(0, i) * vecs(0, i);
  }
  return rule;
}

// Newton polish of a Gauss node using the orthonormal three-term recurrence
// x p_k = b_{k+1} p_{k+1} + a_k p_k + b_k p_{k-1}; values are rescaled as
// they grow so large Laguerre nodes stay finite.
double polish_node(double x, const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag) {
  const Eigen::Index n = diag.size();
  for (int iter = 0; iter < 3; ++iter) {
    double p_prev = 0.0, p = 1.0;
    double d_prev = 0.0, d = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
      const double b_k = k > 0 ? offdiag[k - 1] : 0.0;
      const double b_next = k + 1 < n ? offdiag[k] : 1.0;
      const double p_next = ((x - diag[k]) * p - b_k * p_prev) / b_next;
      const double d_next = ((x - diag[k]) * d + p - b_k * d_prev) / b_next;
      p_prev = p;
      p = p_next;
      d_prev = d;
      d = d_next;
      const double big = std::max(std::abs(p), std::abs(d));
      if (big > 1e100) {
        p /= big;
        p_prev /= big;
        d /= big;
        d_prev /= big;
      }
    }
    if (d == 0.0) break;
    const double step = p / d;
    x -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

}  // namespace

QuadratureRule gauss_legendre(int npts) {
  check_size(npts);
  QuadratureRule rule{RuleKind::legendre, 0.0, std::vector<double>(npts), std::vector<double>(npts)};
  const int half = (npts + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(pi * (i + 0.75) / (npts + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < npts; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      dp = npts * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / dp;
      if (std::abs(z - z1) <= 1e-15) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p1 = 1.0, p2 = 0.0;
    for (int j = 0; j < npts; ++j) {
      const double p3 = p2;
      p2 = p1;
      p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
    }
    dp = npts * (z * p1 - p2) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[npts - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[npts - 1 - i] = w;
  }
  if (npts % 2) rule.nodes[npts / 2] = 0.0;
  return rule;
}

QuadratureRule gauss_legendre(int npts, double a, double b) {
  QuadratureRule rule = gauss_legendre(npts);
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    rule.nodes[i] = mid + half * rule.nodes[i];
    rule.weights[i] *= half;
  }
  return rule;
}

QuadratureRule gauss_laguerre(int npts, double a) {
  check_size(npts);
  if (a <= -1.0) throw DomainError("gauss_laguerre: weight exponent must exceed -1");
  Eigen::VectorXd diag(npts), off(npts - 1);
  for (int k = 0; k < npts; ++k) diag[k] = 2.0 * k + 1.0 + a;
  for (int k = 1; k < npts; ++k) off[k - 1] = std::sqrt(k * (k + a));
  QuadratureRule rule = golub_welsch(RuleKind::laguerre, a, diag, off, std::tgamma(a + 1.0));
  for (auto& x : rule.nodes) x = polish_node(x, diag, off);
  return rule;
}

QuadratureRule gauss_hermite(int npts) {
  check_size(npts);
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(npts), off(npts - 1);
  for (int k = 1; k < npts; ++k) off[k - 1] = std::sqrt(0.5 * k);
  QuadratureRule rule = golub_welsch(RuleKind::hermite, 0.0, diag, off, std::sqrt(pi));
  for (auto& x : rule.nodes) x = polish_node(x, diag, off);
  // Symmetrize so that odd moments vanish to rounding.
  for (int i = 0; i < npts / 2; ++i) {
    const double x = 0.5 * (rule.nodes[npts - 1 - i] - rule.nodes[i]);
    const double w = 0.5 * (rule.weights[npts - 1 - i] + rule.weights[i]);
    rule.nodes[i] = -x;
    rule.nodes[npts - 1 - i] = x;
    rule.weights[i] = rule.weights[npts - 1 - i] = w;
  }
  if (npts % 2) rule.nodes[npts / 2] = 0.0;
  return rule;
}

AngularGrid AngularGrid::make(int ntheta, int nphi) {
  if (nphi < 1) throw DimensionError("AngularGrid: nphi must be positive");
  const QuadratureRule gl = gauss_legendre(ntheta);
  AngularGrid g;
  const double dphi = 2.0 * pi / nphi;
  for (std::size_t i = 0; i < gl.size(); ++i) {
    for (int k = 0; k < nphi; ++k) {
      g.theta.push_back(std::acos(gl.nodes[i]));
      g.phi.push_back(k * dphi);
      g.weight.push_back(gl.weights[i] * dphi);
    }
  }
  return g;
}

S3Grid S3Grid::make(int nchi, int ntheta, int nphi) {
  if (nphi < 1) throw DimensionError("S3Grid: nphi must be positive");
  const QuadratureRule gchi = gauss_legendre(nchi, 0.0, pi);
  const QuadratureRule gth = gauss_legendre(ntheta);
  const double dphi = 2.0 * pi / nphi;
  S3Grid g;
  for (std::size_t a = 0; a < gchi.size(); ++a) {
    const double s = std::sin(gchi.nodes[a]);
    for (std::size_t b = 0; b < gth.size(); ++b) {
      for (int k = 0; k < nphi; ++k) {
        g.chi.push_back(gchi.nodes[a]);
        g.theta.push_back(std::acos(gth.nodes[b]));
        g.phi.push_back(k * dphi);
        g.weight.push_back(gchi.weights[a] * s * s * gth.weights[b] * dphi);
      }
    }
  }
  return g;
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 128) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

HankelResult radial_hankel(int n, int l, double p, const HankelOptions& opt) {
  QuantumNumbers::make(n, l, 0);
  if (p < 0.0) throw DomainError("radial_hankel: p must be non-negative");
  const double cutoff = n * (opt.cutoff_scale + 4.0 * n);
  const double width = p > 0.0 ? std::min(0.5 * n, 0.5 * pi / p) : 0.5 * n;
  const int panels = int(std::ceil(cutoff / width));
  const double h = cutoff / panels;
  const QuadratureRule gl = gauss_legendre(opt.nodes_per_panel);

  std::vector<double> terms;
  terms.reserve(std::size_t(panels) * gl.size());
  for (int k = 0; k < panels; ++k) {
    const double a = k * h;
    for (std::size_t i = 0; i < gl.size(); ++i) {
      const double r = a + 0.5 * h * (gl.nodes[i] + 1.0);
      terms.push_back(0.5 * h * gl.weights[i] * radial_position(n, l, r) * spherical_bessel(l, p * r) * r * r);
    }
  }
  const double integral = pairwise_sum(terms);
  const double pref = std::sqrt(2.0 / pi);
  cplx phase{1.0, 0.0};
  for (int k = 0; k < l; ++k) phase *= -I;

  HankelResult out;
  out.value = phase * pref * integral;
  out.tail_estimate = pref * std::abs(radial_position(n, l, cutoff)) * cutoff * cutoff * n;
  out.panels = panels;
  return out;
}

McEstimate mc_gaussian(int dim, const std::function<cplx(std::span<const double>)>& integrand,
                       std::uint64_t samples, std::uint64_t seed) {
  if (dim < 1) throw DimensionError("mc_gaussian: dim must be positive");
  if (samples < 2) throw DimensionError("mc_gaussian: need at least two samples");
  constexpr std::uint64_t chunk = 1u << 15;
  const std::size_t chunks = std::size_t((samples + chunk - 1) / chunk);

  struct Partial {
    std::uint64_t count = 0;
    cplx mean{};
    double m2 = 0.0;
  };
  std::vector<Partial> partial(chunks);

  parallel_chunks(chunks, [&](std::size_t c) {
    std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(c), std::uint32_t(c >> 32)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    const std::uint64_t begin = c * chunk;
    const std::uint64_t count = std::min<std::uint64_t>(chunk, samples - begin);
    std::vector<double> u(dim);
    Partial acc;
    for (std::uint64_t s = 0; s < count; ++s) {
      for (auto& x : u) x = normal(rng);
      const cplx v = integrand(u);
      ++acc.count;
      const cplx delta = v - acc.mean;
      acc.mean += delta / double(acc.count);
      acc.m2 += std::real(std::conj(delta) * (v - acc.mean));
    }
    partial[c] = acc;
  });

  Partial total;
  for (const auto& p : partial) {
    if (p.count == 0) continue;
    const double na = double(total.count), nb = double(p.count), nt = na + nb;
    const cplx delta = p.mean - total.mean;
    total.mean += delta * (nb / nt);
    total.m2 += p.m2 + std::norm(delta) * na * nb / nt;
    total.count += p.count;
  }
  McEstimate out;
  out.value = total.mean;
  out.samples = total.count;
  out.std_error = std::sqrt(total.m2 / double(total.count - 1) / double(total.count));
  return out;
}

}  // namespace fockspace

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fockspace/types.hpp"

namespace fockspace {

enum class RuleKind { legendre, laguerre, hermite };

/// One-dimensional Gaussian rule. Nodes are strictly increasing.
struct QuadratureRule {
  RuleKind kind = RuleKind::legendre;
  double alpha = 0.0;  // Laguerre weight exponent t^alpha e^{-t}
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  auto integrate(F&& f) const {
    using R = decltype(f(0.0));
    R sum{};
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

/// Gauss-Legendre on [-1, 1]; exact for polynomials of degree 2*npts - 1.
QuadratureRule gauss_legendre(int npts);

/// Gauss-Legendre mapped onto [a, b].
QuadratureRule gauss_legendre(int npts, double a, double b);

/// Gauss-Laguerre for the weight t^a e^{-t} on (0, inf).
QuadratureRule gauss_laguerre(int npts, double a);

/// Gauss-Hermite for the weight e^{-x^2} on the real line.
QuadratureRule gauss_hermite(int npts);

/// Product grid on the unit sphere: Gauss-Legendre in cos(theta), uniform phi.
/// Exact for Y_lm * conj(Y_l'm') whenever l + l' <= 2 * ntheta - 1 and |m - m'| < nphi.
struct AngularGrid {
  std::vector<double> theta;
  std::vector<double> phi;
  std::vector<double> weight;

  static AngularGrid make(int ntheta, int nphi);
  std::size_t size() const { return theta.size(); }
};

/// Product grid on S^3 in hyperspherical angles (chi, theta, phi):
/// Gauss-Legendre in chi with the sin^2(chi) Jacobian folded into the weight,
/// Gauss-Legendre in cos(theta), uniform phi. Total weight is 2 pi^2.
struct S3Grid {
  std::vector<double> chi;
  std::vector<double> theta;
  std::vector<double> phi;
  std::vector<double> weight;

  static S3Grid make(int nchi, int ntheta, int nphi);
  std::size_t size() const { return chi.size(); }
};

/// Pairwise (cascade) summation of a span of values.
double pairwise_sum(std::span<const double> values);

/// Radial momentum transform used as the independent Fourier oracle:
/// (-i)^l sqrt(2/pi) * int_0^inf R_nl(r) j_l(p r) r^2 dr,
/// integrated with composite Gauss-Legendre panels that resolve both the
/// e^{-r/n} scale and the oscillation period of j_l(p r).
struct HankelOptions {
  int nodes_per_panel = 20;
  double cutoff_scale = 60.0;  // domain end is n * (cutoff_scale + 4 n)
};

struct HankelResult {
  cplx value;
  double tail_estimate = 0.0;  // rough size of the neglected tail beyond the cutoff
  int panels = 0;
};

HankelResult radial_hankel(int n, int l, double p, const HankelOptions& opt = {});

struct McEstimate {
  cplx value;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

/// Monte Carlo mean of integrand(u) for u with density pi^{-dim/2} e^{-|u|^2}.
/// Samples are drawn in fixed-size chunks, each from its own mt19937_64 stream
/// seeded by (seed, chunk index); the result is identical for any thread count.
McEstimate mc_gaussian(int dim, const std::function<cplx(std::span<const double>)>& integrand,
                       std::uint64_t samples, std::uint64_t seed);

}  // namespace fockspace

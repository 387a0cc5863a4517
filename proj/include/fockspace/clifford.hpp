#pragma once

// Block-recursive matrices A_n = x_{2n} I + sum_{i<2n} x_i Gamma_i and the
// Gaussian (Bargmann) integrals of exp(alpha conj(z)^t A_n z).

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "fockspace/types.hpp"

namespace fockspace {

constexpr int max_clifford_level = 6;

struct CliffordMatrix {
  int level = 1;
  std::vector<double> x;
  Eigen::MatrixXcd entries;

  /// Side of the matrix, 2^{level-1}; level 1 is 2x2 as well.
  static int side(int level) { return level == 1 ? 2 : 1 << (level - 1); }
  /// Number of real parameters: 3 at level 1, 2n otherwise.
  static int parameter_count(int level) { return level == 1 ? 3 : 2 * level; }
};

/// Level 1: [[x3 + i x2, i x1], [i x1, x3 - i x2]] (real integration variables).
/// Level 2: [[x4 + i x3, x2 + i x1], [-x2 + i x1, x4 - i x3]].
/// Level n >= 3: [[(x_{2n} + i x_{2n-1}) I, A_{n-1}], [-A_{n-1}^dagger, (x_{2n} - i x_{2n-1}) I]].
/// Throws DimensionError on a wrong parameter count or level outside [1, 6].
CliffordMatrix build_A(int n, const std::vector<double>& x);

/// Gamma_i = dA_n/dx_i; the last one is the identity.
std::vector<Eigen::MatrixXcd> gammas(int n);

/// The 4x4 matrix exactly as it appears in the octonion-type quadratic form
/// conj(z)^t A z = x6 r + i (x1 x1' + ... + x5 x5').
Eigen::Matrix4cd printed_A3(const std::vector<double>& x);

/// printed_A3(x) = T build_A(3, y) T with T = diag(1, 1, 1, -1); returns y.
std::vector<double> printed_A3_relabel(const std::vector<double>& x);

/// Exponent e_n of the closed form: 1 at level 1 for the determinant, 2^{n-2} for n >= 2.
int det_exponent(int n);

enum class GaussianMethod { determinant, monte_carlo };

struct GaussianResult {
  cplx value;
  cplx closed_form;
  double residual = 0.0;
  GaussianMethod method = GaussianMethod::determinant;
  double std_error = 0.0;
};

/// det(I - alpha A_n) by LU against (1 - 2 alpha x_{2n} + alpha^2 |x|^2)^{e_n}.
/// Throws SingularityError when the closed form is below 1e-12 in modulus.
GaussianResult det_identity(int n, const std::vector<double>& x, cplx alpha);

/// Claimed value of int exp(alpha conj(z)^t A_n z) dmu(z): 1/det(I - alpha A_n),
/// or det^{-1/2} for the real-variable level-1 integral.
cplx bargmann_closed(int n, const std::vector<double>& x, cplx alpha);

/// Monte Carlo estimate of the same integral under the standard complex
/// Gaussian measure pi^{-s} e^{-|z|^2} (real Gaussian pi^{-1} e^{-|u|^2} at level 1).
/// Requires |alpha| |x| < 1 and samples >= 10^4.
GaussianResult gaussian_mc(int n, const std::vector<double>& x, cplx alpha, std::uint64_t samples,
                           std::uint64_t seed);

/// |bargmann_closed - sum_{m < terms} alpha^m |x|^m C_m^{(g)}(x_{2n}/|x|)| with
/// g = 2^{n-2} (n >= 2) or 1/2 (n = 1).
double gegenbauer_series_check(int n, const std::vector<double>& x, cplx alpha, int terms);

}  // namespace fockspace

#pragma once

// Hydrogen bound states (atomic units, Z = 1) in position and momentum space,
// the Fock projection, and the generating functions whose Taylor coefficients
// are the bound-state wavefunctions.

#include <optional>

#include "fockspace/specfun.hpp"
#include "fockspace/types.hpp"

namespace fockspace {

/// Quantum numbers plus the length scale delta = 1/n and omega = 2 delta.
struct BoundState {
  QuantumNumbers qn;
  double delta = 1.0;
  double omega = 2.0;

  static BoundState make(const QuantumNumbers& qn) {
    return BoundState{qn, 1.0 / qn.n, 2.0 / qn.n};
  }
};

/// N_nl = (2/n^2) sqrt((n-l-1)! / (n+l)!).
double radial_normalization(int n, int l);

/// R_nl(omega r) with the textbook Laguerre convention. omega defaults to 2/n;
/// passing another omega evaluates the fixed-scale member used by the
/// generating functions.
double radial_position(int n, int l, double r, std::optional<double> omega = std::nullopt);

cplx psi_position(const QuantumNumbers& qn, const Vec3& r);

/// Overall phase in front of the closed-form momentum wavefunction.
/// printed: i^l; fourier: (-i)^l, which is what exp(-i p.r) produces.
enum class PhaseConvention { printed, fourier };

/// Real radial factor F_nl(p) so that psi(p) = phase * F_nl(p) * Y_lm(p_hat):
/// N_nl l!/sqrt(2pi) * n (4 delta)^{l+1} p^l / (p^2 + delta^2)^{l+2} * C^{l+1}_{n-l-1}(x).
double momentum_radial(int n, int l, double p);

/// Closed-form momentum wavefunction in the Gegenbauer C^{l+1} form.
cplx psi_momentum(const QuantumNumbers& qn, const Vec3& p, PhaseConvention phase = PhaseConvention::printed);

/// Same state in the difference form (l+1)! [C^{l+2}_{n-l-1} - C^{l+2}_{n-l-3}],
/// i.e. before the Gegenbauer order-lowering recurrence is applied.
cplx psi_momentum_difference_form(const QuantumNumbers& qn, const Vec3& p,
                                  PhaseConvention phase = PhaseConvention::printed);

/// Bound-state energy -1/(2 n^2) hartree.
double energy(int n);

/// Same energy indexed by the R^4 oscillator quantum number n_osc = 2n - 2.
double energy_from_oscillator(int n_osc);

/// Point of the unit 3-sphere reached by the Fock projection.
struct FockPoint {
  Vec4 y;
  double x = 0.0;  // y[3], the Gegenbauer argument (p^2 - delta^2)/(p^2 + delta^2)
};

FockPoint fock_map(const Vec3& p, double delta);

double fock_variable(double p2, double delta);

/// Arguments shared by the generating functions. delta fixes the length
/// scale for every term of the expansion (delta = 1/n0 for a reference n0).
struct GenFuncParams {
  cplx z;
  cplx alpha;
  MonomialPair pair;
  double beta = 0.0;
  double delta = 1.0;

  static GenFuncParams for_reference(int n0, cplx z, cplx alpha, MonomialPair pair, double beta = 0.0);
};

/// z/(1-z)^2 exp[-omega r (1+z)/(2(1-z)) + alpha omega z (a.r)/(2(1-z)^2)].
cplx genfunc_position(const GenFuncParams& g, const Vec3& r);

/// (2/sqrt(2pi)) z / [(delta(1+z) + beta(1-z))^2 + (1-z)^2 p^2 + 2 i alpha delta z (a.p)].
cplx genfunc_momentum_regulated(const GenFuncParams& g, const Vec3& p);

/// (4 delta/sqrt(2pi)) z (1-z^2) / [(delta(1+z))^2 + (1-z)^2 p^2 + 2 i alpha delta z (a.p)]^2.
cplx genfunc_momentum(const GenFuncParams& g, const Vec3& p);

/// -d/dbeta of the regulated generating function at beta = 0, by a
/// one-sided second-order stencil with Richardson extrapolation (beta >= 0
/// is never violated).
struct BetaDerivativeCheck {
  cplx finite_difference;
  cplx closed_form;
  double relative_error = 0.0;
};

BetaDerivativeCheck beta_derivative_check(const GenFuncParams& g, const Vec3& p, double step = 1e-3);

enum class GenFuncKind { position, momentum };

/// Radii of the circles used by the Cauchy coefficient extraction.
struct CauchyRadii {
  double z = 0.4;
  double alpha = 0.5;
  double xi = 0.7;
  double eta = 0.7;
  int nz = 48;
  int nalpha = 16;
  int nxi = 12;
  int neta = 12;
};

struct CoefficientResult {
  cplx value;  // coefficient of z^n alpha^l phi_lm(xi, eta)
  double residual = 0.0;  // spread between two z-radii
  bool converged = true;
};

/// Taylor coefficient of z^n alpha^l phi_lm(xi, eta) of a generating function
/// at a fixed space point, by iterated trapezoid sums on circles (Cauchy
/// integrals). For n = n0 this equals sqrt(4 pi/(2l+1)) psi_nlm / N_nl.
CoefficientResult extract_coefficient(GenFuncKind kind, int n, int l, int m, int n0, const Vec3& point,
                                      const CauchyRadii& radii = {}, double tolerance = 1e-6);

/// Expected value of the extracted coefficient: sqrt(4 pi/(2l+1)) psi / N_nl.
/// The momentum side uses the Fourier phase, which is what the generating
/// function actually carries.
cplx scaled_wavefunction(GenFuncKind kind, const QuantumNumbers& qn, const Vec3& point);

}  // namespace fockspace

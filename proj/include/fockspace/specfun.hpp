#pragma once

// Scalar special functions shared by the rest of the library.
//
// Conventions:
//  * associated Laguerre polynomials use the textbook normalization
//    sum_k z^k L_k^{(a)}(x) = (1-z)^{-a-1} exp(-x z / (1-z));
//  * spherical harmonics carry the Condon-Shortley phase;
//  * angular momenta that may be half-integer are passed as Spin, which
//    stores twice the value so no floating-point j ever appears.

#include <Eigen/Dense>

#include "fockspace/types.hpp"

namespace fockspace {

/// Angular-momentum label stored as a doubled integer (j = twice / 2).
struct Spin {
  int twice = 0;

  static constexpr Spin integer(int j) { return Spin{2 * j}; }
  static constexpr Spin half(int twice_j) { return Spin{twice_j}; }
  /// Nearest doubled integer to 2*v; throws if v is not a multiple of 1/2.
  static Spin from_double(double v);

  constexpr double value() const { return 0.5 * twice; }
  constexpr bool is_integer() const { return twice % 2 == 0; }
  constexpr Spin operator-() const { return Spin{-twice}; }
  friend constexpr bool operator==(Spin, Spin) = default;
};

/// Bound-state labels (n, l, m) of the hydrogen atom.
struct QuantumNumbers {
  int n = 1;
  int l = 0;
  int m = 0;

  /// Validates 1 <= n, 0 <= l <= n-1, |m| <= l.
  static QuantumNumbers make(int n, int l, int m);
  static bool valid(int n, int l, int m) {
    return n >= 1 && l >= 0 && l <= n - 1 && m >= -l && m <= l;
  }
};

/// Free spinor components (xi, eta) that parameterize the null vector.
struct MonomialPair {
  cplx xi;
  cplx eta;
};

/// Isotropic complex vector a = (-xi^2 + eta^2, -i(xi^2 + eta^2), 2 xi eta).
struct NullVector {
  cplx a1, a2, a3;

  static NullVector from_pair(const MonomialPair& p);
  cplx dot(const Vec3& r) const { return a1 * r[0] + a2 * r[1] + a3 * r[2]; }
  cplx self_dot() const { return a1 * a1 + a2 * a2 + a3 * a3; }
};

double log_factorial(int k);

/// Associated Laguerre polynomial L_k^{(a)}(x) by the three-term recurrence.
double laguerre(int k, double a, double x);

/// Gegenbauer polynomial C_m^{(a)}(x); negative degree returns 0.
double gegenbauer(int m, double a, double x);

/// Y_lm(theta, phi) with the Condon-Shortley phase.
cplx spherical_harmonic(int l, int m, double theta, double phi);

/// Solid harmonic |r|^l Y_lm(r_hat); at the origin this is Y_00 for l = 0 and 0 otherwise.
cplx solid_harmonic(int l, int m, const Vec3& r);

/// Spherical Bessel function j_l(x) for x >= 0.
double spherical_bessel(int l, double x);

/// Wigner 3j symbol; exactly 0 whenever a selection rule fails.
double wigner_3j(Spin j1, Spin j2, Spin j3, Spin m1, Spin m2, Spin m3);

/// Small Wigner d^j_{mp,m}(theta), indexed so that
/// d^l_{0,m}(theta) = sqrt(4 pi / (2l+1)) Y_lm(theta, 0).
double wigner_small_d(Spin j, Spin mp, Spin m, double theta);

/// D^j_{mp,m}(psi, theta, phi) = exp(-i mp psi) d^j_{mp,m}(theta) exp(-i m phi).
cplx wigner_D(Spin j, Spin mp, Spin m, double psi, double theta, double phi);

using Mat2c = Eigen::Matrix2cd;

/// Representation matrix of a 2x2 complex matrix U on degree-2j monomials:
/// phi_{j,mp}(U z) = sum_m D_{mp,m} phi_{j,m}(z). Row/column k holds m = -j + k.
Eigen::MatrixXcd wigner_D_matrix(Spin j, const Mat2c& U);

/// SU(2) element whose representation matrices reproduce wigner_D:
/// U = Uz(psi) Uy(theta) Uz(phi), Uz(a) = diag(e^{-ia/2}, e^{ia/2}).
Mat2c su2_from_euler(double psi, double theta, double phi);

/// phi_{jm}(xi, eta) = xi^{j+m} eta^{j-m} / sqrt((j+m)! (j-m)!).
cplx monomial_pair(Spin j, Spin m, cplx xi, cplx eta);
cplx monomial_pair(int l, int m, cplx xi, cplx eta);

}  // namespace fockspace

#pragma once

// Gegenbauer and hyperspherical identities checked numerically: generating
// functions, the order-lowering recurrence, an integral representation, the
// plane-wave expansion, the duplication formula, S^3 harmonics, the
// triple-D integral and the SU(2) passage formula.

#include <string>

#include "fockspace/specfun.hpp"
#include "fockspace/types.hpp"

namespace fockspace {

/// One evaluated identity: residual = |lhs - rhs| / max(1, |lhs|).
struct IdentityCase {
  std::string id;
  cplx lhs;
  cplx rhs;
  double residual = 0.0;

  static IdentityCase make(std::string id, cplx lhs, cplx rhs);
};

struct GegenbauerGenFunc {
  double closed = 0.0;
  double series = 0.0;
  double residual = 0.0;
  int terms = 0;
  bool converged = true;  // false when the tail bound never reached 1e-15 relative
};

/// (1 - 2 x t + t^2)^{-a} against sum_m t^m C_m^{(a)}(x). Requires a > 0, |t| < 1, |x| <= 1.
GegenbauerGenFunc genfunc_gegenbauer(double a, double t, double x);

/// lhs = e^{z cos chi} (z sin chi / 2)^{1/2 - a} J_{a-1/2}(z sin chi),
/// rhs = sum_n Gamma(2a) / (Gamma(a+1/2) Gamma(2a+n)) C_n^{(a)}(cos chi) z^n.
IdentityCase bessel_genfunc(double a, double z, double chi);

/// |(n+a) C_{n+1}^{(a-1)}(x) - (a-1)(C_{n+1}^{(a)}(x) - C_{n-1}^{(a)}(x))|, divided by the
/// largest of 1 and the three term magnitudes.
double gegenbauer_recurrence(double a, int n, double x);

struct IntegralRep {
  double lhs = 0.0;              // (1 - 2 alpha cos chi + alpha^2)^{-(l+1)}
  double rhs_integral = 0.0;     // int_0^inf e^{-t} t^{l+1} e^{alpha t cos chi} j_l(alpha t sin chi) dt
  double calibration = 0.0;      // rhs_integral / lhs
  double reduced_constant = 0.0; // calibration / (alpha sin chi)^l, independent of chi
  double expected_constant = 0.0;  // 2^l l!
};

/// Gauss-Laguerre with weight t^{l+1} e^{-t} after the scaling t -> t/(1 - alpha cos chi).
IntegralRep integral_rep(int l, double alpha, double chi, int quad_nodes = 40);

/// Variant with prefactor (-1)^l / (pi 2^{l+1} l!) and no alpha, i.e. alpha = 1.
/// It does not reproduce the left-hand side; kept for the discrepancy report.
double integral_rep_printed_rhs(int l, double chi, int quad_nodes = 80);

struct PlaneWave {
  cplx exact;
  cplx partial;
  double residual = 0.0;
};

/// e^{i r.r'} against 4 pi sum_{l <= L} sum_m i^l j_l(r r') conj(Y_lm(r'_hat)) Y_lm(r_hat).
PlaneWave plane_wave_partial(const Vec3& r, const Vec3& rp, int L);

struct Duplication {
  double printed_ratio = 0.0;      // Gamma(1/2) Gamma(2n+2) / (2^{2n} Gamma(n+3/2) Gamma(n+1))
  double printed_residual = 0.0;   // |printed_ratio - 1|
  double corrected_residual = 0.0; // same with 2^{2n+1}
};

Duplication duplication_check(int n);

/// Point (x, y, z, q) of S^3 (or R^4 when scaled) from hyperspherical angles.
Vec4 s3_from_angles(double chi, double theta, double phi, double v = 1.0);

/// Unit quaternion matrix [[q + i z, y + i x], [-y + i x, q - i z]] of v = (x, y, z, q).
Mat2c su2_from_s3(const Vec4& v);

/// Harmonic polynomial of degree n-1 on R^4:
/// N v^{n-1} sin^l(chi) C^{l+1}_{n-l-1}(cos chi) Y_lm(theta, phi),
/// N = 2^{l+1} l! sqrt(n (n-l-1)! / (2 pi (n+l)!)); orthonormal on the unit S^3.
cplx hyperspherical_Y(int n, int l, int m, const Vec4& v);

/// Second-order finite-difference 4-D Laplacian of hyperspherical_Y at v.
cplx hyperspherical_laplacian(int n, int l, int m, const Vec4& v, double h = 1e-3);

struct TripleD {
  cplx numeric;
  double threej_product = 0.0;
  double residual = 0.0;
};

/// (1/8 pi^2) int D^j_{j,m1} D^j_{-j,m2} D^l_{0,m} dU with j = (n-1)/2 over
/// Euler angles, against 3j(j j l; j -j 0) 3j(j j l; m1 m2 m).
TripleD triple_D_integral(int n, Spin m1, Spin m2, int l, int m, int theta_nodes = 48);

/// (-i)^l / pi sqrt(n/2) sum_{m1 m2} (-1)^{j-m2} sqrt(2l+1) 3j(j j l; m1 -m2 m) D^j_{m1 m2}(U)
/// with j = (n-1)/2 and U = su2_from_s3(v).
cplx passage_rhs(int n, int l, int m, const Vec4& v);

/// Global phase hyperspherical_Y / passage_rhs, taken where |passage_rhs| is largest
/// over a few fixed generic points.
cplx passage_phase(int n, int l);

struct PassageCheck {
  cplx lhs;
  cplx rhs;
  cplx phase;
  double residual = 0.0;  // |lhs - phase * rhs|
};

PassageCheck passage_residual(int n, int l, int m, double chi, double theta, double phi);

}  // namespace fockspace

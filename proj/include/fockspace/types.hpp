#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace fockspace {

using cplx = std::complex<double>;

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;
using Vec5 = std::array<double, 5>;
using Vec8 = std::array<double, 8>;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr cplx I{0.0, 1.0};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct IndexError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct SingularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <std::size_t N>
double norm2(const std::array<double, N>& v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return s;
}

template <std::size_t N>
double norm(const std::array<double, N>& v) {
  return std::sqrt(norm2(v));
}

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

/// Polar and azimuthal angle of a 3-vector; the origin maps to (0, 0).
struct SphericalAngles {
  double r;
  double theta;
  double phi;
};

inline SphericalAngles to_spherical(const Vec3& v) {
  const double r = norm(v);
  if (r == 0.0) return {0.0, 0.0, 0.0};
  const double ct = std::clamp(v[2] / r, -1.0, 1.0);
  return {r, std::acos(ct), std::atan2(v[1], v[0])};
}

}  // namespace fockspace

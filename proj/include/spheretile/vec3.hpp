#pragma once

#include <array>
#include <cmath>
#include <ostream>

namespace spheretile {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }

  constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  constexpr Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
  Vec3 normalized() const {
    const double n = norm();
    return {x / n, y / n, z / n};
  }
};

inline constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline constexpr double dot(const Vec3& a, const Vec3& b) { return a.dot(b); }
inline constexpr Vec3 cross(const Vec3& a, const Vec3& b) { return a.cross(b); }
inline constexpr double triple(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a.cross(b).dot(c);
}

inline std::ostream& operator<<(std::ostream& os, const Vec3& v) {
  return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}

// Column-major is irrelevant here; entries are m[row][col].
struct Mat3 {
  std::array<std::array<double, 3>, 3> m{};

  static Mat3 identity() {
    Mat3 r;
    r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
    return r;
  }

  Vec3 operator*(const Vec3& v) const {
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
  }

  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
        r.m[i][j] = s;
      }
    return r;
  }

  double trace() const { return m[0][0] + m[1][1] + m[2][2]; }
};

// Rodrigues rotation about a unit axis, right-hand rule.
inline Mat3 rotation_about(const Vec3& axis, double angle) {
  const double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
  const double ux = axis.x, uy = axis.y, uz = axis.z;
  Mat3 r;
  r.m = {{{c + ux * ux * t, ux * uy * t - uz * s, ux * uz * t + uy * s},
          {uy * ux * t + uz * s, c + uy * uy * t, uy * uz * t - ux * s},
          {uz * ux * t - uy * s, uz * uy * t + ux * s, c + uz * uz * t}}};
  return r;
}

// Angle of a rotation matrix, in [0, pi]. atan2 of the antisymmetric part
// against the trace stays well conditioned near the identity, where acos of
// the trace alone would amplify rounding to ~1e-8.
inline double rotation_angle(const Mat3& r) {
  const double sx = r.m[2][1] - r.m[1][2];
  const double sy = r.m[0][2] - r.m[2][0];
  const double sz = r.m[1][0] - r.m[0][1];
  const double s = 0.5 * std::sqrt(sx * sx + sy * sy + sz * sz);
  const double c = 0.5 * (r.trace() - 1.0);
  return std::atan2(s, c);
}

inline double clamp_unit(double v) {
  if (v > 1.0) return 1.0;
  if (v < -1.0) return -1.0;
  return v;
}

}  // namespace spheretile

#pragma once

#include <array>
#include <cmath>

#include "spheretile/errors.hpp"
#include "spheretile/vec3.hpp"

namespace spheretile {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kNormTol = 1e-12;
inline constexpr double kTripleTol = 1e-10;

/// A point on the unit sphere. Construction normalizes the input vector;
/// a near-zero vector is rejected.
class SpherePoint {
 public:
  explicit SpherePoint(const Vec3& v) {
    const double n = v.norm();
    if (n < 1e-9) throw invalid_parameter_error("SpherePoint: zero-length vector");
    v_ = v / n;
  }
  SpherePoint(double x, double y, double z) : SpherePoint(Vec3{x, y, z}) {}

  const Vec3& vec() const { return v_; }
  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }

  SpherePoint antipode() const {
    SpherePoint p = *this;
    p.v_ = -p.v_;
    return p;
  }

 private:
  Vec3 v_;
};

inline double angular_distance(const SpherePoint& p, const SpherePoint& q) {
  return std::acos(clamp_unit(p.vec().dot(q.vec())));
}

/// Rotation by pi about the axis through q: maps p to the point r such that
/// q is the midpoint of the arc p -> r on their common great circle.
inline SpherePoint half_turn(const SpherePoint& q, const SpherePoint& p) {
  const Vec3 u = q.vec();
  return SpherePoint(u * (2.0 * u.dot(p.vec())) - p.vec());
}

/// Point r on the great circle through p, q with q the midpoint of arc p->r.
inline SpherePoint extend_double(const SpherePoint& p, const SpherePoint& q) {
  const double d = angular_distance(p, q);
  if (d < 1e-12 || kPi - d < 1e-12)
    throw degenerate_arc_error("extend_double: coincident or antipodal inputs");
  return half_turn(q, p);
}

/// Side opposite angle A in a spherical triangle with adjacent sides b, c.
inline double cos_law_side(double b, double c, double A) {
  return std::acos(clamp_unit(std::cos(b) * std::cos(c) + std::sin(b) * std::sin(c) * std::cos(A)));
}

/// Angle opposite side a in a spherical triangle with sides a, b, c.
inline double cos_law_angle(double a, double b, double c) {
  if (a >= b + c || a <= std::fabs(b - c) || a + b + c >= 2.0 * kPi)
    throw infeasible_triangle_error("cos_law_angle: sides violate triangle inequality");
  return std::acos(clamp_unit((std::cos(a) - std::cos(b) * std::cos(c)) /
                              (std::sin(b) * std::sin(c))));
}

enum class RegionLocation { Interior, Boundary, Exterior };

/// Spherical triangle, vertices counterclockwise as seen from outside.
struct SphericalTriangleRegion {
  SpherePoint v1, v2, v3;

  SphericalTriangleRegion(const SpherePoint& a, const SpherePoint& b, const SpherePoint& c)
      : v1(a), v2(b), v3(c) {
    for (const auto* p : {&a, &b, &c})
      for (const auto* q : {&a, &b, &c}) {
        if (p == q) continue;
        const double d = angular_distance(*p, *q);
        if (d < 1e-9 || d > kPi - 1e-9)
          throw invalid_parameter_error("triangle: coincident or antipodal vertices");
      }
    if (triple(a.vec(), b.vec(), c.vec()) <= kTripleTol)
      throw invalid_parameter_error("triangle: vertices collinear or not counterclockwise");
  }
};

/// Classifies p against the triangle by the signs of the three scalar triple
/// products det(v_i, v_{i+1}, p).
inline RegionLocation in_triangle(const SpherePoint& p, const SphericalTriangleRegion& t) {
  const double s1 = triple(t.v1.vec(), t.v2.vec(), p.vec());
  const double s2 = triple(t.v2.vec(), t.v3.vec(), p.vec());
  const double s3 = triple(t.v3.vec(), t.v1.vec(), p.vec());
  const bool any_zero = std::fabs(s1) <= kTripleTol || std::fabs(s2) <= kTripleTol ||
                        std::fabs(s3) <= kTripleTol;
  if (s1 > kTripleTol && s2 > kTripleTol && s3 > kTripleTol) return RegionLocation::Interior;
  if (any_zero && s1 >= -kTripleTol && s2 >= -kTripleTol && s3 >= -kTripleTol)
    return RegionLocation::Boundary;
  return RegionLocation::Exterior;
}

struct PlanePoint {
  double u = 0.0;
  double v = 0.0;
};

/// Orthonormal tangent basis at p, deterministic in p.
inline std::array<Vec3, 2> tangent_basis(const SpherePoint& p) {
  const Vec3 n = p.vec();
  Vec3 ref = std::fabs(n.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
  const Vec3 e1 = cross(ref, n).normalized();
  const Vec3 e2 = cross(n, e1);
  return {e1, e2};
}

/// Stereographic projection from the antipode of `pole` onto the tangent
/// plane at `pole`; the great circle at distance pi/2 from the pole maps to
/// the unit circle, so |image| = tan(theta/2) at angular distance theta.
inline PlanePoint stereo_project(const SpherePoint& p, const SpherePoint& pole) {
  const double c = p.vec().dot(pole.vec());
  if (1.0 + c < 1e-9)
    throw point_at_infinity_error("stereo_project: point at the projection center");
  const auto basis = tangent_basis(pole);
  const Vec3 t = p.vec() - pole.vec() * c;
  const double scale = 1.0 / (1.0 + c);
  return {t.dot(basis[0]) * scale, t.dot(basis[1]) * scale};
}

/// Unit tangent at `from` pointing along the great circle toward `to`.
inline Vec3 tangent_toward(const SpherePoint& from, const SpherePoint& to) {
  const Vec3 p = from.vec();
  const Vec3 t = to.vec() - p * p.dot(to.vec());
  const double n = t.norm();
  if (n < 1e-13) throw degenerate_arc_error("tangent_toward: coincident or antipodal points");
  return t / n;
}

/// Point at arc length s from p along the unit tangent t.
inline SpherePoint geodesic_step(const SpherePoint& p, const Vec3& t, double s) {
  return SpherePoint(p.vec() * std::cos(s) + t * std::sin(s));
}

}  // namespace spheretile

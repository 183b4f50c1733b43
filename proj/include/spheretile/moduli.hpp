#pragma once

#include <cmath>
#include <string>

#include "spheretile/errors.hpp"
#include "spheretile/quad_solver.hpp"
#include "spheretile/sphere_geom.hpp"

namespace spheretile {

/// Strata of the 2-layer moduli by position of D: the interiors of the four
/// triangles AEF, A'EF, A'EP, A'FQ, the three named degenerate arcs, and
/// everything else (self-intersecting boundary).
enum class TwoLayerRegion {
  ConvexInterior,
  ConcaveDelta,
  ConcaveBeta,
  ConcaveGamma,
  DegenerateDelta,
  DegenerateBeta,
  DegenerateGamma,
  SelfIntersecting
};

inline const char* to_string(TwoLayerRegion r) {
  switch (r) {
    case TwoLayerRegion::ConvexInterior: return "ConvexInterior";
    case TwoLayerRegion::ConcaveDelta: return "ConcaveDelta";
    case TwoLayerRegion::ConcaveBeta: return "ConcaveBeta";
    case TwoLayerRegion::ConcaveGamma: return "ConcaveGamma";
    case TwoLayerRegion::DegenerateDelta: return "DegenerateDelta";
    case TwoLayerRegion::DegenerateBeta: return "DegenerateBeta";
    case TwoLayerRegion::DegenerateGamma: return "DegenerateGamma";
    case TwoLayerRegion::SelfIntersecting: return "SelfIntersecting";
  }
  return "?";
}

namespace detail {

/// p strictly inside the minor arc u -> v (endpoints excluded).
inline bool on_open_arc(const SpherePoint& p, const SpherePoint& u, const SpherePoint& v) {
  if (std::fabs(triple(u.vec(), v.vec(), p.vec())) > kTripleTol) return false;
  const double duv = angular_distance(u, v);
  const double dup = angular_distance(u, p);
  const double dpv = angular_distance(p, v);
  if (dup < 1e-10 || dpv < 1e-10) return false;
  return std::fabs(dup + dpv - duv) < 1e-9;
}

}  // namespace detail

/// Fixed frame of the 2-layer construction: A the north pole, E and F on the
/// equator at longitudes -pi/2n and +pi/2n, P and Q their pi/2 extensions.
inline TwoLayerRegion classify_two_layer(int n, const SpherePoint& D) {
  if (n < 3) throw invalid_parameter_error("classify_two_layer: n must be >= 3");
  const double h = kPi / (2.0 * n);
  const SpherePoint A(0, 0, 1);
  const SpherePoint Ap(0, 0, -1);
  const SpherePoint E(std::cos(-h), std::sin(-h), 0);
  const SpherePoint F(std::cos(h), std::sin(h), 0);
  const SpherePoint P(std::cos(-h - kPi / 2.0), std::sin(-h - kPi / 2.0), 0);
  const SpherePoint Q(std::cos(h + kPi / 2.0), std::sin(h + kPi / 2.0), 0);

  // Ties resolve toward the degenerate arcs.
  if (detail::on_open_arc(D, E, F)) return TwoLayerRegion::DegenerateDelta;
  if (detail::on_open_arc(D, Ap, E)) return TwoLayerRegion::DegenerateBeta;
  if (detail::on_open_arc(D, Ap, F)) return TwoLayerRegion::DegenerateGamma;

  const SphericalTriangleRegion aef(A, E, F);
  const SphericalTriangleRegion apfe(Ap, F, E);
  const SphericalTriangleRegion apep(Ap, E, P);
  const SphericalTriangleRegion apqf(Ap, Q, F);
  if (in_triangle(D, aef) == RegionLocation::Interior) return TwoLayerRegion::ConcaveDelta;
  if (in_triangle(D, apfe) == RegionLocation::Interior) return TwoLayerRegion::ConvexInterior;
  if (in_triangle(D, apep) == RegionLocation::Interior) return TwoLayerRegion::ConcaveBeta;
  if (in_triangle(D, apqf) == RegionLocation::Interior) return TwoLayerRegion::ConcaveGamma;
  return TwoLayerRegion::SelfIntersecting;
}

enum class ReductionTag { None_a2bc, Reduce_a2b2, Reduce_a3b_ab, Reduce_a3b_ac, Reduce_a4 };

inline const char* to_string(ReductionTag t) {
  switch (t) {
    case ReductionTag::None_a2bc: return "None_a2bc";
    case ReductionTag::Reduce_a2b2: return "Reduce_a2b2";
    case ReductionTag::Reduce_a3b_ab: return "Reduce_a3b_ab";
    case ReductionTag::Reduce_a3b_ac: return "Reduce_a3b_ac";
    case ReductionTag::Reduce_a4: return "Reduce_a4";
  }
  return "?";
}

/// Detects coincident edge lengths; two coincidences imply the third within
/// 2 tol and dominate as a^4.
inline ReductionTag detect_reduction(const EdgeTriple& e, double tol) {
  const bool ab = std::fabs(e.a - e.b) < tol;
  const bool ac = std::fabs(e.a - e.c) < tol;
  const bool bc = std::fabs(e.b - e.c) < tol;
  if ((ab && ac) || (ab && bc) || (ac && bc)) return ReductionTag::Reduce_a4;
  if (bc) return ReductionTag::Reduce_a2b2;
  if (ab) return ReductionTag::Reduce_a3b_ab;
  if (ac) return ReductionTag::Reduce_a3b_ac;
  return ReductionTag::None_a2bc;
}

struct SubdivisionModuli {
  enum class Kind { Valid_a2bc, Reduction, Invalid };
  Kind kind = Kind::Invalid;
  ReductionTag tag = ReductionTag::None_a2bc;
};

/// Classifies the subdivision parameter: valid in (0, pi/4) away from the
/// a=b point, the two named reductions at arctan(sqrt3-1) and pi/4, invalid
/// outside (0, pi/4].
inline SubdivisionModuli subdivision_moduli(double b, double tol = 1e-9) {
  using Kind = SubdivisionModuli::Kind;
  if (!(b > 0.0 && b <= kPi / 4.0 + tol)) return {Kind::Invalid, ReductionTag::None_a2bc};
  if (std::fabs(b - kPi / 4.0) < tol) return {Kind::Reduction, ReductionTag::Reduce_a2b2};
  if (std::fabs(b - subdivision_a3b_b()) < tol)
    return {Kind::Reduction, ReductionTag::Reduce_a3b_ab};
  return {Kind::Valid_a2bc, ReductionTag::None_a2bc};
}

namespace detail {

/// Transversal intersection of two minor arcs, endpoints excluded.
inline bool arcs_cross(const SpherePoint& p1, const SpherePoint& q1, const SpherePoint& p2,
                       const SpherePoint& q2) {
  const Vec3 n1 = cross(p1.vec(), q1.vec());
  const Vec3 n2 = cross(p2.vec(), q2.vec());
  const Vec3 dir = cross(n1, n2);
  if (dir.norm() < 1e-12) return false;  // same great circle; overlap handled by adjacency
  auto inside = [](const SpherePoint& a, const SpherePoint& b, const Vec3& x) {
    const Vec3 n = cross(a.vec(), b.vec());
    const double s1 = triple(a.vec(), x, n);
    const double s2 = triple(x, b.vec(), n);
    const double end1 = (x - a.vec()).norm();
    const double end2 = (x - b.vec()).norm();
    return s1 > 1e-12 && s2 > 1e-12 && end1 > 1e-9 && end2 > 1e-9;
  };
  for (const Vec3& cand : {dir.normalized(), -dir.normalized()}) {
    if (inside(p1, q1, cand) && inside(p2, q2, cand)) return true;
  }
  return false;
}

}  // namespace detail

/// Direct simplicity test of the quadrilateral boundary ABDC of the 2-layer
/// construction: the boundary is split at the b/c-edge midpoints E, F into
/// six sub-arcs, and non-adjacent sub-arcs must not cross.
inline bool two_layer_boundary_self_intersects(const TwoLayerConstruction& t) {
  const SpherePoint pts[6] = {t.A, t.B, t.E, t.D, t.F, t.C};
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      if (j == i + 1 || (i == 0 && j == 5)) continue;  // adjacent sub-arcs share a point
      if (detail::arcs_cross(pts[i], pts[(i + 1) % 6], pts[j], pts[(j + 1) % 6])) return true;
    }
  return false;
}

}  // namespace spheretile

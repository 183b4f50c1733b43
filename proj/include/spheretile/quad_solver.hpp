#pragma once

#include <array>
#include <cmath>
#include <limits>

#include "spheretile/errors.hpp"
#include "spheretile/sphere_geom.hpp"

namespace spheretile {

inline constexpr double kSolverTol = 1e-9;
inline constexpr double kEmbedTol = 1e-8;

/// The four tile angles of the quadrilateral of Fig-1 type a^2bc: alpha
/// between the two a-edges, beta between a and b, gamma between a and c,
/// delta between b and c. Radians.
struct AngleQuad {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
};

/// The three edge arc lengths, radians.
struct EdgeTriple {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// Pieces of the quadrilateral cut along the diagonal joining the beta- and
/// gamma-corners: A is the base angle of the isosceles (a, a, x) triangle,
/// B and C are the remaining pieces at the gamma- and beta-corners, so that
/// gamma = A + B and beta = A + C for a convex tile.
struct SubAngles {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
};

struct QuadGeometry {
  AngleQuad angles;
  EdgeTriple edges;
  double diagonal_x = 0.0;
  SubAngles sub_angles;
};

/// alpha+beta+gamma+delta - (2+4/f)pi for a tiling with f quadrilaterals.
inline double angle_sum_residual(const AngleQuad& q, int f) {
  if (f < 6 || f % 2 != 0) throw invalid_parameter_error("angle_sum_residual: f must be even and >= 6");
  return q.alpha + q.beta + q.gamma + q.delta - (2.0 + 4.0 / f) * kPi;
}

/// Advisory diagnostic: a convex tile satisfies alpha + 2 beta > pi and
/// alpha + 2 gamma > pi. Reported, never enforced.
inline bool convexity_inequalities_hold(const AngleQuad& q) {
  return q.alpha + 2.0 * q.beta > kPi && q.alpha + 2.0 * q.gamma > kPi;
}

/// Diagonal and split angles from angles+edges; meaningful when the tile is
/// convex with delta < pi and all edges < pi.
inline QuadGeometry make_quad_geometry(const AngleQuad& angles, const EdgeTriple& edges) {
  QuadGeometry g;
  g.angles = angles;
  g.edges = edges;
  g.diagonal_x = std::numeric_limits<double>::quiet_NaN();
  g.sub_angles = {std::numeric_limits<double>::quiet_NaN(),
                  std::numeric_limits<double>::quiet_NaN(),
                  std::numeric_limits<double>::quiet_NaN()};
  const bool splittable = angles.delta > 0 && angles.delta < kPi && edges.a > 0 &&
                          edges.a < kPi && edges.b > 0 && edges.b < kPi && edges.c > 0 &&
                          edges.c < kPi;
  if (!splittable) return g;
  const double x = cos_law_side(edges.b, edges.c, angles.delta);
  g.diagonal_x = x;
  if (x > 1e-9 && x < kPi - 1e-9) {
    const double sa = std::sin(edges.a), sx = std::sin(x);
    const double sb = std::sin(edges.b), sc = std::sin(edges.c);
    g.sub_angles.A =
        std::acos(clamp_unit((std::cos(edges.a) - std::cos(edges.a) * std::cos(x)) / (sa * sx)));
    g.sub_angles.B =
        std::acos(clamp_unit((std::cos(edges.b) - std::cos(edges.c) * std::cos(x)) / (sc * sx)));
    g.sub_angles.C =
        std::acos(clamp_unit((std::cos(edges.c) - std::cos(edges.b) * std::cos(x)) / (sb * sx)));
  }
  return g;
}

/// Exchange the roles of (b, beta) and (c, gamma). The result describes the
/// mirror labeling of the same quadrilateral.
inline QuadGeometry swap_bc(const QuadGeometry& g) {
  AngleQuad a{g.angles.alpha, g.angles.gamma, g.angles.beta, g.angles.delta};
  EdgeTriple e{g.edges.a, g.edges.c, g.edges.b};
  return make_quad_geometry(a, e);
}

/// Unique quadrilateral of the 3-layer earth map tiling with f = 8n tiles.
/// The cubic 8t^3 - 4t + 1 = 0 in t = cos(pi/2n) sin(a/2) factors as
/// (2t-1)(4t^2+2t-1); the root t = 1/2 forces a degenerate split angle C = 0
/// and is rejected, leaving t = (sqrt5-1)/4.
inline QuadGeometry solve_three_layer(long long n) {
  if (n < 2) throw invalid_parameter_error("solve_three_layer: n must be >= 2");
  const double nn = static_cast<double>(n);
  AngleQuad angles{(nn - 1.0) / nn * kPi, kPi / nn, (nn + 1.0) / (2.0 * nn) * kPi, kPi / 2.0};
  const double cosq = std::cos(kPi / (2.0 * nn));
  const double sr5 = std::sqrt(5.0);
  const double a = 2.0 * std::asin((sr5 - 1.0) / (4.0 * cosq));
  const double b = 0.5 * (kPi - a);
  const double c = std::acos(clamp_unit(((3.0 - sr5) * cosq * cosq + sr5 - 2.0) / cosq));
  return make_quad_geometry(angles, EdgeTriple{a, b, c});
}

/// Quadrilateral subdivision of the octahedron, parameterized by the edge
/// length b in (0, pi/4]. Convention here: b is the short side at the
/// octahedron vertex, beta = pi - gamma its adjacent angle.
inline QuadGeometry solve_subdivision(double b) {
  if (!(b > 0.0 && b <= kPi / 4.0 + 1e-15))
    throw out_of_moduli_error("solve_subdivision: b outside (0, pi/4]");
  const double c = kPi / 2.0 - b;
  const double a = std::acos(std::sqrt((std::sin(2.0 * b) + 1.0) / 3.0));
  const double gamma = std::acos(
      clamp_unit((std::cos(b) - std::sin(b)) / ((std::sin(b) + std::cos(b)) * std::tan(a))));
  AngleQuad angles{2.0 * kPi / 3.0, kPi - gamma, gamma, kPi / 2.0};
  return make_quad_geometry(angles, EdgeTriple{a, b, c});
}

/// The b value at which the subdivision quadrilateral coincides with the
/// 3-layer n=3 quadrilateral (after the b<->c relabeling).
inline double subdivision_special_b() { return std::atan((3.0 - std::sqrt(5.0)) / 2.0); }

/// Reduction points of the subdivision moduli.
inline double subdivision_a3b_b() { return std::atan(std::sqrt(3.0) - 1.0); }

/// Points of the 2-layer earth map construction: A the north pole, E and F
/// on the equator with EF = pi/n (E west, F east, symmetric about the x-z
/// plane), P and Q the pi/2-extensions of FE and EF, D free.
struct TwoLayerConstruction {
  int n = 3;
  SpherePoint D;
  SpherePoint A, Aprime, E, F, P, Q;
  SpherePoint B, C;  // B = half-turn of D about E, C about F

  static TwoLayerConstruction make(int n, const SpherePoint& d) {
    if (n < 3) throw invalid_parameter_error("two_layer: n must be >= 3");
    const double h = kPi / (2.0 * n);
    SpherePoint a(0, 0, 1);
    SpherePoint e(std::cos(-h), std::sin(-h), 0);
    SpherePoint f(std::cos(h), std::sin(h), 0);
    SpherePoint p(std::cos(-h - kPi / 2.0), std::sin(-h - kPi / 2.0), 0);
    SpherePoint q(std::cos(h + kPi / 2.0), std::sin(h + kPi / 2.0), 0);
    for (const SpherePoint* m : {&e, &f}) {
      const double dm = angular_distance(d, *m);
      if (dm < 1e-9 || kPi - dm < 1e-9)
        throw degenerate_quadrilateral_error("two_layer: D coincident or antipodal with E or F");
    }
    SpherePoint b = half_turn(e, d);
    SpherePoint c = half_turn(f, d);
    return TwoLayerConstruction{n, d, a, a.antipode(), e, f, p, q, b, c};
  }
};

/// Measured data of the embedded quadrilateral ABDC of the 2-layer
/// construction. Reflex angles are detected from the orientation of the
/// boundary walk; b and c are measured through their midpoints E and F so
/// edges longer than pi are reported faithfully.
struct TwoLayerQuad {
  QuadGeometry geometry;
  bool reflex_beta = false;
  bool reflex_gamma = false;
  bool reflex_delta = false;
  bool long_edge_warning = false;  // some edge exceeds pi
};

namespace detail {

// Signed interior angle at corner v between edge tangents toward prev and
// next, assuming the walk prev->v->next has the interior on its left.
inline double interior_angle_ccw(const SpherePoint& v, const Vec3& t_prev, const Vec3& t_next) {
  const double s = triple(t_next, t_prev, v.vec());
  const double c = t_next.dot(t_prev);
  double ang = std::atan2(s, c);
  if (ang <= 0.0) ang += 2.0 * kPi;
  return ang;
}

}  // namespace detail

inline TwoLayerQuad solve_two_layer(const TwoLayerConstruction& t) {
  const SpherePoint &A = t.A, &B = t.B, &D = t.D, &C = t.C;
  if (angular_distance(A, B) < 1e-9 || angular_distance(A, C) < 1e-9)
    throw degenerate_quadrilateral_error("two_layer: B or C coincides with A");

  const double a1 = angular_distance(A, B);
  const double a2 = angular_distance(C, A);
  const double b = 2.0 * angular_distance(D, t.E);
  const double c = 2.0 * angular_distance(D, t.F);

  // Tangents along the boundary A -> B -> D -> C -> A. Edges b and c are
  // taken through their midpoints E and F, which stays correct when the
  // edge is longer than pi.
  const Vec3 tAB = tangent_toward(A, B), tAC = tangent_toward(A, C);
  const Vec3 tBA = tangent_toward(B, A), tBD = tangent_toward(B, t.E);
  const Vec3 tDB = tangent_toward(D, t.E), tDC = tangent_toward(D, t.F);
  const Vec3 tCD = tangent_toward(C, t.F), tCA = tangent_toward(C, A);

  double alpha = detail::interior_angle_ccw(A, tAC, tAB);
  double beta = detail::interior_angle_ccw(B, tBA, tBD);
  double delta = detail::interior_angle_ccw(D, tDB, tDC);
  double gamma = detail::interior_angle_ccw(C, tCD, tCA);
  double sum = alpha + beta + gamma + delta;
  if (sum > 4.0 * kPi) {
    // Boundary traversed clockwise; interior angles are the complements.
    alpha = 2.0 * kPi - alpha;
    beta = 2.0 * kPi - beta;
    gamma = 2.0 * kPi - gamma;
    delta = 2.0 * kPi - delta;
  }

  TwoLayerQuad out;
  out.geometry = make_quad_geometry(AngleQuad{alpha, beta, gamma, delta},
                                    EdgeTriple{0.5 * (a1 + a2), b, c});
  out.reflex_beta = beta > kPi + 1e-9;
  out.reflex_gamma = gamma > kPi + 1e-9;
  out.reflex_delta = delta > kPi + 1e-9;
  out.long_edge_warning = b > kPi + 1e-9 || c > kPi + 1e-9;
  return out;
}

namespace detail {

struct Frame {
  Vec3 p;  // position, unit
  Vec3 t;  // heading, unit, orthogonal to p
};

inline Frame frame_step(const Frame& f, double len) {
  const double c = std::cos(len), s = std::sin(len);
  return {f.p * c + f.t * s, f.t * c - f.p * s};
}

inline Frame frame_turn(const Frame& f, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {f.p, f.t * c + cross(f.p, f.t) * s};
}

}  // namespace detail

/// Walks the tile boundary a, beta, b, delta, c, gamma, a, alpha as a
/// composite of sphere rotations and returns the rotation angle of the
/// composite, which is 0 exactly when the quadrilateral closes up.
inline double closure_residual(const QuadGeometry& g) {
  const double sides[4] = {g.edges.a, g.edges.b, g.edges.c, g.edges.a};
  const double corners[4] = {g.angles.beta, g.angles.delta, g.angles.gamma, g.angles.alpha};
  Mat3 m = Mat3::identity();
  detail::Frame f{{0, 0, 1}, {1, 0, 0}};
  for (int i = 0; i < 4; ++i) {
    const Vec3 axis = cross(f.p, f.t);  // travel = rotation about the great-circle normal
    m = rotation_about(axis, sides[i]) * m;
    f = detail::frame_step(f, sides[i]);
    m = rotation_about(f.p, kPi - corners[i]) * m;
    f = detail::frame_turn(f, kPi - corners[i]);
  }
  return rotation_angle(m);
}

/// Corner positions of one tile walked from an anchored edge.
/// `start` sits at the corner with interior angle `corner_angles[0]`,
/// heading along the first side toward the next corner; `chirality` +1 walks
/// with the interior on the left (counterclockwise from outside).
inline std::array<SpherePoint, 4> walk_quad(const SpherePoint& start, const Vec3& heading,
                                            int chirality, const double side_lengths[4],
                                            const double corner_angles[4]) {
  std::array<SpherePoint, 4> out{start, start, start, start};
  detail::Frame f{start.vec(), heading};
  for (int i = 0; i < 3; ++i) {
    f = detail::frame_step(f, side_lengths[i]);
    out[i + 1] = SpherePoint(f.p);
    f = detail::frame_turn(f, chirality * (kPi - corner_angles[i + 1]));
  }
  return out;
}

}  // namespace spheretile

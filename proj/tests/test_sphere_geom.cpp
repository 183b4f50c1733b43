#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "spheretile/sphere_geom.hpp"

using namespace spheretile;

namespace {

std::mt19937_64 rng(20240815);

SpherePoint random_point() {
  std::normal_distribution<double> g(0.0, 1.0);
  while (true) {
    Vec3 v{g(rng), g(rng), g(rng)};
    if (v.norm() > 1e-3) return SpherePoint(v);
  }
}

Mat3 random_rotation() {
  std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
  const SpherePoint axis = random_point();
  return rotation_about(axis.vec(), u(rng));
}

}  // namespace

TEST_CASE("angular_distance basics") {
  const SpherePoint p(0.3, -0.4, 0.866);
  CHECK(angular_distance(p, p) == Catch::Approx(0.0).margin(1e-12));
  CHECK(angular_distance(p, p.antipode()) == Catch::Approx(kPi).margin(1e-12));
  const SpherePoint x(1, 0, 0), y(0, 1, 0);
  CHECK(angular_distance(x, y) == Catch::Approx(kPi / 2).margin(1e-12));
  CHECK(angular_distance(x, y) == Catch::Approx(angular_distance(y, x)));
}

TEST_CASE("SpherePoint normalizes and rejects zero") {
  const SpherePoint p(2.0, 0.0, 0.0);
  CHECK(p.vec().norm() == Catch::Approx(1.0).margin(1e-12));
  CHECK_THROWS_AS(SpherePoint(0, 0, 0), invalid_parameter_error);
}

TEST_CASE("extend_double doubles the arc") {
  const SpherePoint north(0, 0, 1), eq(1, 0, 0);
  const SpherePoint south = extend_double(north, eq);
  CHECK(angular_distance(south, SpherePoint(0, 0, -1)) == Catch::Approx(0.0).margin(1e-12));

  const SpherePoint q(std::cos(kPi / 3), 0, std::sin(kPi / 3));
  const SpherePoint r = extend_double(SpherePoint(1, 0, 0), q);
  CHECK(angular_distance(SpherePoint(1, 0, 0), r) == Catch::Approx(2 * kPi / 3).margin(1e-12));
  CHECK(std::fabs(triple(Vec3{1, 0, 0}, q.vec(), r.vec())) < 1e-10);

  CHECK_THROWS_AS(extend_double(north, north), degenerate_arc_error);
  CHECK_THROWS_AS(extend_double(north, north.antipode()), degenerate_arc_error);
}

TEST_CASE("extend_double midpoint property on random arcs") {
  for (int i = 0; i < 200; ++i) {
    const SpherePoint d = random_point();
    const SpherePoint e = random_point();
    const double de = angular_distance(d, e);
    if (de < 1e-3 || de > kPi - 1e-3) continue;
    const SpherePoint b = extend_double(d, e);
    CHECK(angular_distance(d, e) == Catch::Approx(angular_distance(e, b)).margin(1e-12));
    CHECK(std::fabs(triple(d.vec(), e.vec(), b.vec())) < 1e-10);
  }
}

TEST_CASE("cos_law_side special cases") {
  // Spherical Pythagoras at A = pi/2.
  const double b = 0.7, c = 1.1;
  CHECK(cos_law_side(b, c, kPi / 2) ==
        Catch::Approx(std::acos(std::cos(b) * std::cos(c))).margin(1e-12));
  // Degenerate third side.
  CHECK(cos_law_side(b, 1e-9, 0.4) == Catch::Approx(b).margin(1e-6));
  // Polar triangle: sides pi/2, apex angle pi/3 gives opposite side pi/3.
  CHECK(cos_law_side(kPi / 2, kPi / 2, kPi / 3) == Catch::Approx(kPi / 3).margin(1e-12));
}

TEST_CASE("cos_law_angle special cases and errors") {
  CHECK(cos_law_angle(kPi / 2, kPi / 2, kPi / 2) == Catch::Approx(kPi / 2).margin(1e-12));
  const double b = 0.8, c = 0.6;
  const double a = std::acos(std::cos(b) * std::cos(c));
  CHECK(cos_law_angle(a, b, c) == Catch::Approx(kPi / 2).margin(1e-12));
  CHECK_THROWS_AS(cos_law_angle(2.0, 0.5, 0.5), infeasible_triangle_error);
}

TEST_CASE("cos laws round trip on random triangles") {
  std::uniform_real_distribution<double> side(0.05, kPi - 0.05);
  std::uniform_real_distribution<double> ang(0.05, kPi - 0.05);
  int done = 0;
  while (done < 1000) {
    const double b = side(rng), c = side(rng), A = ang(rng);
    const double a = cos_law_side(b, c, A);
    if (a < 1e-3 || a > kPi - 1e-3) continue;
    CHECK(cos_law_angle(a, b, c) == Catch::Approx(A).margin(1e-9));
    ++done;
  }
}

TEST_CASE("in_triangle classification") {
  const SphericalTriangleRegion t(SpherePoint(1, 0, 0), SpherePoint(0, 1, 0),
                                  SpherePoint(0, 0, 1));
  const SpherePoint centroid(1, 1, 1);
  CHECK(in_triangle(centroid, t) == RegionLocation::Interior);
  CHECK(in_triangle(t.v1, t) == RegionLocation::Boundary);
  CHECK(in_triangle(centroid.antipode(), t) == RegionLocation::Exterior);
  CHECK(in_triangle(SpherePoint(1, 1, 0), t) == RegionLocation::Boundary);
}

TEST_CASE("in_triangle invariant under common rotation") {
  for (int i = 0; i < 100; ++i) {
    const SpherePoint a(1, 0.1, 0), b(-0.2, 1, 0.1), c(0, 0.2, 1);
    const SphericalTriangleRegion t(a, b, c);
    const SpherePoint p = random_point();
    const RegionLocation before = in_triangle(p, t);
    const Mat3 r = random_rotation();
    const SphericalTriangleRegion tr(SpherePoint(r * a.vec()), SpherePoint(r * b.vec()),
                                     SpherePoint(r * c.vec()));
    CHECK(in_triangle(SpherePoint(r * p.vec()), tr) == before);
  }
}

TEST_CASE("triangle region rejects degenerate input") {
  CHECK_THROWS_AS(SphericalTriangleRegion(SpherePoint(1, 0, 0), SpherePoint(1, 0, 0),
                                          SpherePoint(0, 0, 1)),
                  invalid_parameter_error);
  // Collinear points on one great circle.
  CHECK_THROWS_AS(SphericalTriangleRegion(SpherePoint(1, 0, 0), SpherePoint(0, 1, 0),
                                          SpherePoint(-1, 1, 0)),
                  invalid_parameter_error);
}

TEST_CASE("stereo_project basics") {
  const SpherePoint pole(0, 0, 1);
  const auto origin = stereo_project(pole, pole);
  CHECK(std::hypot(origin.u, origin.v) == Catch::Approx(0.0).margin(1e-12));

  // Equator maps to the unit circle.
  const auto eq = stereo_project(SpherePoint(1, 0, 0), pole);
  CHECK(std::hypot(eq.u, eq.v) == Catch::Approx(1.0).margin(1e-12));

  // Midpoint of a pole-to-equator arc lands at radius tan(pi/8).
  const SpherePoint mid(std::sin(kPi / 4), 0, std::cos(kPi / 4));
  const auto m = stereo_project(mid, pole);
  CHECK(std::hypot(m.u, m.v) == Catch::Approx(std::tan(kPi / 8)).margin(1e-12));

  CHECK_THROWS_AS(stereo_project(pole.antipode(), pole), point_at_infinity_error);
}

TEST_CASE("stereo_project preserves circles") {
  // 50 samples of a small circle project to a circle: least-squares circle
  // fit must have tiny residual.
  const SpherePoint pole(0.2, -0.3, 0.93);
  const SpherePoint center = random_point();
  const double radius = 0.6;
  const auto basis = tangent_basis(center);

  std::vector<PlanePoint> pts;
  for (int i = 0; i < 50; ++i) {
    const double th = 2.0 * kPi * i / 50;
    const Vec3 dir = basis[0] * std::cos(th) + basis[1] * std::sin(th);
    const SpherePoint p(center.vec() * std::cos(radius) + dir * std::sin(radius));
    pts.push_back(stereo_project(p, pole));
  }
  // Fit x^2+y^2 + D x + E y + F = 0 by least squares (Kasa fit).
  double sxx = 0, sxy = 0, syy = 0, sx = 0, sy = 0, sxz = 0, syz = 0, sz = 0;
  const int n = static_cast<int>(pts.size());
  for (const auto& p : pts) {
    const double z = p.u * p.u + p.v * p.v;
    sxx += p.u * p.u; sxy += p.u * p.v; syy += p.v * p.v;
    sx += p.u; sy += p.v;
    sxz += p.u * z; syz += p.v * z; sz += z;
  }
  // Solve the 3x3 normal equations for (D, E, F).
  double Amat[3][3] = {{sxx, sxy, sx}, {sxy, syy, sy}, {sx, sy, double(n)}};
  double rhs[3] = {-sxz, -syz, -sz};
  // Gaussian elimination.
  for (int i = 0; i < 3; ++i) {
    int piv = i;
    for (int j = i + 1; j < 3; ++j)
      if (std::fabs(Amat[j][i]) > std::fabs(Amat[piv][i])) piv = j;
    std::swap(Amat[i], Amat[piv]);
    std::swap(rhs[i], rhs[piv]);
    for (int j = i + 1; j < 3; ++j) {
      const double fct = Amat[j][i] / Amat[i][i];
      for (int k = i; k < 3; ++k) Amat[j][k] -= fct * Amat[i][k];
      rhs[j] -= fct * rhs[i];
    }
  }
  double sol[3];
  for (int i = 2; i >= 0; --i) {
    sol[i] = rhs[i];
    for (int k = i + 1; k < 3; ++k) sol[i] -= Amat[i][k] * sol[k];
    sol[i] /= Amat[i][i];
  }
  const double cx = -sol[0] / 2, cy = -sol[1] / 2;
  const double r2 = cx * cx + cy * cy - sol[2];
  REQUIRE(r2 > 0);
  const double r = std::sqrt(r2);
  double worst = 0;
  for (const auto& p : pts)
    worst = std::max(worst, std::fabs(std::hypot(p.u - cx, p.v - cy) - r));
  CHECK(worst < 1e-6);
}

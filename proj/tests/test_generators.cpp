#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "spheretile/generators.hpp"
#include "spheretile/moduli.hpp"

using namespace spheretile;

namespace {

const SpherePoint kConvexD(0.93, 0.05, -0.36);

// Measured geometry of one embedded tile (tile 0), assuming convex tiles.
QuadGeometry measure_tile0(const Tiling& t) {
  REQUIRE(t.has_embedding());
  const auto& td = t.tiles()[0];
  const auto& pos = t.embedding();
  auto P = [&](int corner) { return SpherePoint(pos[td.corners[corner].vertex]); };
  double angle_of[4], edge_len[4];
  for (int i = 0; i < 4; ++i) {
    const SpherePoint v = P(i), prev = P((i + 3) % 4), next = P((i + 1) % 4);
    const Vec3 tp = tangent_toward(v, prev), tn = tangent_toward(v, next);
    angle_of[i] = std::acos(clamp_unit(tp.dot(tn)));
    edge_len[i] = angular_distance(v, next);
  }
  AngleQuad a;
  EdgeTriple e;
  for (int i = 0; i < 4; ++i) {
    switch (td.corners[i].angle) {
      case AngleLabel::Alpha: a.alpha = angle_of[i]; break;
      case AngleLabel::Beta: a.beta = angle_of[i]; break;
      case AngleLabel::Gamma: a.gamma = angle_of[i]; break;
      case AngleLabel::Delta: a.delta = angle_of[i]; break;
    }
    switch (td.edges[i]) {
      case EdgeLabel::A: e.a = edge_len[i]; break;
      case EdgeLabel::B: e.b = edge_len[i]; break;
      case EdgeLabel::C: e.c = edge_len[i]; break;
    }
  }
  return make_quad_geometry(a, e);
}

void check_same_quad(const QuadGeometry& x, const QuadGeometry& y, double tol) {
  CHECK(x.angles.alpha == Catch::Approx(y.angles.alpha).margin(tol));
  CHECK(x.angles.beta == Catch::Approx(y.angles.beta).margin(tol));
  CHECK(x.angles.gamma == Catch::Approx(y.angles.gamma).margin(tol));
  CHECK(x.angles.delta == Catch::Approx(y.angles.delta).margin(tol));
  CHECK(x.edges.a == Catch::Approx(y.edges.a).margin(tol));
  CHECK(x.edges.b == Catch::Approx(y.edges.b).margin(tol));
  CHECK(x.edges.c == Catch::Approx(y.edges.c).margin(tol));
}

}  // namespace

TEST_CASE("two-layer generator: censuses, degenerate warning, rejection") {
  const Tiling t3 = gen_two_layer(3, kConvexD);
  CHECK(t3.tile_count() == 6);
  CHECK(census(t3).multiplicity(VertexType{0, 1, 1, 1}) == 6);
  CHECK(census(t3).multiplicity(VertexType{3, 0, 0, 0}) == 2);

  // D on the open arc EF: emitted with a warning, delta = pi.
  const Tiling t4 = gen_two_layer(4, SpherePoint(1, 0.01, 0));
  CHECK_FALSE(t4.warnings().empty());
  CHECK(verify(t4).passed());

  // D exterior to the moduli: rejected.
  CHECK_THROWS_AS(gen_two_layer(3, SpherePoint(0, -1, 0.2)), out_of_moduli_error);
  CHECK_THROWS_AS(gen_two_layer(2, kConvexD), invalid_parameter_error);
}

TEST_CASE("three-layer generator censuses for small n") {
  const Tiling t2 = gen_three_layer(2);
  CHECK(t2.tile_count() == 16);
  CHECK(census(t2).multiplicity(VertexType{1, 0, 2, 0}) == 8);
  CHECK(census(t2).multiplicity(VertexType{0, 4, 0, 0}) == 2);
  CHECK(census(t2).multiplicity(VertexType{0, 0, 0, 4}) == 4);
  CHECK(census(t2).multiplicity(VertexType{2, 2, 0, 0}) == 4);
  CHECK(verify(t2).passed());
  CHECK_THROWS_AS(gen_three_layer(1), invalid_parameter_error);
}

TEST_CASE("flip generators: censuses from the closed formulas") {
  for (int m = 1; m <= 4; ++m) {
    const Tiling f1 = gen_three_layer_flip1(m);
    CHECK(f1.tile_count() == 8 * (2 * m + 1));
    CHECK(census(f1).multiplicity(VertexType{1, 0, 2, 0}) == 8 * m + 4);
    CHECK(census(f1).multiplicity(VertexType{1, 2 * m + 2, 0, 0}) == 4);
    CHECK(census(f1).multiplicity(VertexType{0, 0, 0, 4}) == 4 * m + 2);
    CHECK(census(f1).multiplicity(VertexType{2, 2, 0, 0}) == 4 * m);
    CHECK(verify(f1).passed());

    const Tiling f2 = gen_three_layer_flip2(m);
    CHECK(census(f2).multiplicity(VertexType{1, 0, 2, 0}) == 8 * m + 2);
    CHECK(census(f2).multiplicity(VertexType{1, 2 * m + 2, 0, 0}) == 2);
    CHECK(census(f2).multiplicity(VertexType{0, 2 * m, 2, 0}) == 2);
    CHECK(census(f2).multiplicity(VertexType{0, 0, 0, 4}) == 4 * m + 2);
    CHECK(census(f2).multiplicity(VertexType{2, 2, 0, 0}) == 4 * m + 2);
    CHECK(verify(f2).passed());
  }
  CHECK_THROWS_AS(gen_three_layer_flip1(0), invalid_parameter_error);
  CHECK_THROWS_AS(gen_three_layer_flip2(0), invalid_parameter_error);
}

TEST_CASE("flips keep f and per-angle totals, change only the census") {
  for (int m = 1; m <= 3; ++m) {
    const Tiling base = gen_three_layer(2 * m + 1);
    const Tiling f1 = gen_three_layer_flip1(m);
    const Tiling f2 = gen_three_layer_flip2(m);
    CHECK(base.tile_count() == f1.tile_count());
    CHECK(base.tile_count() == f2.tile_count());
    const auto tb = census(base).angle_totals();
    CHECK(census(f1).angle_totals() == tb);
    CHECK(census(f2).angle_totals() == tb);
    CHECK_FALSE(census(f1) == census(base));
    CHECK_FALSE(census(f2) == census(base));
    CHECK_FALSE(census(f1) == census(f2));
  }
}

TEST_CASE("subdivision generator: counts, reductions, census at specials") {
  const Tiling t = gen_subdivision(0.2);
  CHECK(t.tile_count() == 24);
  CHECK(verify(t).passed());
  CHECK(special_tile(t).signature == "3444");

  CHECK_THROWS_AS(gen_subdivision(kPi / 4), error);
  CHECK_THROWS_AS(gen_subdivision(subdivision_a3b_b()), reduction_error);
  CHECK_THROWS_AS(gen_subdivision(1.0), out_of_moduli_error);

  // Angle values at the special parameter, tiling labeling convention.
  const QuadGeometry g = measure_tile0(gen_subdivision(subdivision_special_b()));
  CHECK(g.angles.delta == Catch::Approx(kPi / 2).margin(1e-9));
  CHECK(g.angles.alpha == Catch::Approx(2 * kPi / 3).margin(1e-9));
  CHECK(g.angles.gamma == Catch::Approx(2 * kPi / 3).margin(1e-9));
  CHECK(g.angles.beta == Catch::Approx(kPi / 3).margin(1e-9));
}

TEST_CASE("subdivision flip census and angles") {
  const Tiling t = gen_subdivision_flip();
  CHECK(t.tile_count() == 24);
  CHECK(verify(t).passed());
  CHECK(special_tile(t).signature == "3344");
  const QuadGeometry g = measure_tile0(t);
  CHECK(g.angles.delta == Catch::Approx(kPi / 2).margin(1e-8));
  CHECK(g.angles.beta == Catch::Approx(kPi / 3).margin(1e-8));
}

TEST_CASE("embed propagates consistently and rejects mismatched geometry") {
  {
    const Tiling t = gen_three_layer(2);
    const auto r = embed_with_residual(t, solve_three_layer(2));
    CHECK(r.max_residual < 1e-8);
    CHECK(verify(r.tiling).passed());
  }
  {
    const Tiling t = gen_subdivision(0.2);
    const auto r = embed_with_residual(t, swap_bc(solve_subdivision(0.2)));
    CHECK(r.max_residual < 1e-8);
    CHECK(verify(r.tiling).passed());
  }
  CHECK_THROWS_AS(embed(gen_three_layer(2), solve_three_layer(3)), embedding_failure_error);
}

TEST_CASE("generator sweep verifies and matches census formulas") {
  for (int n = 3; n <= 10; ++n) {
    const Tiling t = gen_two_layer(n, SpherePoint(0.995, 0.03, -0.0995));
    CHECK(verify(t).passed());
    CHECK(t.tile_count() == 2 * n);
    CHECK(special_tile(t).cls == "333d");
  }
  for (int n = 2; n <= 10; ++n) {
    const Tiling t = gen_three_layer(n);
    CHECK(verify(t).passed());
    CHECK(t.tile_count() == 8 * n);
  }
  for (double b : {0.05, 0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.7, 0.75, 0.78}) {
    const Tiling t = gen_subdivision(b);
    CHECK(verify(t).passed());
    CHECK(t.tile_count() == 24);
  }
}

TEST_CASE("the five tilings of the common quadrilateral share one geometry") {
  const QuadGeometry expected = solve_three_layer(3);
  const Tiling tilings[5] = {gen_subdivision(subdivision_special_b()), gen_subdivision_flip(),
                             gen_three_layer(3), gen_three_layer_flip1(1),
                             gen_three_layer_flip2(1)};
  for (const Tiling& t : tilings) {
    CHECK(verify(t).passed());
    check_same_quad(measure_tile0(t), expected, 1e-8);
  }
}

TEST_CASE("family id dispatch validates and generates") {
  FamilyId id;
  id.tag = FamilyId::Tag::ThreeLayer;
  id.n = 2;
  CHECK(generate(id).tile_count() == 16);
  CHECK(family_geometry(id).angles.gamma == Catch::Approx(3 * kPi / 4).margin(1e-12));
  id.n = 1;
  CHECK_THROWS_AS(id.validate(), invalid_parameter_error);
  id.tag = FamilyId::Tag::Subdivision;
  id.b = 1.0;
  CHECK_THROWS_AS(id.validate(), out_of_moduli_error);
  id.tag = FamilyId::Tag::TwoLayer;
  id.n = 4;
  id.D = SpherePoint(0.93, 0.05, -0.36);
  CHECK(generate(id).tile_count() == 8);
}

TEST_CASE("two-layer embedding places midpoints on the equator") {
  const int n = 5;
  const Tiling t = gen_two_layer(n, kConvexD);
  // b-edges: midpoint of each embedded b-edge must lie on the equator at
  // spacing pi/n from the c-edge midpoints.
  const auto edges = derive_edges(t);
  std::vector<double> longitudes;
  for (const auto& e : edges) {
    if (e.label == EdgeLabel::A) continue;
    const Vec3 mid =
        (t.embedding()[e.u] + t.embedding()[e.v]).normalized();
    CHECK(std::fabs(mid.z) < 1e-9);
    longitudes.push_back(std::atan2(mid.y, mid.x));
  }
  CHECK(longitudes.size() == static_cast<size_t>(2 * n));
  std::sort(longitudes.begin(), longitudes.end());
  for (size_t i = 1; i < longitudes.size(); ++i)
    CHECK(longitudes[i] - longitudes[i - 1] == Catch::Approx(kPi / n).margin(1e-9));
}

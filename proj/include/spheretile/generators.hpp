#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "spheretile/errors.hpp"
#include "spheretile/moduli.hpp"
#include "spheretile/quad_solver.hpp"
#include "spheretile/tiling.hpp"

namespace spheretile {

/// Identifies one tiling family member of the classification.
struct FamilyId {
  enum class Tag { TwoLayer, Subdivision, SubdivisionFlip, ThreeLayer, ThreeLayerFlip1,
                   ThreeLayerFlip2 };
  Tag tag = Tag::ThreeLayer;
  int n = 3;                      // TwoLayer (>=3), ThreeLayer (>=2)
  int m = 1;                      // flips (>=1, n = 2m+1)
  double b = 0.2;                 // Subdivision, in (0, pi/4)
  SpherePoint D{0.93, 0.05, -0.36};  // TwoLayer

  void validate() const {
    switch (tag) {
      case Tag::TwoLayer:
        if (n < 3) throw invalid_parameter_error("two-layer: n must be >= 3");
        break;
      case Tag::ThreeLayer:
        if (n < 2) throw invalid_parameter_error("three-layer: n must be >= 2");
        break;
      case Tag::ThreeLayerFlip1:
      case Tag::ThreeLayerFlip2:
        if (m < 1) throw invalid_parameter_error("flip: m must be >= 1");
        break;
      case Tag::Subdivision:
        if (!(b > 0.0 && b < kPi / 4.0))
          throw out_of_moduli_error("subdivision: b must lie in (0, pi/4)");
        break;
      case Tag::SubdivisionFlip: break;
    }
  }

  const char* name() const {
    switch (tag) {
      case Tag::TwoLayer: return "two-layer";
      case Tag::Subdivision: return "subdivision";
      case Tag::SubdivisionFlip: return "subdivision-flip";
      case Tag::ThreeLayer: return "three-layer";
      case Tag::ThreeLayerFlip1: return "three-layer-flip1";
      case Tag::ThreeLayerFlip2: return "three-layer-flip2";
    }
    return "?";
  }
};

struct EmbedResult {
  Tiling tiling;
  double max_residual = 0.0;
};

/// Assigns positions to all vertices by breadth-first propagation from tile
/// 0 (corner alpha at the north pole, heading +x, counterclockwise), walking
/// each tile boundary with the edge lengths and interior angles of g.
/// Re-placements of an already-placed vertex must agree within 1e-6.
inline EmbedResult embed_with_residual(const Tiling& t, const QuadGeometry& g) {
  const auto edges = derive_edges(t);

  // partner lookup: (tile, side) -> (tile, side)
  std::vector<std::array<SideRef, 4>> partner(t.tile_count());
  for (const auto& e : edges) {
    partner[e.first.tile][e.first.side] = e.second;
    partner[e.second.tile][e.second.side] = e.first;
  }

  auto side_len = [&g](EdgeLabel l) {
    switch (l) {
      case EdgeLabel::A: return g.edges.a;
      case EdgeLabel::B: return g.edges.b;
      case EdgeLabel::C: return g.edges.c;
    }
    return 0.0;
  };
  auto corner_angle = [&g](AngleLabel l) {
    switch (l) {
      case AngleLabel::Alpha: return g.angles.alpha;
      case AngleLabel::Beta: return g.angles.beta;
      case AngleLabel::Gamma: return g.angles.gamma;
      case AngleLabel::Delta: return g.angles.delta;
    }
    return 0.0;
  };

  std::vector<std::optional<Vec3>> pos(t.vertex_count());
  std::vector<std::array<Vec3, 4>> tile_pos(t.tile_count());
  std::vector<int> chirality(t.tile_count(), 0);
  double residual = 0.0;

  auto record = [&](int vertex, const Vec3& p) {
    if (!pos[vertex]) {
      pos[vertex] = p;
    } else {
      residual = std::max(residual, (*pos[vertex] - p).norm());
    }
  };

  // Walks tile `i` from its corner `start` anchored at `p0` heading toward
  // `p1`, and records all four corners.
  auto place_tile = [&](int i, int start, const Vec3& p0, const Vec3& p1, int chi) {
    const auto& td = t.tiles()[i];
    double sides[4], angles[4];
    for (int j = 0; j < 4; ++j) {
      sides[j] = side_len(td.edges[(start + j) % 4]);
      angles[j] = corner_angle(td.corners[(start + j) % 4].angle);
    }
    const SpherePoint sp0(p0);
    const Vec3 heading = tangent_toward(sp0, SpherePoint(p1));
    const auto corners = walk_quad(sp0, heading, chi, sides, angles);
    for (int j = 0; j < 4; ++j) {
      tile_pos[i][(start + j) % 4] = corners[j].vec();
      record(td.corners[(start + j) % 4].vertex, corners[j].vec());
    }
    chirality[i] = chi;
  };

  std::queue<int> work;
  {
    const SpherePoint seed(0.0, 0.0, 1.0);
    const auto& td = t.tiles()[0];
    double sides[4], angles[4];
    for (int j = 0; j < 4; ++j) {
      sides[j] = side_len(td.edges[j]);
      angles[j] = corner_angle(td.corners[j].angle);
    }
    const auto corners = walk_quad(seed, Vec3{1, 0, 0}, +1, sides, angles);
    for (int j = 0; j < 4; ++j) {
      tile_pos[0][j] = corners[j].vec();
      record(td.corners[j].vertex, corners[j].vec());
    }
    chirality[0] = +1;
    work.push(0);
  }

  std::vector<bool> placed(t.tile_count(), false);
  placed[0] = true;
  while (!work.empty()) {
    const int i = work.front();
    work.pop();
    for (int s = 0; s < 4; ++s) {
      const SideRef nb = partner[i][s];
      if (placed[nb.tile]) continue;
      const auto& ti = t.tiles()[i];
      const auto& tj = t.tiles()[nb.tile];
      const int u = ti.corners[s].vertex;
      const int v = ti.corners[(s + 1) % 4].vertex;
      const int ju = tj.corners[nb.side].vertex;
      const int jv = tj.corners[(nb.side + 1) % 4].vertex;
      int chi;
      Vec3 p0, p1;
      if (ju == v && jv == u) {
        chi = chirality[i];  // opposite traversal keeps orientation
        p0 = tile_pos[i][(s + 1) % 4];
        p1 = tile_pos[i][s];
      } else if (ju == u && jv == v) {
        chi = -chirality[i];  // aligned traversal flips orientation
        p0 = tile_pos[i][s];
        p1 = tile_pos[i][(s + 1) % 4];
      } else {
        throw malformed_tiling_error("glued sides disagree on endpoints");
      }
      place_tile(nb.tile, nb.side, p0, p1, chi);
      placed[nb.tile] = true;
      work.push(nb.tile);
    }
  }

  if (residual > 1e-6)
    throw embedding_failure_error("embedding propagation inconsistent: residual " +
                                  std::to_string(residual));

  Tiling out = t;
  std::vector<Vec3> embedding(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (!pos[v]) throw malformed_tiling_error("vertex unreached during embedding");
    embedding[v] = pos[v]->normalized();
  }
  out.set_embedding(std::move(embedding));
  out.set_edge_lengths(g.edges);
  return {std::move(out), residual};
}

inline Tiling embed(const Tiling& t, const QuadGeometry& g) {
  return embed_with_residual(t, g).tiling;
}

namespace detail {

inline VertexCensus census_from(std::initializer_list<std::pair<VertexType, int>> items) {
  VertexCensus c;
  for (const auto& [t, m] : items) c.add(t, m);
  return c;
}

inline void check_census(const Tiling& t, const VertexCensus& expected, const char* what) {
  if (!(census(t) == expected))
    throw internal_inconsistency_error(std::string(what) +
                                       ": census mismatch, got " + census(t).to_string() +
                                       " expected " + expected.to_string());
}

}  // namespace detail

/// 2-layer earth map tiling T(2n bcd, 2 a^n). The embedding realizes the
/// D-based construction: alpha corners at the poles, b/c-edge midpoints
/// evenly spaced on the equator. D in a degenerate stratum still yields a
/// tiling, with a warning; a self-intersecting D is rejected.
inline Tiling gen_two_layer(int n, const SpherePoint& D) {
  if (n < 3) throw invalid_parameter_error("gen_two_layer: n must be >= 3");
  const TwoLayerRegion region = classify_two_layer(n, D);
  if (region == TwoLayerRegion::SelfIntersecting)
    throw out_of_moduli_error("gen_two_layer: D outside the moduli (stratum SelfIntersecting)");

  const auto N = 0, S = 1;
  auto Bid = [](int z) { return 2 + 2 * z; };
  auto Did = [](int z) { return 3 + 2 * z; };

  std::vector<TileData> tiles;
  tiles.reserve(2 * n);
  for (int z = 0; z < n; ++z)
    tiles.push_back(make_tile(N, Bid(z), Did(z), Bid((z + 1) % n)));
  for (int z = 0; z < n; ++z)
    tiles.push_back(make_tile(S, Did(z), Bid(z), Did((z + n - 1) % n)));

  Tiling t(std::move(tiles), 2 + 2 * n);

  const TwoLayerConstruction base = TwoLayerConstruction::make(n, D);
  std::vector<Vec3> pts(t.vertex_count());
  pts[N] = {0, 0, 1};
  pts[S] = {0, 0, -1};
  for (int z = 0; z < n; ++z) {
    const Mat3 rot = rotation_about(Vec3{0, 0, 1}, 2.0 * kPi * z / n);
    pts[Bid(z)] = rot * base.B.vec();
    pts[Did(z)] = rot * base.D.vec();
  }
  t.set_embedding(std::move(pts));

  switch (region) {
    case TwoLayerRegion::DegenerateDelta:
      t.add_warning("degenerate quadrilateral: delta = pi (D on arc EF)");
      break;
    case TwoLayerRegion::DegenerateBeta:
      t.add_warning("degenerate quadrilateral: beta = pi (D on arc A'E)");
      break;
    case TwoLayerRegion::DegenerateGamma:
      t.add_warning("degenerate quadrilateral: gamma = pi (D on arc A'F)");
      break;
    default: break;
  }
  const TwoLayerQuad q = solve_two_layer(base);
  t.set_edge_lengths(q.geometry.edges);
  if (q.long_edge_warning) t.add_warning("edge length exceeds pi");

  detail::check_census(
      t, detail::census_from({{VertexType{0, 1, 1, 1}, 2 * n}, {VertexType{n, 0, 0, 0}, 2}}),
      "gen_two_layer");
  return t;
}

namespace detail {

// Combinatorics of the 3-layer earth map with n time zones, 8 tiles each,
// laid out as in the time-zone figure: tiles 1,2 touch the north pole,
// 3,4,5,6 form the middle layer, 7,8 touch the south pole.
inline Tiling three_layer_combinatorics(int n) {
  const int N = 0, S = 1;
  auto u = [](int z) { return 2 + 8 * z; };
  auto d = [](int z) { return 3 + 8 * z; };
  auto p = [](int z) { return 4 + 8 * z; };
  auto q = [](int z) { return 5 + 8 * z; };
  auto rr = [](int z) { return 6 + 8 * z; };
  auto ss = [](int z) { return 7 + 8 * z; };
  auto U = [](int z) { return 8 + 8 * z; };
  auto Dv = [](int z) { return 9 + 8 * z; };

  std::vector<TileData> tiles;
  tiles.reserve(8 * n);
  for (int z = 0; z < n; ++z) {
    const int zp = (z + n - 1) % n;  // previous zone
    tiles.push_back(make_tile(u(z), N, U(zp), q(z)));      // 1
    tiles.push_back(make_tile(u(z), N, U(z), p(z)));       // 2
    tiles.push_back(make_tile(q(z), u(z), d(z), ss(z)));   // 3
    tiles.push_back(make_tile(p(z), u(z), d(z), rr(z)));   // 4
    tiles.push_back(make_tile(ss(z), Dv(zp), U(zp), q(z)));  // 5
    tiles.push_back(make_tile(rr(z), Dv(z), U(z), p(z)));    // 6
    tiles.push_back(make_tile(Dv(zp), S, d(z), ss(z)));      // 7
    tiles.push_back(make_tile(Dv(z), S, d(z), rr(z)));       // 8
  }
  return Tiling(std::move(tiles), 2 + 8 * n);
}

// Cuts the tiling along `boundary` (a cycle of vertex ids) and re-glues the
// half consisting of `half_tiles` after relabeling boundary vertex ids by
// `image` (image[i] = new id for boundary[i]).
inline Tiling reglue_half(const Tiling& t, const std::vector<int>& half_tiles,
                          const std::vector<int>& boundary, const std::vector<int>& image) {
  std::map<int, int> remap;
  for (size_t i = 0; i < boundary.size(); ++i) remap[boundary[i]] = image[i];
  Tiling out = t;
  out.clear_embedding();
  for (int id : half_tiles)
    for (auto& corner : out.mutable_tiles()[id].corners) {
      auto it = remap.find(corner.vertex);
      if (it != remap.end()) corner.vertex = it->second;
    }
  return out;
}

}  // namespace detail

/// 3-layer earth map tiling T(4n ac^2, 2 b^{2n}, 2n d^4, 2n a^2b^2).
inline Tiling gen_three_layer(int n) {
  if (n < 2) throw invalid_parameter_error("gen_three_layer: n must be >= 2");
  Tiling t = detail::three_layer_combinatorics(n);
  detail::check_census(t,
                       detail::census_from({{VertexType{1, 0, 2, 0}, 4 * n},
                                            {VertexType{0, 2 * n, 0, 0}, 2},
                                            {VertexType{0, 0, 0, 4}, 2 * n},
                                            {VertexType{2, 2, 0, 0}, 2 * n}}),
                       "gen_three_layer");
  return embed(t, solve_three_layer(n));
}

/// First flip modification for odd n = 2m+1: reflect the hemisphere bounded
/// by the great circle through both poles made of the a,b,b edges at the
/// zone-0 center and the zone m|m+1 boundary.
inline Tiling gen_three_layer_flip1(int m) {
  if (m < 1) throw invalid_parameter_error("gen_three_layer_flip1: m must be >= 1");
  const int n = 2 * m + 1;
  Tiling base = detail::three_layer_combinatorics(n);

  auto u = [](int z) { return 2 + 8 * z; };
  auto d = [](int z) { return 3 + 8 * z; };
  auto U = [](int z) { return 8 + 8 * z; };
  auto Dv = [](int z) { return 9 + 8 * z; };
  const int N = 0, S = 1;

  std::vector<int> half = {1, 3, 5, 7};  // tiles 2,4,6,8 of zone 0
  for (int z = 1; z <= m; ++z)
    for (int k = 0; k < 8; ++k) half.push_back(8 * z + k);

  // Hexagon N -a- u0 -b- d0 -b- S -a- D_m -b- U_m -b- N, reflected across
  // the axis through the midpoints of its two a-edges.
  const std::vector<int> boundary = {N, u(0), d(0), S, Dv(m), U(m)};
  const std::vector<int> image = {u(0), N, U(m), Dv(m), S, d(0)};

  Tiling t = detail::reglue_half(base, half, boundary, image);
  detail::check_census(t,
                       detail::census_from({{VertexType{1, 0, 2, 0}, 8 * m + 4},
                                            {VertexType{1, 2 * m + 2, 0, 0}, 4},
                                            {VertexType{0, 0, 0, 4}, 4 * m + 2},
                                            {VertexType{2, 2, 0, 0}, 4 * m}}),
                       "gen_three_layer_flip1");
  return embed(t, solve_three_layer(n));
}

/// Second flip modification for odd n = 2m+1: the half bounded by the two
/// all-a staircases is re-glued after rotating its decagonal boundary by two
/// positions (the "2pi/5 rotation of the inner half" in the 10-gon picture).
inline Tiling gen_three_layer_flip2(int m) {
  if (m < 1) throw invalid_parameter_error("gen_three_layer_flip2: m must be >= 1");
  const int n = 2 * m + 1;
  Tiling base = detail::three_layer_combinatorics(n);

  auto u = [](int z) { return 2 + 8 * z; };
  auto p = [](int z) { return 4 + 8 * z; };
  auto q = [](int z) { return 5 + 8 * z; };
  auto rr = [](int z) { return 6 + 8 * z; };
  auto ss = [](int z) { return 7 + 8 * z; };
  auto Dv = [](int z) { return 9 + 8 * z; };
  const int N = 0, S = 1;

  // Tiles strictly between the east staircase of zone 0 and the west
  // staircase of zone m+1.
  std::vector<int> half = {8 * 0 + 1, 8 * 0 + 5};  // 2_0, 6_0
  for (int z = 1; z <= m; ++z)
    for (int k = 0; k < 8; ++k) half.push_back(8 * z + k);
  half.push_back(8 * (m + 1) + 0);  // 1_{m+1}
  half.push_back(8 * (m + 1) + 4);  // 5_{m+1}

  const std::vector<int> boundary = {p(0),      rr(0),    Dv(0),    S,       Dv(m),
                                     ss(m + 1), q(m + 1), u(m + 1), N,       u(0)};
  std::vector<int> image(boundary.size());
  for (size_t i = 0; i < boundary.size(); ++i)
    image[i] = boundary[(i + boundary.size() - 2) % boundary.size()];

  Tiling t = detail::reglue_half(base, half, boundary, image);
  detail::check_census(t,
                       detail::census_from({{VertexType{1, 0, 2, 0}, 8 * m + 2},
                                            {VertexType{1, 2 * m + 2, 0, 0}, 2},
                                            {VertexType{0, 2 * m, 2, 0}, 2},
                                            {VertexType{0, 0, 0, 4}, 4 * m + 2},
                                            {VertexType{2, 2, 0, 0}, 4 * m + 2}}),
                       "gen_three_layer_flip2");
  return embed(t, solve_three_layer(n));
}

namespace detail {

struct OctahedronSubdivision {
  // vertex ids: 0..5 octahedron vertices, 6..13 face centers, 14..25 edge
  // subdivision points
  std::array<Vec3, 6> vert;
  std::vector<std::array<int, 3>> faces;          // vertex ids, ccw for +faces
  std::map<std::pair<int, int>, int> edge_point;  // (min,max) vertex ids -> subdiv id
  std::map<std::pair<int, int>, int> b_end;       // (min,max) -> vertex id of the b-end
};

inline int axis_of(int vid) { return vid / 2; }  // 0:x 1:y 2:z
inline Vec3 octa_vertex(int vid) {
  const double s = (vid % 2 == 0) ? 1.0 : -1.0;
  switch (axis_of(vid)) {
    case 0: return {s, 0, 0};
    case 1: return {0, s, 0};
    default: return {0, 0, s};
  }
}

}  // namespace detail

/// Quadrilateral subdivision of the octahedron, T(8 a^3, 6 d^4, 12 b^2c^2),
/// for the subdivision parameter b in (0, pi/4) away from the a=b reduction.
/// Tile labels use the same convention as the earth-map tilings, which
/// exchanges b and c relative to the short-side parameterization of
/// solve_subdivision; at
/// b = arctan((3-sqrt5)/2) this makes the quadrilateral equal the 3-layer
/// n=3 one, with beta = pi/3.
inline Tiling gen_subdivision(double b) {
  if (std::fabs(b - kPi / 4.0) < 1e-12)
    throw reduction_error("gen_subdivision: reduces to Type a^2b^2 at b = pi/4");
  if (std::fabs(b - subdivision_a3b_b()) < 1e-12)
    throw reduction_error("gen_subdivision: reduces to Type a^3b at b = arctan(sqrt3 - 1)");
  if (!(b > 0.0 && b < kPi / 4.0))
    throw out_of_moduli_error("gen_subdivision: b outside (0, pi/4)");

  const QuadGeometry g = swap_bc(solve_subdivision(b));

  // Octahedron vertices 0..5 (+x,-x,+y,-y,+z,-z), faces by sign triple.
  std::vector<std::array<int, 3>> faces;
  for (int sx = 0; sx < 2; ++sx)
    for (int sy = 0; sy < 2; ++sy)
      for (int sz = 0; sz < 2; ++sz) faces.push_back({sx, 2 + sy, 4 + sz});

  auto key = [](int a, int bb) { return std::make_pair(std::min(a, bb), std::max(a, bb)); };

  // Each octahedron edge joins vertices on different axes; its b-end is the
  // vertex on the cyclically earlier axis (x before y before z before x).
  auto edge_b_end = [&](int va, int vb) {
    const int aa = detail::axis_of(va), ab = detail::axis_of(vb);
    return (ab == (aa + 1) % 3) ? va : vb;
  };

  std::map<std::pair<int, int>, int> edge_point;
  int next_id = 14;
  for (const auto& f : faces)
    for (int i = 0; i < 3; ++i) {
      const auto k = key(f[i], f[(i + 1) % 3]);
      if (!edge_point.count(k)) edge_point[k] = next_id++;
    }

  std::vector<TileData> tiles;
  std::vector<Vec3> pts(26);
  for (int v = 0; v < 6; ++v) pts[v] = detail::octa_vertex(v);
  for (size_t fi = 0; fi < faces.size(); ++fi) {
    const auto& f = faces[fi];
    const int nf = 6 + static_cast<int>(fi);
    pts[nf] = (detail::octa_vertex(f[0]) + detail::octa_vertex(f[1]) + detail::octa_vertex(f[2]))
                  .normalized();
    for (int i = 0; i < 3; ++i) {
      const int V = f[i];
      const int W1 = f[(i + 1) % 3], W2 = f[(i + 2) % 3];
      // Of the two face edges at V, exactly one has its b-end at V.
      int eb, ec;
      if (edge_b_end(V, W1) == V && edge_b_end(V, W2) != V) {
        eb = edge_point[key(V, W1)];
        ec = edge_point[key(V, W2)];
      } else if (edge_b_end(V, W2) == V && edge_b_end(V, W1) != V) {
        eb = edge_point[key(V, W2)];
        ec = edge_point[key(V, W1)];
      } else {
        throw internal_inconsistency_error("octahedron edge orientation");
      }
      tiles.push_back(make_tile(nf, eb, V, ec));
    }
  }
  for (const auto& [k, id] : edge_point) {
    const int be = edge_b_end(k.first, k.second);
    const int oe = (be == k.first) ? k.second : k.first;
    pts[id] = detail::octa_vertex(be) * std::cos(g.edges.b) +
              detail::octa_vertex(oe) * std::sin(g.edges.b);
  }

  Tiling t(std::move(tiles), 26);
  t.set_embedding(std::move(pts));
  t.set_edge_lengths(g.edges);
  detail::check_census(t,
                       detail::census_from({{VertexType{3, 0, 0, 0}, 8},
                                            {VertexType{0, 0, 0, 4}, 6},
                                            {VertexType{0, 2, 2, 0}, 12}}),
                       "gen_subdivision");
  return t;
}

/// Flip modification of the beta = pi/3 quadrilateral subdivision,
/// T(2 a^3, 6 ac^2, 6 d^4, 6 b^2c^2, 6 a^2b^2). The equatorial band of six
/// faces is cut along the 12-gon of a-edges through their centers and one
/// half is reflected.
inline Tiling gen_subdivision_flip() {
  const double b = subdivision_special_b();
  Tiling base = gen_subdivision(b);

  // Band cycle around the (1,1,1)/( -1,-1,-1) axis, alternating faces
  // adjacent to the top face (+++) and the bottom face (---).
  // Faces were generated in order (sx, sy, sz) with 0 <-> +.
  auto face_index = [](int sx, int sy, int sz) { return sx * 4 + sy * 2 + sz; };
  const int F1 = face_index(1, 0, 0);  // (-,+,+) upper
  const int F2 = face_index(1, 0, 1);  // (-,+,-) lower
  const int F3 = face_index(0, 0, 1);  // (+,+,-) upper
  const int F4 = face_index(0, 1, 1);  // (+,-,-) lower
  const int F5 = face_index(0, 1, 0);  // (+,-,+) upper
  const int F6 = face_index(1, 1, 0);  // (-,-,+) lower
  const int Ftop = face_index(0, 0, 0), Fbot = face_index(1, 1, 1);

  // vertex ids as in gen_subdivision: +x=0,-x=1,+y=2,-y=3,+z=4,-z=5
  auto nf = [](int f) { return 6 + f; };
  // Rebuild the edge-point table the same way gen_subdivision enumerates it.
  std::vector<std::array<int, 3>> faces;
  for (int sx = 0; sx < 2; ++sx)
    for (int sy = 0; sy < 2; ++sy)
      for (int sz = 0; sz < 2; ++sz) faces.push_back({sx, 2 + sy, 4 + sz});
  auto key = [](int a, int bb) { return std::make_pair(std::min(a, bb), std::max(a, bb)); };
  std::map<std::pair<int, int>, int> edge_point;
  int next_id = 14;
  for (const auto& f : faces)
    for (int i = 0; i < 3; ++i) {
      const auto k = key(f[i], f[(i + 1) % 3]);
      if (!edge_point.count(k)) edge_point[k] = next_id++;
    }
  const int S12 = edge_point[key(1, 2)];  // {-x, +y}
  const int S23 = edge_point[key(2, 5)];  // {+y, -z}
  const int S34 = edge_point[key(0, 5)];  // {+x, -z}
  const int S45 = edge_point[key(0, 3)];  // {+x, -y}
  const int S56 = edge_point[key(3, 4)];  // {-y, +z}
  const int S61 = edge_point[key(1, 4)];  // {-x, +z}

  // Upper half: the three top-face tiles, the two top-corner tiles of each
  // upper band face, and the apex tile of each lower band face.
  std::vector<int> half;
  for (int i = 0; i < static_cast<int>(base.tile_count()); ++i) {
    const auto& td = base.tiles()[i];
    const int center = td.corners[0].vertex;  // alpha corner = face center
    const int octa_v = td.corners[2].vertex;  // delta corner = octahedron vertex
    if (center == nf(Ftop)) half.push_back(i);
    if ((center == nf(F1) || center == nf(F3) || center == nf(F5)) &&
        (octa_v == 0 || octa_v == 2 || octa_v == 4))
      half.push_back(i);  // top corners are the +x,+y,+z vertices
    if (center == nf(F2) && octa_v == 2) half.push_back(i);
    if (center == nf(F4) && octa_v == 0) half.push_back(i);
    if (center == nf(F6) && octa_v == 4) half.push_back(i);
  }
  if (half.size() != 12) throw internal_inconsistency_error("subdivision flip: half size");

  const std::vector<int> boundary = {S61, nf(F6), S56, nf(F5), S45, nf(F4),
                                     S34, nf(F3), S23, nf(F2), S12, nf(F1)};
  std::vector<int> image(boundary.size());
  for (size_t i = 0; i < boundary.size(); ++i)
    image[i] = boundary[(boundary.size() + 1 - i) % boundary.size()];

  (void)Fbot;
  Tiling t = detail::reglue_half(base, half, boundary, image);
  detail::check_census(t,
                       detail::census_from({{VertexType{3, 0, 0, 0}, 2},
                                            {VertexType{1, 0, 2, 0}, 6},
                                            {VertexType{0, 0, 0, 4}, 6},
                                            {VertexType{0, 2, 2, 0}, 6},
                                            {VertexType{2, 2, 0, 0}, 6}}),
                       "gen_subdivision_flip");
  return embed(t, swap_bc(solve_subdivision(b)));
}

/// Geometry of the family member's quadrilateral, in the labeling its tiles
/// use.
inline QuadGeometry family_geometry(const FamilyId& id) {
  id.validate();
  switch (id.tag) {
    case FamilyId::Tag::TwoLayer:
      return solve_two_layer(TwoLayerConstruction::make(id.n, id.D)).geometry;
    case FamilyId::Tag::Subdivision: return swap_bc(solve_subdivision(id.b));
    case FamilyId::Tag::SubdivisionFlip:
      return swap_bc(solve_subdivision(subdivision_special_b()));
    case FamilyId::Tag::ThreeLayer: return solve_three_layer(id.n);
    case FamilyId::Tag::ThreeLayerFlip1:
    case FamilyId::Tag::ThreeLayerFlip2: return solve_three_layer(2 * id.m + 1);
  }
  throw invalid_parameter_error("family_geometry: bad tag");
}

inline Tiling generate(const FamilyId& id) {
  id.validate();
  switch (id.tag) {
    case FamilyId::Tag::TwoLayer: return gen_two_layer(id.n, id.D);
    case FamilyId::Tag::Subdivision: return gen_subdivision(id.b);
    case FamilyId::Tag::SubdivisionFlip: return gen_subdivision_flip();
    case FamilyId::Tag::ThreeLayer: return gen_three_layer(id.n);
    case FamilyId::Tag::ThreeLayerFlip1: return gen_three_layer_flip1(id.m);
    case FamilyId::Tag::ThreeLayerFlip2: return gen_three_layer_flip2(id.m);
  }
  throw invalid_parameter_error("generate: bad tag");
}

}  // namespace spheretile

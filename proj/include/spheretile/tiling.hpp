#pragma once

#include <algorithm>
#include <functional>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "spheretile/errors.hpp"
#include "spheretile/quad_solver.hpp"
#include "spheretile/sphere_geom.hpp"

namespace spheretile {

enum class AngleLabel : std::uint8_t { Alpha = 0, Beta = 1, Gamma = 2, Delta = 3 };
enum class EdgeLabel : std::uint8_t { A = 0, B = 1, C = 2 };

inline const char* to_string(AngleLabel a) {
  switch (a) {
    case AngleLabel::Alpha: return "alpha";
    case AngleLabel::Beta: return "beta";
    case AngleLabel::Gamma: return "gamma";
    case AngleLabel::Delta: return "delta";
  }
  return "?";
}

inline const char* to_string(EdgeLabel e) {
  switch (e) {
    case EdgeLabel::A: return "a";
    case EdgeLabel::B: return "b";
    case EdgeLabel::C: return "c";
  }
  return "?";
}

struct Corner {
  AngleLabel angle = AngleLabel::Alpha;
  int vertex = -1;
};

/// One quadrilateral tile: corners in boundary order (either orientation),
/// side i joins corner i to corner (i+1) mod 4.
struct TileData {
  std::array<Corner, 4> corners;
  std::array<EdgeLabel, 4> edges;
};

/// Makes a tile in the intrinsic label order alpha, beta, delta, gamma with
/// sides a, b, c, a, given the four vertex ids at those corners.
inline TileData make_tile(int v_alpha, int v_beta, int v_delta, int v_gamma) {
  TileData t;
  t.corners = {Corner{AngleLabel::Alpha, v_alpha}, Corner{AngleLabel::Beta, v_beta},
               Corner{AngleLabel::Delta, v_delta}, Corner{AngleLabel::Gamma, v_gamma}};
  t.edges = {EdgeLabel::A, EdgeLabel::B, EdgeLabel::C, EdgeLabel::A};
  return t;
}

/// Edge-to-edge tiling by labeled quadrilaterals. Vertex identity is purely
/// combinatorial; an embedding, when present, maps vertex ids to points.
class Tiling {
 public:
  Tiling() = default;
  Tiling(std::vector<TileData> tiles, int vertex_count)
      : tiles_(std::move(tiles)), vertex_count_(vertex_count) {}

  const std::vector<TileData>& tiles() const { return tiles_; }
  std::vector<TileData>& mutable_tiles() { return tiles_; }
  int vertex_count() const { return vertex_count_; }
  int tile_count() const { return static_cast<int>(tiles_.size()); }

  bool has_embedding() const { return !embedding_.empty(); }
  const std::vector<Vec3>& embedding() const { return embedding_; }
  void set_embedding(std::vector<Vec3> pts) { embedding_ = std::move(pts); }
  void clear_embedding() {
    embedding_.clear();
    edge_lengths_.reset();
  }

  /// True arc lengths by label. Vertex positions alone cannot distinguish an
  /// edge from its complement when the edge exceeds pi (the concave 2-layer
  /// quadrilaterals reach that), so generators record the intended lengths.
  bool has_edge_lengths() const { return edge_lengths_.has_value(); }
  const EdgeTriple& edge_lengths() const { return *edge_lengths_; }
  void set_edge_lengths(const EdgeTriple& e) { edge_lengths_ = e; }

  const std::vector<std::string>& warnings() const { return warnings_; }
  void add_warning(const std::string& w) { warnings_.push_back(w); }

 private:
  std::vector<TileData> tiles_;
  int vertex_count_ = 0;
  std::vector<Vec3> embedding_;  // indexed by vertex id; empty if none
  std::optional<EdgeTriple> edge_lengths_;
  std::vector<std::string> warnings_;
};

/// Exponent vector (k,l,m,n) of a vertex type alpha^k beta^l gamma^m delta^n.
struct VertexType {
  int k = 0, l = 0, m = 0, n = 0;

  int total_degree() const { return k + l + m + n; }
  bool parity_ok() const { return (l % 2 == m % 2) && (m % 2 == n % 2); }

  bool operator==(const VertexType& o) const {
    return k == o.k && l == o.l && m == o.m && n == o.n;
  }
  /// Degree first, then lexicographic on (k,l,m,n); this fixed order is the
  /// library's census convention.
  bool operator<(const VertexType& o) const {
    if (total_degree() != o.total_degree()) return total_degree() < o.total_degree();
    if (k != o.k) return k < o.k;
    if (l != o.l) return l < o.l;
    if (m != o.m) return m < o.m;
    return n < o.n;
  }

  std::string to_string() const {
    const char letters[4] = {'a', 'b', 'c', 'd'};
    const int exps[4] = {k, l, m, n};
    std::ostringstream os;
    for (int i = 0; i < 4; ++i) {
      if (exps[i] == 0) continue;
      os << letters[i];
      if (exps[i] > 1) os << '^' << exps[i];
    }
    return os.str();
  }
};

/// Multiset of vertex types with multiplicities.
class VertexCensus {
 public:
  using Map = std::map<VertexType, int>;

  void add(const VertexType& t, int count = 1) { counts_[t] += count; }
  const Map& counts() const { return counts_; }
  int multiplicity(const VertexType& t) const {
    auto it = counts_.find(t);
    return it == counts_.end() ? 0 : it->second;
  }
  bool operator==(const VertexCensus& o) const { return counts_ == o.counts_; }

  /// Per-angle totals (sum over types of multiplicity * exponent).
  std::array<long long, 4> angle_totals() const {
    std::array<long long, 4> t{0, 0, 0, 0};
    for (const auto& [vt, mult] : counts_) {
      t[0] += static_cast<long long>(mult) * vt.k;
      t[1] += static_cast<long long>(mult) * vt.l;
      t[2] += static_cast<long long>(mult) * vt.m;
      t[3] += static_cast<long long>(mult) * vt.n;
    }
    return t;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "T(";
    bool first = true;
    for (const auto& [vt, mult] : counts_) {
      if (!first) os << ", ";
      first = false;
      os << mult << ' ' << vt.to_string();
    }
    os << ")";
    return os.str();
  }

 private:
  Map counts_;
};

/// A directed tile side plus where it lives.
struct SideRef {
  int tile = -1;
  int side = -1;  // corner `side` -> corner `side+1`
};

/// Undirected edge of the tiling: the two tile sides glued together.
struct EdgePair {
  SideRef first, second;
  EdgeLabel label = EdgeLabel::A;
  int u = -1, v = -1;  // endpoint vertex ids
};

namespace detail {

inline std::pair<int, int> side_vertices(const TileData& t, int side) {
  return {t.corners[side].vertex, t.corners[(side + 1) % 4].vertex};
}

}  // namespace detail

/// Glued side pairs, derived from vertex ids. Throws malformed_tiling_error
/// when a side has no partner or more than one.
inline std::vector<EdgePair> derive_edges(const Tiling& t) {
  std::map<std::pair<int, int>, std::vector<SideRef>> by_pair;
  for (int i = 0; i < t.tile_count(); ++i) {
    for (int s = 0; s < 4; ++s) {
      auto [u, v] = detail::side_vertices(t.tiles()[i], s);
      if (u == v) throw malformed_tiling_error("tile side with identical endpoints");
      by_pair[{std::min(u, v), std::max(u, v)}].push_back({i, s});
    }
  }
  std::vector<EdgePair> edges;
  edges.reserve(by_pair.size());
  for (const auto& [uv, sides] : by_pair) {
    if (sides.size() != 2)
      throw malformed_tiling_error("unpaired half-edge between vertices " +
                                   std::to_string(uv.first) + "," + std::to_string(uv.second));
    EdgePair e;
    e.first = sides[0];
    e.second = sides[1];
    e.u = uv.first;
    e.v = uv.second;
    e.label = t.tiles()[sides[0].tile].edges[sides[0].side];
    edges.push_back(e);
  }
  return edges;
}

/// Corners grouped by vertex id.
inline std::vector<std::vector<std::pair<int, int>>> vertex_corners(const Tiling& t) {
  std::vector<std::vector<std::pair<int, int>>> out(t.vertex_count());
  for (int i = 0; i < t.tile_count(); ++i)
    for (int cidx = 0; cidx < 4; ++cidx) {
      const int v = t.tiles()[i].corners[cidx].vertex;
      if (v < 0 || v >= t.vertex_count())
        throw malformed_tiling_error("corner references vertex id out of range");
      out[v].push_back({i, cidx});
    }
  return out;
}

inline VertexCensus census(const Tiling& t) {
  VertexCensus c;
  const auto per_vertex = vertex_corners(t);
  for (const auto& corners : per_vertex) {
    VertexType vt;
    for (auto [tile, cidx] : corners) {
      switch (t.tiles()[tile].corners[cidx].angle) {
        case AngleLabel::Alpha: ++vt.k; break;
        case AngleLabel::Beta: ++vt.l; break;
        case AngleLabel::Gamma: ++vt.m; break;
        case AngleLabel::Delta: ++vt.n; break;
      }
    }
    c.add(vt);
  }
  return c;
}

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  int v = 0, e = 0, f = 0;
  bool embedded_checked = false;
  double max_vertex_angle_defect = 0.0;
  double max_edge_length_spread = 0.0;
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {

// Whether edges with this label run the long way around their great circle.
inline std::array<bool, 3> long_edge_flags(const Tiling& t) {
  std::array<bool, 3> f{false, false, false};
  if (t.has_edge_lengths()) {
    f[0] = t.edge_lengths().a > kPi;
    f[1] = t.edge_lengths().b > kPi;
    f[2] = t.edge_lengths().c > kPi;
  }
  return f;
}

// Interior angle of an embedded tile at corner cidx, reflex-aware: both
// orientations are evaluated and the one whose angle sum lands in the valid
// quadrilateral window (2pi, 8pi/3] is kept by the caller. Tangents along
// long edges point away from the far endpoint.
inline double corner_angle_assuming_ccw(const Tiling& t, int tile, int cidx,
                                        const std::array<bool, 3>& long_flags) {
  const auto& td = t.tiles()[tile];
  const auto& pos = t.embedding();
  const SpherePoint v(pos[td.corners[cidx].vertex]);
  const SpherePoint prev(pos[td.corners[(cidx + 3) % 4].vertex]);
  const SpherePoint next(pos[td.corners[(cidx + 1) % 4].vertex]);
  Vec3 tp = tangent_toward(v, prev);
  Vec3 tn = tangent_toward(v, next);
  if (long_flags[static_cast<int>(td.edges[(cidx + 3) % 4])]) tp = -tp;
  if (long_flags[static_cast<int>(td.edges[cidx])]) tn = -tn;
  double ang = std::atan2(triple(tn, tp, v.vec()), tn.dot(tp));
  if (ang <= 0.0) ang += 2.0 * kPi;
  return ang;
}

inline std::array<double, 4> tile_interior_angles(const Tiling& t, int tile,
                                                  const std::array<bool, 3>& long_flags) {
  std::array<double, 4> ccw{};
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    ccw[i] = corner_angle_assuming_ccw(t, tile, i, long_flags);
    sum += ccw[i];
  }
  if (sum > 4.0 * kPi)
    for (auto& a : ccw) a = 2.0 * kPi - a;
  return ccw;
}

}  // namespace detail

/// Runs the structural and (when embedded) metric checks. Structural
/// breakage that prevents checking at all raises malformed_tiling_error;
/// everything else is reported.
inline VerificationReport verify(const Tiling& t) {
  VerificationReport r;
  const auto edges = derive_edges(t);
  const auto per_vertex = vertex_corners(t);
  r.f = t.tile_count();
  r.e = static_cast<int>(edges.size());
  r.v = t.vertex_count();

  auto check = [&r](const std::string& name, bool pass, const std::string& detail = "") {
    r.checks.push_back({name, pass, detail});
  };

  check("euler", r.v - r.e + r.f == 2,
        "v-e+f = " + std::to_string(r.v - r.e + r.f));
  check("f_even", r.f % 2 == 0, "f = " + std::to_string(r.f));

  // Degree counts and the two counting identities.
  std::map<int, int> vk;
  bool degrees_ok = true;
  for (const auto& corners : per_vertex) {
    if (corners.size() < 3) degrees_ok = false;
    ++vk[static_cast<int>(corners.size())];
  }
  check("min_degree_3", degrees_ok);
  long long f_formula = 6, v3_formula = 8;
  for (const auto& [k, count] : vk) {
    if (k >= 4) f_formula += static_cast<long long>(k - 3) * count;
    if (k >= 5) v3_formula += static_cast<long long>(k - 4) * count;
  }
  check("f_count_identity", f_formula == r.f,
        "6+sum(k-3)v_k = " + std::to_string(f_formula));
  check("v3_count_identity", v3_formula == vk[3],
        "8+sum(k-4)v_k = " + std::to_string(v3_formula) + ", v3 = " + std::to_string(vk[3]));

  // Edge label counts: f/2 b-edges (and c-edges), f a-edges.
  int na = 0, nb = 0, nc = 0;
  bool labels_match = true;
  for (const auto& e : edges) {
    const EdgeLabel l1 = t.tiles()[e.first.tile].edges[e.first.side];
    const EdgeLabel l2 = t.tiles()[e.second.tile].edges[e.second.side];
    if (l1 != l2) labels_match = false;
    switch (l1) {
      case EdgeLabel::A: ++na; break;
      case EdgeLabel::B: ++nb; break;
      case EdgeLabel::C: ++nc; break;
    }
  }
  check("paired_edge_labels", labels_match);
  check("b_edge_count", nb == r.f / 2,
        "b-edges = " + std::to_string(nb) + ", f/2 = " + std::to_string(r.f / 2));
  check("c_edge_count", nc == r.f / 2);
  check("a_edge_count", na == r.f);

  // Per-tile arrangement of Fig-1 type: sides {a,a,b,c}, one corner of each
  // angle, and each corner flanked by the sides its label requires.
  bool arrangement_ok = true;
  std::string arrangement_detail;
  for (int i = 0; i < t.tile_count() && arrangement_ok; ++i) {
    const auto& td = t.tiles()[i];
    int ecount[3] = {0, 0, 0}, acount[4] = {0, 0, 0, 0};
    for (int s = 0; s < 4; ++s) ++ecount[static_cast<int>(td.edges[s])];
    for (int cidx = 0; cidx < 4; ++cidx) ++acount[static_cast<int>(td.corners[cidx].angle)];
    if (ecount[0] != 2 || ecount[1] != 1 || ecount[2] != 1 ||
        acount[0] != 1 || acount[1] != 1 || acount[2] != 1 || acount[3] != 1) {
      arrangement_ok = false;
      arrangement_detail = "tile " + std::to_string(i) + ": wrong label multiset";
      break;
    }
    for (int cidx = 0; cidx < 4; ++cidx) {
      const EdgeLabel before = td.edges[(cidx + 3) % 4];
      const EdgeLabel after = td.edges[cidx];
      const EdgeLabel lo = std::min(before, after), hi = std::max(before, after);
      bool ok = false;
      switch (td.corners[cidx].angle) {
        case AngleLabel::Alpha: ok = lo == EdgeLabel::A && hi == EdgeLabel::A; break;
        case AngleLabel::Beta: ok = lo == EdgeLabel::A && hi == EdgeLabel::B; break;
        case AngleLabel::Gamma: ok = lo == EdgeLabel::A && hi == EdgeLabel::C; break;
        case AngleLabel::Delta: ok = lo == EdgeLabel::B && hi == EdgeLabel::C; break;
      }
      if (!ok) {
        arrangement_ok = false;
        arrangement_detail = "tile " + std::to_string(i) + ": corner " + std::to_string(cidx) +
                             " label does not match flanking edges";
        break;
      }
    }
  }
  check("tile_label_arrangement", arrangement_ok, arrangement_detail);

  // Parity rule: the counts of beta, gamma, delta agree mod 2 at every vertex
  // (each b-edge and c-edge end contributes to two of them).
  bool parity_ok = true;
  {
    for (const auto& corners : per_vertex) {
      int l = 0, m = 0, n = 0;
      for (auto [tile, cidx] : corners) {
        switch (t.tiles()[tile].corners[cidx].angle) {
          case AngleLabel::Beta: ++l; break;
          case AngleLabel::Gamma: ++m; break;
          case AngleLabel::Delta: ++n; break;
          default: break;
        }
      }
      if (!((l % 2 == m % 2) && (m % 2 == n % 2))) parity_ok = false;
    }
  }
  check("vertex_parity", parity_ok);

  // Vertex links: edge count equals corner count at each vertex and the
  // corners around each vertex form a single umbrella.
  {
    std::vector<int> edge_deg(t.vertex_count(), 0);
    for (const auto& e : edges) {
      ++edge_deg[e.u];
      ++edge_deg[e.v];
    }
    bool link_ok = true;
    for (int v = 0; v < t.vertex_count(); ++v)
      if (edge_deg[v] != static_cast<int>(per_vertex[v].size())) link_ok = false;
    for (int i = 0; i < t.tile_count(); ++i) {
      const auto& td = t.tiles()[i];
      for (int a = 0; a < 4 && link_ok; ++a)
        for (int b = a + 1; b < 4; ++b)
          if (td.corners[a].vertex == td.corners[b].vertex) link_ok = false;
    }
    if (link_ok) {
      // Union corners across each edge endpoint; one component per vertex.
      std::map<std::pair<int, int>, int> corner_index;  // (tile, cidx) -> node id
      std::vector<int> parent;
      std::vector<int> root_of_vertex(t.vertex_count(), -1);
      for (int v = 0; v < t.vertex_count(); ++v)
        for (const auto& [tile, cidx] : per_vertex[v]) {
          corner_index[{tile, cidx}] = static_cast<int>(parent.size());
          parent.push_back(static_cast<int>(parent.size()));
        }
      std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      auto corner_at = [&](const SideRef& s, int v) {
        const auto& td = t.tiles()[s.tile];
        const int cidx = td.corners[s.side].vertex == v ? s.side : (s.side + 1) % 4;
        return corner_index.at({s.tile, cidx});
      };
      for (const auto& e : edges)
        for (int v : {e.u, e.v})
          parent[find(corner_at(e.first, v))] = find(corner_at(e.second, v));
      for (int v = 0; v < t.vertex_count() && link_ok; ++v)
        for (const auto& [tile, cidx] : per_vertex[v]) {
          const int r = find(corner_index.at({tile, cidx}));
          if (root_of_vertex[v] < 0) root_of_vertex[v] = r;
          if (root_of_vertex[v] != r) link_ok = false;
        }
    }
    check("vertex_link", link_ok);
  }

  if (t.has_embedding()) {
    r.embedded_checked = true;
    const auto long_flags = detail::long_edge_flags(t);
    // Angle sums of measured interior angles at every vertex.
    std::vector<double> sums(t.vertex_count(), 0.0);
    for (int i = 0; i < t.tile_count(); ++i) {
      const auto angles = detail::tile_interior_angles(t, i, long_flags);
      for (int cidx = 0; cidx < 4; ++cidx)
        sums[t.tiles()[i].corners[cidx].vertex] += angles[cidx];
    }
    double worst = 0.0;
    for (double s : sums) worst = std::max(worst, std::fabs(s - 2.0 * kPi));
    r.max_vertex_angle_defect = worst;
    check("vertex_angle_sums", worst < kEmbedTol,
          "max |sum - 2pi| = " + std::to_string(worst));

    // All edges with the same label must have the same embedded length, and
    // match the recorded lengths when the tiling carries them.
    double spread = 0.0;
    bool lengths_match = true;
    for (int lbl = 0; lbl < 3; ++lbl) {
      double lo = 1e9, hi = -1e9;
      for (const auto& e : edges) {
        if (static_cast<int>(e.label) != lbl) continue;
        double len = angular_distance(SpherePoint(t.embedding()[e.u]),
                                      SpherePoint(t.embedding()[e.v]));
        if (long_flags[lbl]) len = 2.0 * kPi - len;
        lo = std::min(lo, len);
        hi = std::max(hi, len);
      }
      if (hi < lo) continue;
      spread = std::max(spread, hi - lo);
      if (t.has_edge_lengths()) {
        const double expected = lbl == 0   ? t.edge_lengths().a
                                : lbl == 1 ? t.edge_lengths().b
                                           : t.edge_lengths().c;
        if (std::fabs(lo - expected) >= kEmbedTol || std::fabs(hi - expected) >= kEmbedTol)
          lengths_match = false;
      }
    }
    r.max_edge_length_spread = spread;
    check("edge_length_consistency", spread < kEmbedTol && lengths_match,
          "max spread within a label = " + std::to_string(spread));
  }

  return r;
}

struct BalanceResult {
  bool pass = false;
  std::string witness;
};

/// Balance rule: beta^2.., gamma^2.., delta^2.. vertices appear all or
/// none; with none, the census must be exactly f bcd + 2 a^{f/2}.
inline BalanceResult balance_check(const VertexCensus& c) {
  bool b2 = false, c2 = false, d2 = false;
  for (const auto& [vt, mult] : c.counts()) {
    if (vt.l >= 2) b2 = true;
    if (vt.m >= 2) c2 = true;
    if (vt.n >= 2) d2 = true;
  }
  if (b2 || c2 || d2) {
    if (!b2) return {false, "b^2 missing while a c^2/d^2 vertex is present"};
    if (!c2) return {false, "c^2 missing while a b^2/d^2 vertex is present"};
    if (!d2) return {false, "d^2 missing while a b^2/c^2 vertex is present"};
  }
  const auto totals = c.angle_totals();
  if (!(totals[0] == totals[1] && totals[1] == totals[2] && totals[2] == totals[3]))
    return {false, "per-angle totals differ: " + std::to_string(totals[0]) + "," +
                       std::to_string(totals[1]) + "," + std::to_string(totals[2]) + "," +
                       std::to_string(totals[3])};
  if (b2) return {true, ""};
  const long long f = totals[0];
  VertexCensus expected;
  expected.add(VertexType{0, 1, 1, 1}, static_cast<int>(f));
  expected.add(VertexType{static_cast<int>(f / 2), 0, 0, 0}, 2);
  if (c == expected) return {true, ""};
  return {false, "no b^2/c^2/d^2 vertex but census is not f bcd + 2 a^{f/2}"};
}

struct SpecialTile {
  int tile = -1;
  std::array<int, 4> degrees{};  // sorted ascending
  std::string cls;               // "333d", "334d", "335d", or "344d"
  int d = 0;
  std::string signature;  // e.g. "3344"
};

/// Every quadrilateral tiling of the sphere with all degrees >= 3 owns a
/// tile whose vertex degrees fall in one of the classes 333d, 334d, 335d,
/// 344d (a 1/d1+...+1/d4 > 1 counting argument). Returns the earliest class
/// that appears; within a class, the lexicographically smallest degree
/// signature, then the smallest tile id.
inline SpecialTile special_tile(const Tiling& t) {
  const auto per_vertex = vertex_corners(t);
  std::vector<int> degree(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) degree[v] = static_cast<int>(per_vertex[v].size());

  auto classify = [](const std::array<int, 4>& d) -> int {
    if (d[0] == 3 && d[1] == 3 && d[2] == 3 && d[3] >= 3) return 0;          // 333d
    if (d[0] == 3 && d[1] == 3 && d[2] == 4 && d[3] >= 4 && d[3] <= 11) return 1;  // 334d
    if (d[0] == 3 && d[1] == 3 && d[2] == 5 && d[3] >= 5 && d[3] <= 7) return 2;   // 335d
    if (d[0] == 3 && d[1] == 4 && d[2] == 4 && d[3] >= 4 && d[3] <= 5) return 3;   // 344d
    return -1;
  };

  SpecialTile best;
  int best_class = 4;
  for (int i = 0; i < t.tile_count(); ++i) {
    std::array<int, 4> d{};
    for (int cidx = 0; cidx < 4; ++cidx) d[cidx] = degree[t.tiles()[i].corners[cidx].vertex];
    std::sort(d.begin(), d.end());
    const int cls = classify(d);
    if (cls < 0) continue;
    if (cls < best_class || (cls == best_class && d < best.degrees)) {
      best_class = cls;
      best.tile = i;
      best.degrees = d;
    }
  }
  if (best.tile < 0)
    throw internal_inconsistency_error("no special tile found; tiling is malformed");
  static const char* names[4] = {"333d", "334d", "335d", "344d"};
  best.cls = names[best_class];
  best.d = best.degrees[3];
  std::ostringstream sig;
  for (int x : best.degrees) sig << x;
  best.signature = sig.str();
  return best;
}

}  // namespace spheretile

#pragma once

#include <array>
#include <cmath>
#include <numeric>
#include <optional>
#include <vector>

#include "spheretile/errors.hpp"
#include "spheretile/quad_solver.hpp"
#include "spheretile/tiling.hpp"

namespace spheretile {

/// Rational multiple of pi, for exact angle-sum matching.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational make(long long n, long long d) {
    if (d == 0) throw invalid_parameter_error("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const long long g = std::gcd(n < 0 ? -n : n, d);
    return Rational{g ? n / g : n, g ? d / g : d};
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct AvcConstraints {
  AngleQuad angles;
  double tol = 1e-9;
  int max_total_degree = 60;
  /// When set, angles are the given rational multiples of pi and the vertex
  /// equation is solved in integer arithmetic instead of by tolerance.
  std::optional<std::array<Rational, 4>> exact;
};

namespace detail {

inline bool passes_edge_constraints(const VertexType& t) {
  // Parity rule plus: a vertex without beta, gamma is alpha^k or delta^k.
  if (!t.parity_ok()) return false;
  if (t.l == 0 && t.m == 0 && t.k != 0 && t.n != 0) return false;
  return true;
}

}  // namespace detail

/// All vertex types (k,l,m,n) of total degree >= 3 whose angle sum is 2pi
/// within tolerance (or exactly, in rational mode), subject to the parity
/// rule and the alpha^k/delta^k rule. Deeper adjacency-based exclusions are
/// deliberately not encoded, so the output over-approximates realizable
/// vertices the same way the prepruned tables do.
inline std::vector<VertexType> enumerate_types(const AvcConstraints& c) {
  const double angs[4] = {c.angles.alpha, c.angles.beta, c.angles.gamma, c.angles.delta};
  double min_ang = angs[0];
  for (double a : angs) {
    if (a <= 0) throw invalid_parameter_error("enumerate_types: angles must be positive");
    min_ang = std::min(min_ang, a);
  }
  if (std::ceil(2.0 * kPi / min_ang) > c.max_total_degree)
    throw bound_exceeded_error("enumerate_types: max_total_degree below 2pi/min(angle)");

  std::vector<VertexType> out;
  const int cap = c.max_total_degree;
  // Per-exponent caps from the angle values keep the loops tight.
  int emax[4];
  for (int i = 0; i < 4; ++i)
    emax[i] = std::min(cap, static_cast<int>(std::floor(2.0 * kPi / angs[i] + 1e-9)));

  std::array<long long, 4> pnum{}, pden{};
  long long L = 1;
  if (c.exact) {
    for (int i = 0; i < 4; ++i) {
      pnum[i] = (*c.exact)[i].num;
      pden[i] = (*c.exact)[i].den;
      L = std::lcm(L, pden[i]);
    }
  }

  for (int k = 0; k <= emax[0]; ++k)
    for (int l = 0; l <= emax[1]; ++l)
      for (int m = 0; m <= emax[2]; ++m)
        for (int n = 0; n <= emax[3]; ++n) {
          VertexType t{k, l, m, n};
          if (t.total_degree() < 3 || t.total_degree() > cap) continue;
          if (!detail::passes_edge_constraints(t)) continue;
          if (c.exact) {
            // k p0/q0 + ... == 2, scaled by L.
            const long long sum = k * (pnum[0] * (L / pden[0])) + l * (pnum[1] * (L / pden[1])) +
                                  m * (pnum[2] * (L / pden[2])) + n * (pnum[3] * (L / pden[3]));
            if (sum != 2 * L) continue;
          } else {
            const double sum = k * angs[0] + l * angs[1] + m * angs[2] + n * angs[3];
            if (std::fabs(sum - 2.0 * kPi) > c.tol) continue;
          }
          out.push_back(t);
        }
  std::sort(out.begin(), out.end());
  return out;
}

/// The four degree-3 types permitted by edge matching alone.
inline std::vector<VertexType> degree3_catalog() {
  return {VertexType{3, 0, 0, 0}, VertexType{1, 2, 0, 0}, VertexType{1, 0, 2, 0},
          VertexType{0, 1, 1, 1}};
}

/// The nine degree-4 types permitted by edge matching alone; alpha^2 delta^2
/// is impossible because a vertex without beta, gamma is alpha^k or delta^k.
inline std::vector<VertexType> degree4_catalog() {
  return {VertexType{4, 0, 0, 0}, VertexType{0, 4, 0, 0}, VertexType{0, 0, 4, 0},
          VertexType{0, 0, 0, 4}, VertexType{2, 2, 0, 0}, VertexType{2, 0, 2, 0},
          VertexType{0, 2, 2, 0}, VertexType{0, 2, 0, 2}, VertexType{0, 0, 2, 2}};
}

}  // namespace spheretile

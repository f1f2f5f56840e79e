#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "latmin/errors.hpp"
#include "latmin/ext_int.hpp"
#include "latmin/poset.hpp"

namespace latmin {

inline constexpr int kDefaultEdgeCap = 20;

/// Bipartite graph (U, V) with integer edge weights. Vertices 0-indexed
/// per side. Duplicate (u, v) pairs are rejected at construction.
class WeightedBipartiteGraph {
 public:
  struct Edge {
    int u;
    int v;
    long long w;

    friend bool operator==(const Edge& a, const Edge& b) {
      return a.u == b.u && a.v == b.v && a.w == b.w;
    }
  };

  WeightedBipartiteGraph() = default;
  WeightedBipartiteGraph(int u_size, int v_size, std::vector<Edge> edges);

  int u_size() const { return u_size_; }
  int v_size() const { return v_size_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_negative_weight() const { return has_negative_; }

 private:
  int u_size_ = 0;
  int v_size_ = 0;
  std::vector<Edge> edges_;
  bool has_negative_ = false;
};

struct Matching {
  std::vector<std::pair<int, int>> pairs;  // (u, v), sorted by u
  long long weight = 0;
};

struct SaturatingResult {
  ExtInt value;                      // -inf when required_u cannot be saturated
  std::optional<Matching> witness;   // present iff value is finite
};

/// Maximum weight of a matching M with (boundary of M) intersect U equal
/// to required_u exactly. -inf when no matching saturates required_u.
SaturatingResult max_weight_matching_saturating(const WeightedBipartiteGraph& g,
                                                Mask required_u);

struct WithinResult {
  long long value;  // >= 0, the empty matching is always feasible
  Matching witness;
};

/// Maximum weight of a matching M with boundary contained in
/// allowed_u union allowed_v; no saturation required. Requires all edge
/// weights nonnegative (NegativeWeightError otherwise).
WithinResult max_weight_matching_within(const WeightedBipartiteGraph& g,
                                        Mask allowed_u, Mask allowed_v);

/// Every edge subset that is a matching, with its weight. Test oracle;
/// throws SizeError when the graph has more than edge_cap edges.
std::vector<Matching> enumerate_matchings_bruteforce(
    const WeightedBipartiteGraph& g, int edge_cap = kDefaultEdgeCap);

}  // namespace latmin

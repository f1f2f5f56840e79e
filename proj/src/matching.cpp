#include "latmin/matching.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace latmin {

namespace {

constexpr long long kNoEdge = std::numeric_limits<long long>::max() / 4;

// Kuhn's augmenting path on an adjacency list, existence only.
bool try_augment(int row, const std::vector<std::vector<int>>& adj,
                 std::vector<bool>& used, std::vector<int>& col_to_row) {
  for (int c : adj[row]) {
    if (used[c]) continue;
    used[c] = true;
    if (col_to_row[c] < 0 || try_augment(col_to_row[c], adj, used, col_to_row)) {
      col_to_row[c] = row;
      return true;
    }
  }
  return false;
}

// Min-cost assignment of all m rows to distinct columns (m <= ncols),
// potentials version. cost[r][c] == kNoEdge marks a missing edge.
// Caller guarantees a full assignment over real edges exists.
std::vector<int> hungarian(int m, int ncols,
                           const std::vector<std::vector<long long>>& cost) {
  const long long INF = std::numeric_limits<long long>::max() / 2;
  std::vector<long long> pot_row(m + 1, 0), pot_col(ncols + 1, 0);
  std::vector<int> col_match(ncols + 1, 0);  // 1-based; 0 = free
  std::vector<int> way(ncols + 1, 0);
  for (int r = 1; r <= m; ++r) {
    col_match[0] = r;
    int j0 = 0;
    std::vector<long long> minv(ncols + 1, INF);
    std::vector<bool> used(ncols + 1, false);
    do {
      used[j0] = true;
      int r0 = col_match[j0], j1 = -1;
      long long delta = INF;
      for (int j = 1; j <= ncols; ++j) {
        if (used[j]) continue;
        long long cur = cost[r0 - 1][j - 1] - pot_row[r0] - pot_col[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= ncols; ++j) {
        if (used[j]) {
          pot_row[col_match[j]] += delta;
          pot_col[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (col_match[j0] != 0);
    do {
      int j1 = way[j0];
      col_match[j0] = col_match[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> row_to_col(m, -1);
  for (int j = 1; j <= ncols; ++j)
    if (col_match[j] > 0) row_to_col[col_match[j] - 1] = j - 1;
  return row_to_col;
}

}  // namespace

WeightedBipartiteGraph::WeightedBipartiteGraph(int u_size, int v_size,
                                               std::vector<Edge> edges)
    : u_size_(u_size), v_size_(v_size), edges_(std::move(edges)) {
  if (u_size < 0 || v_size < 0) throw Error("graph: negative side size");
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= u_size_ || e.v < 0 || e.v >= v_size_)
      throw Error("graph: edge endpoint out of range");
    if (!seen.emplace(e.u, e.v).second)
      throw Error("graph: duplicate (u, v) edge");
    if (e.w < 0) has_negative_ = true;
  }
}

SaturatingResult max_weight_matching_saturating(const WeightedBipartiteGraph& g,
                                                Mask required_u) {
  std::vector<int> rows = mask_to_elements(required_u);
  const int m = static_cast<int>(rows.size());
  if (m == 0) return {ExtInt(0), Matching{}};
  if (m > g.v_size()) return {ExtInt::neg_inf(), std::nullopt};

  std::vector<int> row_of(static_cast<size_t>(g.u_size()), -1);
  for (int r = 0; r < m; ++r) row_of[rows[r]] = r;
  std::vector<std::vector<long long>> cost(
      static_cast<size_t>(m), std::vector<long long>(g.v_size(), kNoEdge));
  std::vector<std::vector<int>> adj(static_cast<size_t>(m));
  for (const auto& e : g.edges()) {
    int r = row_of[e.u];
    if (r < 0) continue;
    cost[r][e.v] = -e.w;  // maximize weight = minimize negated weight
    adj[r].push_back(e.v);
  }

  // feasibility first, so the Hungarian optimum never rests on a missing edge
  std::vector<int> col_to_row(static_cast<size_t>(g.v_size()), -1);
  for (int r = 0; r < m; ++r) {
    std::vector<bool> used(static_cast<size_t>(g.v_size()), false);
    if (!try_augment(r, adj, used, col_to_row))
      return {ExtInt::neg_inf(), std::nullopt};
  }

  std::vector<int> row_to_col = hungarian(m, g.v_size(), cost);
  Matching w;
  for (int r = 0; r < m; ++r) {
    int c = row_to_col[r];
    w.pairs.emplace_back(rows[r], c);
    w.weight += -cost[r][c];
  }
  std::sort(w.pairs.begin(), w.pairs.end());
  return {ExtInt(w.weight), std::move(w)};
}

WithinResult max_weight_matching_within(const WeightedBipartiteGraph& g,
                                        Mask allowed_u, Mask allowed_v) {
  if (g.has_negative_weight())
    throw NegativeWeightError("within-matching requires nonnegative weights");
  std::vector<int> us = mask_to_elements(allowed_u);
  const int m = static_cast<int>(us.size());
  // pad V with one weight-0 dummy per allowed u, then saturate allowed_u;
  // sound because weights are nonnegative
  std::vector<WeightedBipartiteGraph::Edge> edges;
  for (const auto& e : g.edges())
    if (((allowed_u >> e.u) & 1u) && ((allowed_v >> e.v) & 1u))
      edges.push_back(e);
  for (int d = 0; d < m; ++d)
    for (int u : us) edges.push_back({u, g.v_size() + d, 0});
  WeightedBipartiteGraph padded(g.u_size(), g.v_size() + m, std::move(edges));
  SaturatingResult r = max_weight_matching_saturating(padded, allowed_u);
  // the dummies make saturation always feasible
  Matching w;
  for (auto [u, v] : r.witness->pairs)
    if (v < g.v_size()) w.pairs.emplace_back(u, v);
  for (const auto& e : g.edges())
    for (auto [u, v] : w.pairs)
      if (e.u == u && e.v == v) w.weight += e.w;
  return {r.value.value(), std::move(w)};
}

std::vector<Matching> enumerate_matchings_bruteforce(
    const WeightedBipartiteGraph& g, int edge_cap) {
  const int m = static_cast<int>(g.edges().size());
  if (m > edge_cap)
    throw SizeError("matching enumeration: more than " +
                    std::to_string(edge_cap) + " edges");
  std::vector<Matching> out;
  for (Mask s = 0; s < (Mask{1} << m); ++s) {
    Mask used_u = 0, used_v = 0;
    Matching cur;
    bool ok = true;
    for (int k = 0; k < m && ok; ++k) {
      if (!((s >> k) & 1u)) continue;
      const auto& e = g.edges()[k];
      Mask bu = Mask{1} << e.u, bv = Mask{1} << e.v;
      if ((used_u & bu) || (used_v & bv)) {
        ok = false;
        break;
      }
      used_u |= bu;
      used_v |= bv;
      cur.pairs.emplace_back(e.u, e.v);
      cur.weight += e.w;
    }
    if (ok) {
      std::sort(cur.pairs.begin(), cur.pairs.end());
      out.push_back(std::move(cur));
    }
  }
  return out;
}

}  // namespace latmin

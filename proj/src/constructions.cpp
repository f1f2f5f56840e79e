#include "latmin/constructions.hpp"

namespace latmin {

std::string variant_name(ConstructionVariant v) {
  switch (v) {
    case ConstructionVariant::F0: return "f0";
    case ConstructionVariant::F1: return "f1";
    case ConstructionVariant::F2: return "f2";
  }
  return "?";
}

SetFunctionTable build_prop2(const Poset& p, int cap) {
  const int n = p.size();
  if (n > cap)
    throw SizeError("build_prop2: n exceeds cap " + std::to_string(cap));
  std::vector<ExtInt> values;
  values.reserve(size_t{1} << n);
  // dominated[j] = { i : j < i }
  std::vector<Mask> dominated(static_cast<size_t>(n), 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (p.less(j, i)) dominated[j] |= Mask{1} << i;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    long long count = 0;
    for (int j = 0; j < n; ++j)
      if (!((x >> j) & 1u) && (dominated[j] & x)) ++count;
    values.emplace_back(count);
  }
  return SetFunctionTable(n, std::move(values));
}

WeightedBipartiteGraph build_graph(const Poset& p, ConstructionVariant variant) {
  const int n = p.size();
  std::vector<WeightedBipartiteGraph::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!p.leq(j, i)) continue;
      switch (variant) {
        case ConstructionVariant::F0:
          edges.push_back({i, j, i == j ? 0 : 1});
          break;
        case ConstructionVariant::F1:
          if (i != j) edges.push_back({i, j, *max_chain_length(p, j, i)});
          break;
        case ConstructionVariant::F2:
          edges.push_back({i, j, i == j ? 0 : *max_chain_length(p, j, i)});
          break;
      }
    }
  return WeightedBipartiteGraph(n, n, std::move(edges));
}

SetFunctionTable build_table(const Poset& p, ConstructionVariant variant, int cap) {
  const int n = p.size();
  if (n > cap)
    throw SizeError("build_table: n exceeds cap " + std::to_string(cap));
  WeightedBipartiteGraph g = build_graph(p, variant);
  Mask full = (Mask{1} << n) - 1;
  std::vector<ExtInt> values;
  values.reserve(size_t{1} << n);
  for (Mask x = 0;; ++x) {
    if (variant == ConstructionVariant::F1) {
      values.emplace_back(max_weight_matching_within(g, x, full & ~x).value);
    } else {
      // the diagonal edges make every X saturable, so the value is finite
      values.push_back(max_weight_matching_saturating(g, x).value);
    }
    if (x == full) break;
  }
  return SetFunctionTable(n, std::move(values));
}

}  // namespace latmin

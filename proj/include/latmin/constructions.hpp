#pragma once

#include <string>

#include "latmin/matching.hpp"
#include "latmin/poset.hpp"
#include "latmin/set_function.hpp"

namespace latmin {

inline constexpr int kDefaultTableCap = 16;

/// Selects one of the three matching-based (graph, weight, constraint)
/// triples used to realize the ideal lattice as a minimizer set.
enum class ConstructionVariant { F0, F1, F2 };

std::string variant_name(ConstructionVariant v);

/// table[X] = |{ j not in X : some i in X has j < i }|.
/// Submodular, zero exactly on ideals, but not exchange-concave in general.
SetFunctionTable build_prop2(const Poset& p, int cap = kDefaultTableCap);

/// The variant's bipartite graph on U = V = {0..n-1}:
///   F0: edge (u_i, v_j) for every j <= i, weight 0 if i == j else 1.
///   F1: edge (u_i, v_j) for every j < i, weight = max chain length from j to i.
///   F2: F0's edge set with F1's weights off the diagonal, 0 on it.
WeightedBipartiteGraph build_graph(const Poset& p, ConstructionVariant variant);

/// The variant's set function as an exact table:
///   F0, F2: table[X] = best matching saturating U_X exactly.
///   F1:     table[X] = best matching inside U_X union V_(complement of X).
/// All entries finite and >= 0. Throws SizeError when p.size() > cap.
SetFunctionTable build_table(const Poset& p, ConstructionVariant variant,
                             int cap = kDefaultTableCap);

}  // namespace latmin

#pragma once

#include <json.hpp>
#include <string>

#include "latmin/matching.hpp"
#include "latmin/partition.hpp"
#include "latmin/poset.hpp"
#include "latmin/set_function.hpp"

namespace latmin {

// All JSON formats are 1-indexed at the boundary.
//
// Poset:           {"n": 3, "relations": [[1, 3], [2, 3]]}   (j before i, j < i)
// Weighted graph:  {"u": 3, "v": 3, "edges": [[1, 1, 0], ...]}
// Plain graph:     {"a": 2, "b": 2, "edges": [[1, 1], ...]}
// Table:           {"n": 3, "rows": [[[], 0], [[1], 0], ...]} in canonical
//                  subset order, subsets as sorted element lists, -inf as "-inf"
// Family:          sorted list of sorted element lists

Poset poset_from_json(const nlohmann::json& j);
nlohmann::json poset_to_json(const Poset& p);  // emits Hasse covers

WeightedBipartiteGraph wgraph_from_json(const nlohmann::json& j);
nlohmann::json wgraph_to_json(const WeightedBipartiteGraph& g);

BipartiteGraphPlain pgraph_from_json(const nlohmann::json& j);
nlohmann::json pgraph_to_json(const BipartiteGraphPlain& g);

SetFunctionTable table_from_json(const nlohmann::json& j);
nlohmann::json table_to_json(const SetFunctionTable& t);

nlohmann::json family_to_json(const SubsetFamily& f);

nlohmann::json subset_to_json(Mask x);
std::string subset_str(Mask x);  // "{1,3}", 1-indexed

nlohmann::json load_json_file(const std::string& path);   // ParseError on failure
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace latmin

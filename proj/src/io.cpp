#include "latmin/io.hpp"

#include <fstream>

namespace latmin {

using nlohmann::json;

namespace {

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError(std::string("missing or non-integer field \"") + key + "\"");
  return j[key].get<int>();
}

}  // namespace

Poset poset_from_json(const json& j) {
  int n = get_int(j, "n");
  std::vector<std::pair<int, int>> pairs;
  if (j.contains("relations")) {
    if (!j["relations"].is_array()) throw ParseError("\"relations\" must be an array");
    for (const json& rel : j["relations"]) {
      if (!rel.is_array() || rel.size() != 2 || !rel[0].is_number_integer() ||
          !rel[1].is_number_integer())
        throw ParseError("relation entries must be [j, i] integer pairs");
      pairs.emplace_back(rel[0].get<int>() - 1, rel[1].get<int>() - 1);
    }
  }
  try {
    return Poset::from_relations(n, pairs);
  } catch (const CycleError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

json poset_to_json(const Poset& p) {
  json rels = json::array();
  for (auto [j, i] : p.cover_pairs()) rels.push_back({j + 1, i + 1});
  return json{{"n", p.size()}, {"relations", rels}};
}

WeightedBipartiteGraph wgraph_from_json(const json& j) {
  int u = get_int(j, "u"), v = get_int(j, "v");
  std::vector<WeightedBipartiteGraph::Edge> edges;
  if (j.contains("edges"))
    for (const json& e : j["edges"]) {
      if (!e.is_array() || e.size() != 3)
        throw ParseError("weighted edges must be [u, v, w] triples");
      edges.push_back({e[0].get<int>() - 1, e[1].get<int>() - 1,
                       e[2].get<long long>()});
    }
  try {
    return WeightedBipartiteGraph(u, v, std::move(edges));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

json wgraph_to_json(const WeightedBipartiteGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u + 1, e.v + 1, e.w});
  return json{{"u", g.u_size()}, {"v", g.v_size()}, {"edges", edges}};
}

BipartiteGraphPlain pgraph_from_json(const json& j) {
  BipartiteGraphPlain g;
  g.a_size = get_int(j, "a");
  g.b_size = get_int(j, "b");
  if (j.contains("edges"))
    for (const json& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2)
        throw ParseError("edges must be [a, b] pairs");
      g.edges.emplace_back(e[0].get<int>() - 1, e[1].get<int>() - 1);
    }
  return g;
}

json pgraph_to_json(const BipartiteGraphPlain& g) {
  json edges = json::array();
  for (auto [a, b] : g.edges) edges.push_back({a + 1, b + 1});
  return json{{"a", g.a_size}, {"b", g.b_size}, {"edges", edges}};
}

json subset_to_json(Mask x) {
  json out = json::array();
  for (int e : mask_to_elements(x)) out.push_back(e + 1);
  return out;
}

std::string subset_str(Mask x) {
  std::string s = "{";
  bool first = true;
  for (int e : mask_to_elements(x)) {
    if (!first) s += ",";
    s += std::to_string(e + 1);
    first = false;
  }
  return s + "}";
}

SetFunctionTable table_from_json(const json& j) {
  int n = get_int(j, "n");
  if (n < 0 || n > 30) throw ParseError("table: n out of range");
  if (!j.contains("rows") || !j["rows"].is_array())
    throw ParseError("table: missing \"rows\" array");
  const json& rows = j["rows"];
  if (rows.size() != (size_t{1} << n))
    throw ParseError("table: expected 2^n rows");
  std::vector<ExtInt> values(size_t{1} << n, ExtInt(0));
  std::vector<bool> seen(size_t{1} << n, false);
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != 2 || !row[0].is_array())
      throw ParseError("table rows must be [subset, value] pairs");
    Mask x = 0;
    for (const json& e : row[0]) {
      int el = e.get<int>() - 1;
      if (el < 0 || el >= n) throw ParseError("table: subset element out of range");
      x |= Mask{1} << el;
    }
    if (seen[x]) throw ParseError("table: duplicate subset row");
    seen[x] = true;
    if (row[1].is_string()) {
      if (row[1].get<std::string>() != "-inf")
        throw ParseError("table: non-numeric value must be \"-inf\"");
      values[x] = ExtInt::neg_inf();
    } else if (row[1].is_number_integer()) {
      values[x] = ExtInt(row[1].get<long long>());
    } else {
      throw NonIntegerError("table: values must be integers or \"-inf\"");
    }
  }
  return SetFunctionTable(n, std::move(values));
}

json table_to_json(const SetFunctionTable& t) {
  json rows = json::array();
  for (Mask x = 0; x < t.values.size(); ++x) {
    ExtInt v = t[x];
    rows.push_back({subset_to_json(x),
                    v.is_finite() ? json(v.value()) : json("-inf")});
  }
  return json{{"n", t.n}, {"rows", rows}};
}

json family_to_json(const SubsetFamily& f) {
  // sorted list of sorted element lists
  json out = json::array();
  for (Mask m : f.members) out.push_back(subset_to_json(m));
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON in file: " + path);
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace latmin

#include <CLI11.hpp>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "latmin/constructions.hpp"
#include "latmin/io.hpp"
#include "latmin/partition.hpp"
#include "latmin/poset.hpp"
#include "latmin/verify.hpp"

namespace {

using latmin::Mask;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;   // a verification check reported a witness
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitCycle = 4;
constexpr int kExitSize = 5;
constexpr int kExitOther = 6;

struct Caps {
  int enum_cap = latmin::kDefaultEnumCap;
  int table_cap = latmin::kDefaultTableCap;
  int verify_cap = latmin::kDefaultVerifyCap;
};

Caps caps_from_env() {
  Caps c;
  if (const char* s = std::getenv("LATMIN_MAX_N")) {
    int n = std::atoi(s);
    if (n > 0) c = Caps{n, n, n};
  }
  return c;
}

// splitmix64; fixed across platforms so seeded output is byte-identical
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, 1) with 53 random bits
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

latmin::ConstructionVariant parse_variant(const std::string& s, bool& is_prop2) {
  is_prop2 = false;
  if (s == "f0") return latmin::ConstructionVariant::F0;
  if (s == "f1") return latmin::ConstructionVariant::F1;
  if (s == "f2") return latmin::ConstructionVariant::F2;
  if (s == "prop2") {
    is_prop2 = true;
    return latmin::ConstructionVariant::F0;
  }
  throw CLI::ValidationError("--variant must be f0|f1|f2|prop2");
}

int cmd_ideals(const std::string& poset_file, bool list, bool as_json,
               const Caps& caps) {
  latmin::Poset p = latmin::poset_from_json(latmin::load_json_file(poset_file));
  latmin::SubsetFamily ideals = latmin::enumerate_ideals(p, caps.enum_cap);
  if (as_json) {
    json out{{"n", p.size()}, {"ideal_count", ideals.size()}};
    if (list) out["ideals"] = latmin::family_to_json(ideals);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "ideals: " << ideals.size() << "\n";
    if (list)
      for (Mask m : ideals.members)
        std::cout << "  " << latmin::subset_str(m) << "\n";
  }
  return kExitOk;
}

int cmd_build(const std::string& poset_file, const std::string& variant,
              const std::string& out_file, bool as_json, const Caps& caps) {
  latmin::Poset p = latmin::poset_from_json(latmin::load_json_file(poset_file));
  bool is_prop2 = false;
  latmin::ConstructionVariant v = parse_variant(variant, is_prop2);
  latmin::SetFunctionTable t =
      is_prop2 ? latmin::build_prop2(p, caps.table_cap)
               : latmin::build_table(p, v, caps.table_cap);
  json tj = latmin::table_to_json(t);
  if (!out_file.empty()) latmin::save_json_file(out_file, tj);
  if (as_json) {
    std::cout << tj.dump(2) << "\n";
  } else {
    std::cout << "built " << variant << " table: n=" << t.n << ", "
              << t.subset_count() << " entries";
    if (!out_file.empty()) std::cout << " -> " << out_file;
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& table_file, const std::string& poset_file,
               bool as_json, const Caps& caps) {
  latmin::SetFunctionTable t =
      latmin::table_from_json(latmin::load_json_file(table_file));
  auto sub = latmin::is_submodular(t, caps.verify_cap);
  auto mnat = latmin::is_mnat_concave(t, caps.verify_cap);
  latmin::SubsetFamily mins = latmin::minimizers(t);
  bool any_fail = sub.has_value() || mnat.has_value();

  json out{{"n", t.n},
           {"caps", {{"verify", caps.verify_cap}}},
           {"submodular", !sub.has_value()},
           {"mnat_concave", !mnat.has_value()},
           {"minimizer_count", mins.size()}};
  if (sub) out["submodular_witness"] = sub->describe();
  if (mnat) out["mnat_witness"] = mnat->describe();

  bool min_cond = true;
  if (!poset_file.empty()) {
    latmin::Poset p = latmin::poset_from_json(latmin::load_json_file(poset_file));
    min_cond = latmin::check_min_condition(t, p);
    out["min_condition"] = min_cond;
    if (!min_cond) any_fail = true;
  }

  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "submodular:   " << (sub ? "FAIL" : "pass") << "\n";
    if (sub) std::cout << "  " << sub->describe() << "\n";
    std::cout << "mnat-concave: " << (mnat ? "FAIL" : "pass") << "\n";
    if (mnat) std::cout << "  " << mnat->describe() << "\n";
    std::cout << "minimizers:   " << mins.size() << "\n";
    if (!poset_file.empty())
      std::cout << "min-condition: " << (min_cond ? "pass" : "FAIL") << "\n";
  }
  return any_fail ? kExitCheckFailed : kExitOk;
}

int cmd_count(const std::string& input_file, const std::string& via,
              bool as_json, const Caps& caps) {
  json out;
  std::string text;
  if (via == "ideals") {
    latmin::Poset p = latmin::poset_from_json(latmin::load_json_file(input_file));
    auto ideals = latmin::enumerate_ideals(p, caps.enum_cap);
    out = json{{"via", "ideals"}, {"ideal_count", ideals.size()}};
    text = "ideals: " + std::to_string(ideals.size());
  } else if (via == "partition") {
    latmin::Poset p = latmin::poset_from_json(latmin::load_json_file(input_file));
    latmin::SetFunctionTable t =
        latmin::build_table(p, latmin::ConstructionVariant::F0, caps.table_cap);
    latmin::DyadicSum sum = latmin::partition_sum_dyadic(t);
    unsigned long long count = latmin::estimate_ideal_count(t);
    out = json{{"via", "partition"},
               {"partition_sum", sum.str()},
               {"ideal_count", count}};
    text = "partition sum: " + sum.str() +
           "\nideals: " + std::to_string(count);
  } else if (via == "bis") {
    latmin::BipartiteGraphPlain g =
        latmin::pgraph_from_json(latmin::load_json_file(input_file));
    unsigned long long bis = latmin::count_bis_bruteforce(g, caps.enum_cap);
    latmin::Poset p = latmin::bis_to_poset(g);
    auto ideals = latmin::enumerate_ideals(p, caps.enum_cap);
    out = json{{"via", "bis"},
               {"independent_sets", bis},
               {"ideal_count", ideals.size()}};
    text = "independent sets: " + std::to_string(bis) +
           "\nideals of the induced poset: " + std::to_string(ideals.size());
  } else {
    throw CLI::ValidationError("--via must be ideals|partition|bis");
  }
  if (as_json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text << "\n";
  return kExitOk;
}

int cmd_gen(const std::string& kind, int n, std::uint64_t seed, double edge_prob,
            const std::string& out_file, bool as_json, const Caps& caps) {
  if (n < 0 || n > caps.enum_cap)
    throw latmin::SizeError("gen: n outside [0, cap]");
  if (edge_prob < 0.0 || edge_prob > 1.0)
    throw CLI::ValidationError("--edge-prob must be in [0, 1]");
  std::vector<std::pair<int, int>> pairs;
  if (kind == "chain") {
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  } else if (kind == "antichain") {
    // no relations
  } else if (kind == "random-dag") {
    // upward edges on the fixed linear order; always acyclic
    Rng rng(seed);
    for (int j = 0; j < n; ++j)
      for (int i = j + 1; i < n; ++i)
        if (rng.unit() < edge_prob) pairs.emplace_back(j, i);
  } else {
    throw CLI::ValidationError("--kind must be chain|antichain|random-dag");
  }
  latmin::Poset p = latmin::Poset::from_relations(n, pairs);
  json pj = latmin::poset_to_json(p);
  if (!out_file.empty()) latmin::save_json_file(out_file, pj);
  if (as_json || out_file.empty())
    std::cout << pj.dump(2) << "\n";
  else
    std::cout << "wrote " << kind << " poset (n=" << n << ") -> " << out_file
              << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distributive lattices as minimizer sets of exchange-concave "
               "set functions: constructions, verification, counting"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON reports");
  Caps caps = caps_from_env();

  auto* ideals = app.add_subcommand("ideals", "count (and list) the ideals of a poset");
  std::string ideals_file;
  bool ideals_list = false;
  ideals->add_option("poset-file", ideals_file, "poset JSON file")->required();
  ideals->add_flag("--list", ideals_list, "list the ideal family");

  auto* build = app.add_subcommand("build", "build a set-function table for a poset");
  std::string build_file, build_variant = "f0", build_out;
  build->add_option("poset-file", build_file)->required();
  build->add_option("--variant", build_variant, "f0|f1|f2|prop2");
  build->add_option("--out", build_out, "output table file");

  auto* verify = app.add_subcommand("verify", "verify axioms of a table");
  std::string verify_table, verify_poset;
  verify->add_option("table-file", verify_table)->required();
  verify->add_option("poset-file", verify_poset,
                     "optional poset for the minimizer condition");

  auto* count = app.add_subcommand("count", "count ideals / independent sets");
  std::string count_file, count_via = "ideals";
  count->add_option("input-file", count_file)->required();
  count->add_option("--via", count_via, "ideals|partition|bis");

  auto* gen = app.add_subcommand("gen", "generate a poset file");
  std::string gen_kind = "random-dag", gen_out;
  int gen_n = 5;
  std::uint64_t gen_seed = 0;
  double gen_prob = 0.3;
  gen->add_option("--kind", gen_kind, "chain|antichain|random-dag");
  gen->add_option("--n", gen_n, "element count");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--edge-prob", gen_prob, "edge probability for random-dag");
  gen->add_option("--out", gen_out, "output poset file");

  try {
    app.parse(argc, argv);
    if (ideals->parsed())
      return cmd_ideals(ideals_file, ideals_list, as_json, caps);
    if (build->parsed())
      return cmd_build(build_file, build_variant, build_out, as_json, caps);
    if (verify->parsed())
      return cmd_verify(verify_table, verify_poset, as_json, caps);
    if (count->parsed()) return cmd_count(count_file, count_via, as_json, caps);
    if (gen->parsed())
      return cmd_gen(gen_kind, gen_n, gen_seed, gen_prob, gen_out, as_json, caps);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitUsage : kExitOk;
  } catch (const latmin::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const latmin::CycleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCycle;
  } catch (const latmin::SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSize;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
  return kExitUsage;
}

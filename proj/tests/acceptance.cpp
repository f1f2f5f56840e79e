// Acceptance suite: runs every criterion end to end and prints one
// pass/fail line per criterion. Expects the CLI binary path as argv[1]
// for the determinism checks.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "latmin/constructions.hpp"
#include "latmin/io.hpp"
#include "latmin/partition.hpp"
#include "latmin/poset.hpp"
#include "latmin/verify.hpp"
#include "test_util.hpp"

using namespace latmin;

namespace {

int g_failures = 0;

void report(int idx, const std::string& name, bool ok,
            const std::string& detail = "") {
  std::cout << "[" << idx << "/9] " << (ok ? "PASS" : "FAIL") << "  " << name;
  if (!ok && !detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

std::vector<Poset> build_corpus() {
  std::vector<Poset> corpus = testutil::all_labeled_posets(4);
  for (std::uint64_t seed = 0; seed < 500; ++seed)
    corpus.push_back(testutil::random_poset(seed, 8));
  return corpus;
}

const std::vector<ConstructionVariant> kVariants = {
    ConstructionVariant::F0, ConstructionVariant::F1, ConstructionVariant::F2};

// ---- criterion 1: exact reproduction of the counterexample ----------------

void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  Poset p = testutil::wedge_poset();
  SetFunctionTable f = build_prop2(p);
  auto expect = [&](Mask x, long long v, const char* what) {
    if (f[x] != ExtInt(v)) {
      ok = false;
      detail = std::string("wrong value for ") + what;
    }
  };
  expect(0b100, 2, "f({3})");
  expect(0b011, 0, "f({1,2})");
  expect(0b101, 1, "f({1,3})");
  expect(0b110, 1, "f({2,3})");
  if (is_submodular(f).has_value()) {
    ok = false;
    detail = "prop2 table reported non-submodular";
  }
  auto w = is_mnat_concave(f);
  if (!w.has_value()) {
    ok = false;
    detail = "exchange axiom unexpectedly passed";
  } else if (w->x != 0b100 || w->y != 0b011 || w->i != 2 ||
             w->tried_j.size() != 2 || w->tried_j[0].j != 0 ||
             w->tried_j[1].j != 1) {
    ok = false;
    detail = "witness is not (X={3}, Y={1,2}, i=3) with j in {1,2}: " +
             w->describe();
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0).count();
  if (secs >= 1.0) {
    ok = false;
    detail = "took " + std::to_string(secs) + "s";
  }
  report(1, "counterexample reproduction (exact, < 1s)", ok, detail);
}

// ---- criteria 2-5, 7: per-poset property suite over the shared corpus -----

std::pair<bool, std::string> corpus_criteria(const std::vector<Poset>& corpus) {
  bool ok2 = true, ok3 = true, ok4 = true, ok5 = true, ok7 = true;
  std::string d2, d3, d4, d5, d7;
  for (size_t idx = 0; idx < corpus.size(); ++idx) {
    const Poset& p = corpus[idx];
    std::string where = "poset #" + std::to_string(idx);
    SubsetFamily ideals = enumerate_ideals(p);
    BigInt ideal_count = ideals.size();

    std::vector<SetFunctionTable> tables;
    for (ConstructionVariant v : kVariants) tables.push_back(build_table(p, v));
    SetFunctionTable prop2 = build_prop2(p);

    // 2: exchange axiom + minimizer condition + f1 == f2
    for (size_t vi = 0; vi < tables.size() && ok2; ++vi) {
      if (is_mnat_concave(tables[vi]).has_value()) {
        ok2 = false;
        d2 = variant_name(kVariants[vi]) + " not exchange-concave at " + where;
      } else if (!check_min_condition(tables[vi], p)) {
        ok2 = false;
        d2 = variant_name(kVariants[vi]) + " min-condition fails at " + where;
      }
    }
    if (ok2 && !(tables[1] == tables[2])) {
      ok2 = false;
      d2 = "f1 != f2 at " + where;
    }

    // 3: minimizer family equals the ideal family, prop2 included
    if (ok3) {
      for (size_t vi = 0; vi < tables.size() && ok3; ++vi)
        if (!(minimizers(tables[vi]) == ideals)) {
          ok3 = false;
          d3 = variant_name(kVariants[vi]) + " minimizers != ideals at " + where;
        }
      if (ok3 && !(minimizers(prop2) == ideals)) {
        ok3 = false;
        d3 = "prop2 minimizers != ideals at " + where;
      }
    }

    // 4: lattice closure of minimizers, generalized-matroid maximizers
    if (ok4) {
      std::vector<const SetFunctionTable*> all = {&tables[0], &tables[1],
                                                  &tables[2], &prop2};
      for (const SetFunctionTable* t : all) {
        if (!is_submodular(*t).has_value() &&
            !is_union_intersection_closed(minimizers(*t))) {
          ok4 = false;
          d4 = "minimizers not union/intersection closed at " + where;
          break;
        }
        if (!is_mnat_concave(*t).has_value() &&
            is_generalized_matroid(maximizers(*t)).has_value()) {
          ok4 = false;
          d4 = "maximizers fail the family exchange axiom at " + where;
          break;
        }
      }
    }

    // 5: exact dyadic bound and integer recovery
    if (ok5) {
      for (size_t vi = 0; vi < tables.size() && ok5; ++vi) {
        DyadicSum s = partition_sum_dyadic(tables[vi]);
        if (!s.within_quarter_of(ideal_count) ||
            BigInt(estimate_ideal_count(tables[vi])) != ideal_count) {
          ok5 = false;
          d5 = variant_name(kVariants[vi]) + " partition sum off at " + where;
        }
      }
    }

    // 7: Birkhoff round-trip
    if (ok7 && !verify_birkhoff_roundtrip(p)) {
      ok7 = false;
      d7 = "round-trip fails at " + where;
    }
  }
  if (ok5) {
    DyadicSum s = partition_sum_dyadic(
        build_table(testutil::wedge_poset(), ConstructionVariant::F0));
    if (s.str() != "163/32") {
      ok5 = false;
      d5 = "counterexample poset sum is " + s.str();
    }
  }
  report(2, "exchange axiom, minimizer condition, f1 == f2 over the corpus",
         ok2, d2);
  report(3, "minimizer families equal ideal families", ok3, d3);
  report(4, "minimizer lattices and maximizer generalized matroids", ok4, d4);
  report(5, "dyadic partition sums within 1/4, exact 163/32", ok5, d5);
  return {ok7, d7};
}

// ---- criterion 6: matching solvers against the exhaustive oracle ----------

struct FlatMatching {
  Mask bu = 0, bv = 0;
  long long w = 0;
};

std::vector<FlatMatching> all_matchings(const WeightedBipartiteGraph& g) {
  std::vector<FlatMatching> out;
  for (const Matching& m : enumerate_matchings_bruteforce(g)) {
    FlatMatching fm;
    fm.w = m.weight;
    for (auto [u, v] : m.pairs) {
      fm.bu |= Mask{1} << u;
      fm.bv |= Mask{1} << v;
    }
    out.push_back(fm);
  }
  return out;
}

bool check_graph_against_oracle(const WeightedBipartiteGraph& g,
                                std::string& detail) {
  std::vector<FlatMatching> all = all_matchings(g);
  for (Mask r = 0; r < (Mask{1} << g.u_size()); ++r) {
    ExtInt best = ExtInt::neg_inf();
    for (const FlatMatching& m : all)
      if (m.bu == r && best < ExtInt(m.w)) best = ExtInt(m.w);
    auto got = max_weight_matching_saturating(g, r);
    if (got.value != best) {
      detail = "saturating solver disagrees with oracle";
      return false;
    }
    if (got.witness) {
      Mask bu = 0;
      long long w = 0;
      for (auto [u, v] : got.witness->pairs) bu |= Mask{1} << u;
      for (auto [u, v] : got.witness->pairs)
        for (const auto& e : g.edges())
          if (e.u == u && e.v == v) w += e.w;
      if (bu != r || ExtInt(w) != got.value) {
        detail = "saturating witness invalid";
        return false;
      }
    }
  }
  for (Mask au = 0; au < (Mask{1} << g.u_size()); ++au)
    for (Mask av = 0; av < (Mask{1} << g.v_size()); ++av) {
      long long best = 0;
      for (const FlatMatching& m : all)
        if (!(m.bu & ~au) && !(m.bv & ~av) && m.w > best) best = m.w;
      auto got = max_weight_matching_within(g, au, av);
      if (got.value != best) {
        detail = "within solver disagrees with oracle";
        return false;
      }
    }
  return true;
}

void criterion6() {
  bool ok = true;
  std::string detail;
  // exhaustive: sides up to 3, each potential edge absent or weighted 0..2
  for (int us = 0; us <= 3 && ok; ++us)
    for (int vs = 0; vs <= 3 && ok; ++vs) {
      const int cells = us * vs;
      std::uint64_t total = 1;
      for (int c = 0; c < cells; ++c) total *= 4;
      for (std::uint64_t code = 0; code < total && ok; ++code) {
        std::vector<WeightedBipartiteGraph::Edge> edges;
        std::uint64_t rest = code;
        for (int a = 0; a < us; ++a)
          for (int b = 0; b < vs; ++b) {
            int state = static_cast<int>(rest & 3);
            rest >>= 2;
            if (state > 0) edges.push_back({a, b, state - 1});
          }
        WeightedBipartiteGraph g(us, vs, std::move(edges));
        if (!check_graph_against_oracle(g, detail)) ok = false;
      }
    }
  // randomized: sides up to 4
  testutil::Rng rng(0xACCE5521);
  for (int trial = 0; trial < 1000 && ok; ++trial) {
    int us = 1 + rng.below(4), vs = 1 + rng.below(4);
    std::vector<WeightedBipartiteGraph::Edge> edges;
    for (int a = 0; a < us; ++a)
      for (int b = 0; b < vs; ++b)
        if (rng.unit() < 0.55)
          edges.push_back({a, b, static_cast<long long>(rng.below(4))});
    WeightedBipartiteGraph g(us, vs, std::move(edges));
    if (!check_graph_against_oracle(g, detail)) ok = false;
  }
  report(6, "matching solvers match the exhaustive oracle", ok, detail);
}

// ---- criterion 8: independent sets biject with ideals ---------------------

void criterion8() {
  bool ok = true;
  std::string detail;
  testutil::Rng rng(0xB15B15);
  for (int trial = 0; trial < 200 && ok; ++trial) {
    BipartiteGraphPlain g;
    g.a_size = 1 + rng.below(6);
    g.b_size = 1 + rng.below(6);
    for (int a = 0; a < g.a_size; ++a)
      for (int b = 0; b < g.b_size; ++b)
        if (rng.unit() < 0.35) g.edges.emplace_back(a, b);
    if (count_bis_bruteforce(g) != enumerate_ideals(bis_to_poset(g)).size()) {
      ok = false;
      detail = "count mismatch at trial " + std::to_string(trial);
    }
  }
  report(8, "independent-set counts equal ideal counts of the induced poset",
         ok, detail);
}

// ---- criterion 9: CLI determinism and exit codes --------------------------

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cmd(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) return {-1, ""};
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void criterion9(const std::string& cli) {
  bool ok = true;
  std::string detail;
  if (cli.empty()) {
    report(9, "CLI determinism and exit codes", false, "no CLI path given");
    return;
  }
  char tmpl[] = "/tmp/latmin_accept_XXXXXX";
  std::string dir = mkdtemp(tmpl);
  std::string wedge = dir + "/wedge.json";
  save_json_file(wedge, poset_to_json(testutil::wedge_poset()));
  std::string k22 = dir + "/k22.json";
  save_json_file(k22, pgraph_to_json(
      BipartiteGraphPlain{2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}}));

  auto deterministic = [&](const std::string& cmd, int want_exit,
                           const std::string& must_contain) {
    if (!ok) return;
    RunResult a = run_cmd(cmd), b = run_cmd(cmd);
    if (a.exit_code != want_exit) {
      ok = false;
      detail = "exit " + std::to_string(a.exit_code) + " != " +
               std::to_string(want_exit) + " for: " + cmd;
    } else if (a.output != b.output) {
      ok = false;
      detail = "non-deterministic output for: " + cmd;
    } else if (!must_contain.empty() &&
               a.output.find(must_contain) == std::string::npos) {
      ok = false;
      detail = "missing \"" + must_contain + "\" in output of: " + cmd;
    }
  };

  deterministic(cli + " gen --kind chain --n 3", 0, "");
  if (ok) {
    RunResult r = run_cmd(cli + " gen --kind chain --n 3");
    nlohmann::json j = nlohmann::json::parse(r.output, nullptr, false);
    if (j.is_discarded() ||
        j["relations"] != nlohmann::json::parse("[[1,2],[2,3]]")) {
      ok = false;
      detail = "chain n=3 relations are not [[1,2],[2,3]]";
    }
  }
  deterministic(cli + " gen --kind random-dag --n 6 --seed 42 --edge-prob 0.3 "
                      "--out " + dir + "/rand.json", 0, "");
  if (ok) {
    RunResult a = run_cmd("cat " + dir + "/rand.json");
    run_cmd(cli + " gen --kind random-dag --n 6 --seed 42 --edge-prob 0.3 "
                  "--out " + dir + "/rand.json");
    RunResult b = run_cmd("cat " + dir + "/rand.json");
    if (a.output != b.output) {
      ok = false;
      detail = "regenerated random-dag file differs";
    }
  }
  deterministic(cli + " ideals " + wedge + " --list", 0, "ideals: 5");
  deterministic(cli + " build " + wedge + " --variant f0 --out " + dir +
                    "/f0.json", 0, "");
  deterministic(cli + " build " + wedge + " --variant prop2 --out " + dir +
                    "/prop2.json", 0, "");
  deterministic(cli + " verify " + dir + "/f0.json " + wedge, 0, "pass");
  // the counterexample function: submodular yes, exchange-concave no, exit 1
  deterministic(cli + " verify " + dir + "/prop2.json " + wedge, 1,
                "X={3} Y={1,2} i=3");
  deterministic(cli + " count " + wedge + " --via partition", 0, "163/32");
  deterministic(cli + " count " + k22 + " --via bis", 0, "independent sets: 7");
  deterministic(cli + " count " + wedge + " --via ideals", 0, "ideals: 5");
  // input-error exit codes are distinct from verification failure
  deterministic(cli + " ideals " + dir + "/missing.json", 3, "");
  if (ok) {
    RunResult r = run_cmd(cli + " verify " + dir + "/prop2.json " + wedge);
    if (r.output.find("submodular:   pass") == std::string::npos ||
        r.output.find("mnat-concave: FAIL") == std::string::npos ||
        r.output.find("min-condition: pass") == std::string::npos) {
      ok = false;
      detail = "verify report statuses wrong";
    }
  }
  run_cmd("rm -rf " + dir);
  report(9, "CLI determinism and exit codes", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  criterion1();
  std::vector<Poset> corpus = build_corpus();
  auto [ok7, d7] = corpus_criteria(corpus);
  criterion6();
  report(7, "Birkhoff round-trip over the corpus", ok7, d7);
  criterion8();
  criterion9(cli);
  if (g_failures == 0)
    std::cout << "all acceptance criteria passed" << std::endl;
  else
    std::cout << g_failures << " criteria failed" << std::endl;
  return g_failures == 0 ? 0 : 1;
}

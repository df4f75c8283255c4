// Acceptance suite: one check per numbered criterion, each printing a single
// PASS/FAIL line (plus indented detail). Exit code 0 iff the criterion
// passes. Criteria 4 and 9b assert stated values that the exact geometry
// contradicts; they are expected to fail and are registered as such in
// CMake, with the measured values printed for the record.

#include "dsg/cnf.hpp"
#include "dsg/graph.hpp"
#include "dsg/reductions.hpp"
#include "dsg/scene.hpp"
#include "dsg/solvers.hpp"

#include "../test_support.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <string>
#include <vector>

using namespace dsg;
using testsupport::Big;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

// 200 seeded strict-(3,3) formulas with n in [3,8]; the same corpus feeds
// criteria 1, 2, 3, 4, 8 and 9.
std::vector<CnfFormula> sat_corpus(int count = 200) {
  std::vector<CnfFormula> out;
  for (int i = 0; i < count; ++i) {
    int n = 3 + (i % 6);
    out.push_back(gen_random_33(n, 90000 + i));
  }
  return out;
}

std::vector<LabeledGraph> graph_corpus(int count, std::uint64_t seed0,
                                       int n_min, int n_max) {
  std::vector<LabeledGraph> out;
  for (int i = 0; i < count; ++i) {
    testsupport::Rng rng(seed0 + i);
    int n = n_min + (i % (n_max - n_min + 1));
    out.push_back(testsupport::random_graph(rng, n, 25 + rng.below(55)));
  }
  return out;
}

bool report(int criterion, const std::string& suffix, bool pass,
            const std::string& detail) {
  std::cout << "CRITERION " << criterion << suffix << ": "
            << (pass ? "PASS" : "FAIL") << " - " << detail << "\n";
  return pass;
}

// ---------------------------------------------------------------------------

bool criterion1() {
  Timer timer;
  auto corpus = sat_corpus();
  int checked = 0;
  for (const auto& f : corpus) {
    bool sat = solve_dpll(f).sat;
    ReductionOutput red = build_gphi_unweighted(f);
    auto ds = solve_min_dominating_set(red.graph);
    if (!ds) return report(1, "", false, "solver returned infeasible");
    Rat budget = *red.budget;
    if (Rat(ds->optimum) < budget)
      return report(1, "", false, "min-DS fell below n+t");
    if ((Rat(ds->optimum) <= budget) != sat)
      return report(1, "", false, "iff violated on a corpus formula");
    ++checked;
  }
  double secs = timer.seconds();
  bool in_time = secs < 600.0;
  return report(1, "", checked == 200 && in_time,
                "unweighted iff-lemma " + std::to_string(checked) + "/200 in " +
                    std::to_string(secs) + "s (limit 600s)");
}

bool criterion2() {
  Timer timer;
  auto corpus = sat_corpus();
  int checked = 0;
  for (const auto& f : corpus) {
    bool sat = solve_dpll(f).sat;
    ReductionOutput red = build_gphi_weighted(f);
    auto wds = solve_min_weight_dominating_set(red.graph);
    if (!wds) return report(2, "", false, "no finite dominating set found");
    Rat budget = *red.budget;
    if (wds->optimum < budget)
      return report(2, "", false, "min-weight-DS fell below n+t");
    if ((wds->optimum == budget) != sat)
      return report(2, "", false, "iff violated on a corpus formula");
    ++checked;
  }
  double secs = timer.seconds();
  bool in_time = secs < 900.0;
  return report(2, "", checked == 200 && in_time,
                "weighted iff-lemma " + std::to_string(checked) + "/200 in " +
                    std::to_string(secs) + "s (limit 900s)");
}

bool criterion3() {
  Timer timer;
  // Pinned instance: the running 4-variable example formula.
  CnfFormula example = parse_dimacs(
      "p cnf 4 4\n1 -2 3 0\n4 -1 2 0\n-2 -4 0\n-3 -2 4 0\n");
  Scene uw = realize_unweighted_3d(example);
  if (uw.balls.size() != 60 || uw.params.at("k") != Rat(15) ||
      uw.params.at("h") != Rat(3380))
    return report(3, "", false, "pinned unweighted instance values wrong");
  Scene w = realize_weighted_unit(example);
  if (w.balls.size() != 62 || w.params.at("k") != Rat(15))
    return report(3, "", false, "pinned weighted instance values wrong");

  auto corpus = sat_corpus();
  int checked = 0;
  for (const auto& f : corpus) {
    try {
      if (!verify_realization(realize_unweighted_3d(f)).matches)
        return report(3, "", false, "unweighted scene mismatch");
      if (!verify_realization(realize_weighted_unit(f)).matches)
        return report(3, "", false, "weighted scene mismatch");
    } catch (const RealizationError&) {
      return report(3, "", false, "realization rejected by its own verifier");
    }
    ++checked;
  }
  return report(3, "", checked == 200,
                "exact realization certification " + std::to_string(checked) +
                    "/200 (zero tolerance) in " +
                    std::to_string(timer.seconds()) + "s");
}

// Stated census: exactly n + 3t tangent pairs per unweighted scene. The
// exact classifier counts n + t: the (l1,l2) and (l1,variable) contacts
// share a single point on the witness lines but their interiors overlap, so
// they classify as Overlap, not Tangent. The check below asserts the stated
// value verbatim and therefore fails; the measured census is printed.
bool criterion4() {
  auto corpus = sat_corpus();
  int stated_hits = 0, measured_n_plus_t = 0;
  for (const auto& f : corpus) {
    ReductionOutput red = build_gphi_unweighted(f);
    RealizationReport rep = verify_realization(realize_unweighted_3d(f));
    std::size_t census = rep.tangent_pairs.size();
    if (census == static_cast<std::size_t>(red.n + 3 * red.t)) ++stated_hits;
    if (census == static_cast<std::size_t>(red.n + red.t))
      ++measured_n_plus_t;
  }
  bool pass = stated_hits == 200;
  report(4, "", pass,
         "tangency census == n + 3t on " + std::to_string(stated_hits) +
             "/200 scenes");
  std::cout << "  measured census equals n + t on "
            << measured_n_plus_t
            << "/200 scenes (variable pairs + l2-l3 pairs; the l1 contacts "
               "overlap)\n";
  return pass;
}

bool criterion5() {
  Timer timer;
  auto graphs = graph_corpus(100, 70000, 2, 8);
  int checked = 0;
  for (const auto& g : graphs) {
    ReductionOutput red = build_split_double_cover(g);
    int ds_g = solve_min_dominating_set(g)->optimum;
    int ds_gp = solve_min_dominating_set(red.graph)->optimum;
    auto cds_gp = solve_min_connected_dominating_set(red.graph);
    if (!cds_gp) return report(5, "", false, "split cover disconnected");
    std::vector<int> terms;
    for (const auto& t : red.terminals)
      terms.push_back(*red.graph.find_label(t));
    for (int k = 0; k <= g.size(); ++k) {
      bool want = ds_g <= k;
      if ((ds_gp <= k) != want)
        return report(5, "", false, "DS equivalence violated");
      if ((cds_gp->optimum <= k) != want)
        return report(5, "", false, "CDS equivalence violated");
      if (solve_steiner_tree(red.graph, terms, k).has_value() != want)
        return report(5, "", false, "Steiner equivalence violated");
    }
    ++checked;
  }
  double secs = timer.seconds();
  return report(5, "", checked == 100 && secs < 600.0,
                "split equivalences " + std::to_string(checked) + "/100 in " +
                    std::to_string(secs) + "s (limit 600s)");
}

bool criterion6() {
  Timer timer;
  auto graphs = graph_corpus(50, 81000, 3, 8);
  int checked = 0;
  for (const auto& g : graphs) {
    Scene s;
    try {
      s = realize_split_planar(g, Rat(1, 10));
    } catch (const RealizationError&) {
      return report(6, "", false, "planar realization failed verification");
    }
    if (!verify_realization(s).matches)
      return report(6, "", false, "planar scene mismatch");
    for (const auto& o : s.objects)
      if (fatness_lower_bound(o) < Rat(9, 10))
        return report(6, "", false, "fatness bound below 9/10");
    ++checked;
  }
  return report(6, "", checked == 50,
                "planar realization + fatness >= 9/10 on " +
                    std::to_string(checked) + "/50 graphs in " +
                    std::to_string(timer.seconds()) + "s");
}

bool criterion7() {
  Timer timer;
  int graphs_checked = 0;
  // split covers (<= 16 vertices) plus their source graphs
  auto graphs = graph_corpus(60, 70000, 2, 8);
  std::vector<LabeledGraph> corpus;
  for (const auto& g : graphs) {
    corpus.push_back(g);
    corpus.push_back(build_split_double_cover(g).graph);
  }
  // weighted variants with occasional infinite weights
  testsupport::Rng wrng(83411);
  for (int i = 0; i < 40; ++i) {
    LabeledGraph g = testsupport::random_graph(wrng, 2 + wrng.below(9),
                                               25 + wrng.below(55));
    for (auto& v : g.vertices)
      v.weight = wrng.below(4) == 0
                     ? Weight::inf()
                     : Weight::finite(wrng.positive_rational(9, 4));
    corpus.push_back(g);
  }
  testsupport::Rng trng(83777);
  for (const auto& g : corpus) {
    if (g.size() > 16) return report(7, "", false, "corpus graph too large");
    auto ds = solve_min_dominating_set(g);
    if (!ds || ds->optimum != testsupport::ds_bruteforce(g))
      return report(7, "", false, "DS optimum mismatch");
    auto wds = solve_min_weight_dominating_set(g);
    auto wds_oracle = testsupport::wds_bruteforce(g);
    if (wds.has_value() != wds_oracle.has_value() ||
        (wds && wds->optimum != *wds_oracle))
      return report(7, "", false, "WDS optimum mismatch");
    auto cds = solve_min_connected_dominating_set(g);
    auto cds_oracle =
        g.connected() ? testsupport::cds_bruteforce(g) : std::nullopt;
    if (cds.has_value() != cds_oracle.has_value() ||
        (cds && cds->optimum != *cds_oracle))
      return report(7, "", false, "CDS optimum mismatch");
    std::vector<int> terms;
    for (int v = 0; v < g.size(); ++v)
      if (trng.below(3) == 0) terms.push_back(v);
    if (terms.empty()) terms.push_back(0);
    int k = trng.below(g.size() + 1);
    if (solve_steiner_tree(g, terms, k).has_value() !=
        testsupport::steiner_bruteforce(g, terms, k))
      return report(7, "", false, "Steiner decision mismatch");
    ++graphs_checked;
  }
  return report(7, "",
                graphs_checked == static_cast<int>(corpus.size()),
                "solver vs brute force on " + std::to_string(graphs_checked) +
                    " graphs (<= 16 vertices), zero mismatches, in " +
                    std::to_string(timer.seconds()) + "s");
}

bool criterion8() {
  Timer timer;
  testsupport::Rng rng(86543);
  int agreed = 0, skipped = 0;
  for (int it = 0; it < 10000; ++it) {
    Rat a = rng.rational(60, 25), b = rng.rational(60, 25);
    Rat q = rng.positive_rational(60, 25);
    int got;
    Big value;
    if (it % 2 == 0) {
      value = testsupport::eval_single_radical(a, b, q);
      got = sign_single_radical(a, b, q);
    } else {
      Rat c = rng.rational(60, 25);
      Rat v = rng.positive_rational(60, 25);
      value = testsupport::eval_two_radicals(a, b, q, c, v);
      got = sign_two_radicals(a, b, q, c, v);
    }
    if (abs(value) <= Big("1e-20")) {
      ++skipped;
      continue;
    }
    int expect = value > 0 ? 1 : -1;
    if (got != expect)
      return report(8, "", false, "sign disagreement with numeric oracle");
    ++agreed;
  }
  // designed tangencies answer exactly zero
  int zeros = 0;
  auto corpus = sat_corpus(12);
  for (const auto& f : corpus) {
    for (Scene s : {realize_unweighted_3d(f), realize_weighted_unit(f)}) {
      RealizationReport rep = verify_realization(s);
      for (const auto& [la, lb] : rep.tangent_pairs) {
        const Ball* pa = nullptr;
        const Ball* pb = nullptr;
        for (const auto& b : s.balls) {
          if (b.label == la) pa = &b;
          if (b.label == lb) pb = &b;
        }
        RadExpr d2 = center_dist_sq(*pa, *pb);
        int sign = sign_two_radicals(d2.a - pa->radius_sq - pb->radius_sq,
                                     d2.b, d2.q, Rat(-2),
                                     pa->radius_sq * pb->radius_sq);
        if (sign != 0)
          return report(8, "", false, "designed tangency not exactly zero");
        ++zeros;
      }
    }
  }
  return report(8, "", agreed + skipped == 10000,
                std::to_string(agreed) + "/10000 random queries agree (" +
                    std::to_string(skipped) + " below 1e-20 skipped); " +
                    std::to_string(zeros) +
                    " designed tangencies exactly zero; " +
                    std::to_string(timer.seconds()) + "s");
}

struct MutationStats {
  int edge_flips = 0, edge_total = 0;
  int radius_flips = 0, radius_total = 0;
};

MutationStats mutate_scene(const Scene& base, std::uint64_t seed,
                           bool radius_mutations) {
  MutationStats st;
  std::mt19937_64 rng(seed);
  // 10 edge removals from the expected graph
  for (int i = 0; i < 10; ++i) {
    Scene s = base;
    if (s.expected.edges.empty()) break;
    auto it = s.expected.edges.begin();
    std::advance(it, rng() % s.expected.edges.size());
    s.expected.edges.erase(it);
    ++st.edge_total;
    if (!verify_realization(s).matches) ++st.edge_flips;
  }
  if (!radius_mutations) return st;
  // 10 radius_sq perturbations by +1/10^6
  for (int i = 0; i < 10; ++i) {
    Scene s = base;
    if (s.balls.empty()) break;
    std::size_t idx = rng() % s.balls.size();
    s.balls[idx].radius_sq += Rat(1, 1000000);
    ++st.radius_total;
    if (!verify_realization(s).matches) ++st.radius_flips;
  }
  return st;
}

std::vector<Scene> mutation_bases() {
  std::vector<Scene> bases;
  CnfFormula f = gen_random_33(5, 91111);
  bases.push_back(realize_unweighted_3d(f));
  bases.push_back(realize_weighted_unit(f));
  testsupport::Rng rng(92222);
  bases.push_back(
      realize_split_planar(testsupport::random_graph(rng, 6, 50), Rat(1, 10)));
  return bases;
}

bool criterion9a() {
  auto bases = mutation_bases();
  const char* names[] = {"unweighted-3d", "weighted-unit", "split-planar"};
  int flips = 0, total = 0;
  std::string detail;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    MutationStats st = mutate_scene(bases[i], 5000 + i, false);
    flips += st.edge_flips;
    total += st.edge_total;
    detail += std::string(names[i]) + " " + std::to_string(st.edge_flips) +
              "/" + std::to_string(st.edge_total) + " ";
  }
  return report(9, "a", flips == total,
                "expected-edge removals flip verification: " + detail);
}

// Stated: any radius_sq + 1/10^6 flips verification. In the all-rational
// unweighted scene every non-edge carries a squared-distance slack around
// 1e-3 or larger and designed tangencies only turn into overlaps (the edge
// set is unchanged), so a 1e-6 perturbation cannot flip it. In the weighted
// scene the slack at wrong-polarity contacts is Theta(eps^2), which such a
// perturbation does cross, except for the C4 layer and the dummies. The
// check asserts the stated behavior verbatim and prints the measured rates.
bool criterion9b() {
  auto bases = mutation_bases();
  const char* names[] = {"unweighted-3d", "weighted-unit", "split-planar"};
  int flips = 0, total = 0;
  std::string detail;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (bases[i].dimension != 3) continue;  // planar objects carry no radius_sq
    MutationStats st = mutate_scene(bases[i], 6000 + i, true);
    flips += st.radius_flips;
    total += st.radius_total;
    detail += std::string(names[i]) + " " + std::to_string(st.radius_flips) +
              "/" + std::to_string(st.radius_total) + " ";
  }
  bool pass = flips == total && total > 0;
  report(9, "b", pass, "radius_sq +1/10^6 mutations flip verification: " + detail);
  if (!pass)
    std::cout << "  (measured: tangencies become overlaps and non-edge "
                 "slacks exceed 1e-6 in the rational scene, so the stated "
                 "flip cannot occur there)\n";
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::string which = "all";
  for (int i = 1; i + 1 < argc + 1; ++i) {
    std::string arg = argv[i] ? argv[i] : "";
    if (arg == "--criterion" && i + 1 < argc) which = argv[i + 1];
  }
  bool ok = true;
  auto want = [&](const std::string& c) { return which == "all" || which == c; };
  try {
    if (want("1")) ok &= criterion1();
    if (want("2")) ok &= criterion2();
    if (want("3")) ok &= criterion3();
    if (want("4")) ok &= criterion4();
    if (want("5")) ok &= criterion5();
    if (want("6")) ok &= criterion6();
    if (want("7")) ok &= criterion7();
    if (want("8")) ok &= criterion8();
    if (want("9a")) ok &= criterion9a();
    if (want("9b")) ok &= criterion9b();
  } catch (const std::exception& e) {
    std::cout << "CRITERION " << which << ": FAIL - exception: " << e.what()
              << "\n";
    return 1;
  }
  return ok ? 0 : 1;
}

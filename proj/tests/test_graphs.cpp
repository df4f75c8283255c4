#include "dsg/graph.hpp"
#include "dsg/solvers.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace dsg;
using testsupport::Rng;

namespace {

LabeledGraph path(int n) {
  LabeledGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("p" + std::to_string(i + 1));
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

LabeledGraph complete(int n) {
  LabeledGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("k" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

LabeledGraph star(int leaves) {
  LabeledGraph g;
  g.add_vertex("center");
  for (int i = 0; i < leaves; ++i) {
    g.add_vertex("leaf" + std::to_string(i + 1));
    g.add_edge(0, i + 1);
  }
  return g;
}

}  // namespace

TEST_CASE("graph model basics") {
  LabeledGraph g;
  int a = g.add_vertex("a"), b = g.add_vertex("b");
  g.add_edge(a, b);
  g.add_edge(b, a);  // dedup
  CHECK(g.num_edges() == 1);
  CHECK(g.has_edge(b, a));
  CHECK_THROWS_AS(g.add_edge(a, a), std::invalid_argument);
  CHECK(weight_from_string("inf").infinite);
  CHECK(weight_from_string("3/2").value == rat(3, 2));
  CHECK(weight_to_string(Weight::one()) == "1/1");
}

TEST_CASE("graph_equal") {
  LabeledGraph k3 = complete(3);
  CHECK(graph_equal(k3, k3).equal());

  LabeledGraph p3;
  for (int i = 0; i < 3; ++i) p3.add_vertex("k" + std::to_string(i + 1));
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  GraphDiff d = graph_equal(k3, p3);
  CHECK_FALSE(d.equal());
  CHECK(d.missing_edges.size() == 1);  // k1-k3 present in K3 only
  CHECK(d.extra_edges.empty());
  CHECK(d.missing_edges[0] == std::pair<std::string, std::string>{"k1", "k3"});

  LabeledGraph renamed = complete(3);
  renamed.vertices[2].label = "zz";
  GraphDiff d2 = graph_equal(k3, renamed);
  CHECK_FALSE(d2.equal());
  CHECK(d2.label_mismatches == std::vector<std::string>{"k3", "zz"});

  LabeledGraph dup;
  dup.add_vertex("x");
  dup.add_vertex("x");
  CHECK_THROWS_AS(graph_equal(dup, dup), std::invalid_argument);
}

TEST_CASE("dominating set solver examples") {
  CHECK(solve_min_dominating_set(complete(3))->optimum == 1);
  CHECK(solve_min_dominating_set(path(4))->optimum == 2);
  CHECK(solve_min_dominating_set(star(5))->optimum == 1);
  // budget decides
  CHECK(solve_min_dominating_set(path(4), 2).has_value());
  CHECK_FALSE(solve_min_dominating_set(path(4), 1).has_value());
}

TEST_CASE("weighted dominating set examples") {
  LabeledGraph g;
  g.add_vertex("u", Weight::finite(rat(5)));
  g.add_vertex("v", Weight::finite(rat(1)));
  g.add_vertex("w", Weight::finite(rat(5)));
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  auto r = solve_min_weight_dominating_set(g);
  REQUIRE(r.has_value());
  CHECK(r->optimum == 1);
  CHECK(r->witness == std::vector<int>{1});

  g.vertices[1].weight = Weight::inf();
  auto r2 = solve_min_weight_dominating_set(g);
  REQUIRE(r2.has_value());
  CHECK(r2->optimum == 10);
  CHECK(r2->witness.size() == 2);

  LabeledGraph lone;
  lone.add_vertex("only", Weight::inf());
  CHECK_FALSE(solve_min_weight_dominating_set(lone).has_value());

  // big-M weights normalize to infinite above the budget
  LabeledGraph bigm;
  bigm.add_vertex("a", Weight::finite(rat(100)));
  bigm.add_vertex("b", Weight::finite(rat(1)));
  bigm.add_edge(0, 1);
  auto r3 = solve_min_weight_dominating_set(bigm, rat(5));
  REQUIRE(r3.has_value());
  CHECK(r3->witness == std::vector<int>{1});
}

TEST_CASE("connected dominating set examples") {
  CHECK(solve_min_connected_dominating_set(complete(3))->optimum == 1);
  auto p4 = solve_min_connected_dominating_set(path(4));
  REQUIRE(p4.has_value());
  CHECK(p4->optimum == 2);
  CHECK(p4->witness == std::vector<int>{1, 2});
  CHECK(solve_min_connected_dominating_set(star(5))->optimum == 1);

  LabeledGraph disc;
  disc.add_vertex("a");
  disc.add_vertex("b");
  CHECK_FALSE(solve_min_connected_dominating_set(disc).has_value());
}

TEST_CASE("steiner tree examples") {
  LabeledGraph s = star(5);
  std::vector<int> leaves{1, 2, 3, 4, 5};
  auto w = solve_steiner_tree(s, leaves, 1);
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<int>{0});

  LabeledGraph p3 = path(3);
  CHECK_FALSE(solve_steiner_tree(p3, {0, 2}, 0).has_value());
  auto w2 = solve_steiner_tree(p3, {0, 2}, 1);
  REQUIRE(w2.has_value());
  CHECK(*w2 == std::vector<int>{1});

  CHECK(solve_steiner_tree(p3, {1}, 0).has_value());  // single terminal
  CHECK_THROWS_AS(solve_steiner_tree(p3, {}, 1), std::invalid_argument);
}

TEST_CASE("solvers agree with brute force on random graphs") {
  Rng rng(404);
  for (int it = 0; it < 120; ++it) {
    int n = 1 + rng.below(9);
    LabeledGraph g = testsupport::random_graph(rng, n, 20 + rng.below(60));

    auto ds = solve_min_dominating_set(g);
    REQUIRE(ds.has_value());
    CHECK(ds->optimum == testsupport::ds_bruteforce(g));
    CHECK(is_dominating_set(g, ds->witness));

    // weighted: random weights, some infinite
    for (auto& v : g.vertices)
      v.weight = rng.below(5) == 0 ? Weight::inf()
                                   : Weight::finite(rng.positive_rational(9, 4));
    auto wds = solve_min_weight_dominating_set(g);
    auto oracle = testsupport::wds_bruteforce(g);
    CHECK(wds.has_value() == oracle.has_value());
    if (wds && oracle) {
      CHECK(wds->optimum == *oracle);
      CHECK(is_dominating_set(g, wds->witness));
      CHECK(set_weight(g, wds->witness) == wds->optimum);
    }

    auto cds = solve_min_connected_dominating_set(g);
    auto cds_oracle = testsupport::cds_bruteforce(g);
    if (!g.connected()) {
      CHECK_FALSE(cds.has_value());
    } else {
      CHECK(cds.has_value() == cds_oracle.has_value());
      if (cds && cds_oracle) {
        CHECK(cds->optimum == *cds_oracle);
        CHECK(is_dominating_set(g, cds->witness));
        CHECK(induced_connected(g, cds->witness));
      }
    }

    if (n >= 2) {
      std::vector<int> terms;
      for (int v = 0; v < n; ++v)
        if (rng.below(3) == 0) terms.push_back(v);
      if (terms.empty()) terms.push_back(0);
      int k = rng.below(n + 1);
      CHECK(solve_steiner_tree(g, terms, k).has_value() ==
            testsupport::steiner_bruteforce(g, terms, k));
    }
  }
}

TEST_CASE("adding an edge never increases the DS optimum") {
  Rng rng(505);
  for (int it = 0; it < 60; ++it) {
    int n = 2 + rng.below(8);
    LabeledGraph g = testsupport::random_graph(rng, n, 40);
    int before = solve_min_dominating_set(g)->optimum;
    int u = rng.below(n), v = rng.below(n);
    if (u == v) continue;
    if (g.has_edge(u, v)) continue;
    g.add_edge(u, v);
    int after = solve_min_dominating_set(g)->optimum;
    CHECK(after <= before);
  }
}

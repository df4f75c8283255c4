// Shared test utilities: independent oracles (high-precision numeric sign
// evaluation, brute-force subset solvers, exhaustive SAT) and seeded random
// generators. These deliberately avoid the code paths they are used to
// check: plain adjacency matrices and mask enumeration, no bitsets, no
// pruning.

#pragma once

#include "dsg/cnf.hpp"
#include "dsg/graph.hpp"
#include "dsg/scene.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <optional>
#include <random>
#include <vector>

namespace testsupport {

using Big = boost::multiprecision::cpp_dec_float_100;

inline Big big_of(const dsg::Rat& r) {
  return Big(r.get_num().get_str()) / Big(r.get_den().get_str());
}

// a + b*sqrt(q) at 100 decimal digits.
inline Big eval_single_radical(const dsg::Rat& a, const dsg::Rat& b,
                               const dsg::Rat& q) {
  return big_of(a) + big_of(b) * sqrt(big_of(q));
}

inline Big eval_two_radicals(const dsg::Rat& a, const dsg::Rat& b,
                             const dsg::Rat& u, const dsg::Rat& c,
                             const dsg::Rat& v) {
  return big_of(a) + big_of(b) * sqrt(big_of(u)) + big_of(c) * sqrt(big_of(v));
}

inline Big eval_radexpr(const dsg::RadExpr& e) {
  return eval_single_radical(e.a, e.b, e.q);
}

// ---- brute-force graph oracles (mask enumeration, n <= ~20) ----

inline std::vector<std::vector<bool>> adjacency_matrix(
    const dsg::LabeledGraph& g) {
  std::vector<std::vector<bool>> adj(g.size(),
                                     std::vector<bool>(g.size(), false));
  for (const auto& [u, v] : g.edges) adj[u][v] = adj[v][u] = true;
  return adj;
}

inline bool mask_dominates(const dsg::LabeledGraph& g,
                           const std::vector<std::vector<bool>>& adj,
                           unsigned mask) {
  for (int v = 0; v < g.size(); ++v) {
    if (mask & (1u << v)) continue;
    bool hit = false;
    for (int u = 0; u < g.size(); ++u)
      if ((mask & (1u << u)) && adj[u][v]) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

inline bool mask_connected(const dsg::LabeledGraph& g,
                           const std::vector<std::vector<bool>>& adj,
                           unsigned mask) {
  if (mask == 0) return false;
  int start = -1;
  for (int v = 0; v < g.size(); ++v)
    if (mask & (1u << v)) {
      start = v;
      break;
    }
  unsigned seen = 1u << start;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int u = 0; u < g.size(); ++u) {
      if (!(seen & (1u << u))) continue;
      for (int v = 0; v < g.size(); ++v)
        if ((mask & (1u << v)) && !(seen & (1u << v)) && adj[u][v]) {
          seen |= 1u << v;
          grew = true;
        }
    }
  }
  return seen == mask;
}

inline int popcount(unsigned x) { return __builtin_popcount(x); }

inline int ds_bruteforce(const dsg::LabeledGraph& g) {
  auto adj = adjacency_matrix(g);
  int best = g.size();
  for (unsigned mask = 0; mask < (1u << g.size()); ++mask)
    if (popcount(mask) < best && mask_dominates(g, adj, mask))
      best = popcount(mask);
  return best;
}

inline std::optional<dsg::Rat> wds_bruteforce(const dsg::LabeledGraph& g) {
  auto adj = adjacency_matrix(g);
  std::optional<dsg::Rat> best;
  for (unsigned mask = 0; mask < (1u << g.size()); ++mask) {
    bool finite = true;
    dsg::Rat w(0);
    for (int v = 0; v < g.size(); ++v)
      if (mask & (1u << v)) {
        if (g.vertices[v].weight.infinite) {
          finite = false;
          break;
        }
        w += g.vertices[v].weight.value;
      }
    if (!finite) continue;
    if (best && w >= *best) continue;
    if (mask_dominates(g, adj, mask)) best = w;
  }
  return best;
}

inline std::optional<int> cds_bruteforce(const dsg::LabeledGraph& g) {
  auto adj = adjacency_matrix(g);
  std::optional<int> best;
  for (unsigned mask = 1; mask < (1u << g.size()); ++mask) {
    if (best && popcount(mask) >= *best) continue;
    if (mask_dominates(g, adj, mask) && mask_connected(g, adj, mask))
      best = popcount(mask);
  }
  return best;
}

inline bool steiner_bruteforce(const dsg::LabeledGraph& g,
                               const std::vector<int>& terminals, int k) {
  auto adj = adjacency_matrix(g);
  unsigned tmask = 0;
  for (int t : terminals) tmask |= 1u << t;
  for (unsigned mask = 0; mask < (1u << g.size()); ++mask) {
    if ((mask & tmask) != tmask) continue;
    if (popcount(mask) - popcount(tmask) > k) continue;
    if (mask_connected(g, adj, mask)) return true;
  }
  return false;
}

// ---- exhaustive SAT oracle ----

inline bool sat_bruteforce(const dsg::CnfFormula& f) {
  for (unsigned mask = 0; mask < (1u << f.num_vars); ++mask) {
    dsg::Assignment a(f.num_vars + 1, false);
    for (int v = 1; v <= f.num_vars; ++v) a[v] = (mask >> (v - 1)) & 1u;
    if (dsg::eval_formula(f, a)) return true;
  }
  return false;
}

// ---- seeded random data ----

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  int below(int m) { return static_cast<int>(eng() % m); }
  dsg::Rat rational(int max_num = 50, int max_den = 20) {
    int num = below(2 * max_num + 1) - max_num;
    int den = 1 + below(max_den);
    return dsg::rat(num, den);
  }
  dsg::Rat positive_rational(int max_num = 50, int max_den = 20) {
    int num = 1 + below(max_num);
    int den = 1 + below(max_den);
    return dsg::rat(num, den);
  }
};

inline dsg::LabeledGraph random_graph(Rng& rng, int n, int percent = 50) {
  dsg::LabeledGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.below(100) < percent) g.add_edge(i, j);
  return g;
}

}  // namespace testsupport

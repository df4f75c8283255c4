#include "dsg/solvers.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <functional>
#include <numeric>

namespace dsg {

using Bits = boost::dynamic_bitset<>;

bool is_dominating_set(const LabeledGraph& g, const std::vector<int>& set) {
  std::vector<bool> dominated(g.size(), false);
  auto adj = g.adjacency();
  for (int v : set) {
    dominated[v] = true;
    for (int w : adj[v]) dominated[w] = true;
  }
  return std::all_of(dominated.begin(), dominated.end(),
                     [](bool b) { return b; });
}

bool induced_connected(const LabeledGraph& g, const std::vector<int>& set) {
  if (set.empty()) return false;
  std::vector<bool> in(g.size(), false);
  for (int v : set) in[v] = true;
  auto adj = g.adjacency();
  std::vector<int> stack{set[0]};
  std::vector<bool> seen(g.size(), false);
  seen[set[0]] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u])
      if (in[w] && !seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == set.size();
}

Rat set_weight(const LabeledGraph& g, const std::vector<int>& set) {
  Rat total(0);
  for (int v : set) {
    if (g.vertices[v].weight.infinite)
      throw std::invalid_argument("set_weight over an infinite-weight vertex");
    total += g.vertices[v].weight.value;
  }
  return total;
}

namespace {

// Shared branch-and-bound engine for DS/WDS. DS runs it with unit weights.
struct DomEngine {
  int n;
  std::vector<Bits> nbhd;  // closed neighborhoods
  std::vector<Rat> weight;
  Bits candidate;
  std::vector<int> pack_order;  // by closed-neighborhood size, ascending

  std::optional<Rat> budget;
  bool decide_only = false;
  bool weights_integral = true;
  Bits zero_weight;

  bool have_best = false;
  Rat best_cost;
  std::vector<int> best_set;
  std::uint64_t explored = 0;
  bool stop = false;

  DomEngine(const LabeledGraph& g, std::optional<Rat> budget_in,
            bool weighted)
      : n(g.size()), budget(budget_in) {
    nbhd.assign(n, Bits(n));
    for (int v = 0; v < n; ++v) nbhd[v].set(v);
    for (const auto& [u, v] : g.edges) {
      nbhd[u].set(v);
      nbhd[v].set(u);
    }
    weight.resize(n, Rat(1));
    candidate.resize(n);
    candidate.set();
    zero_weight.resize(n);
    if (weighted) {
      for (int v = 0; v < n; ++v) {
        const Weight& w = g.vertices[v].weight;
        bool inf = w.infinite || (budget && w.value > *budget);
        if (inf)
          candidate.reset(v);
        else
          weight[v] = w.value;
      }
    }
    for (int v = 0; v < n; ++v) {
      if (candidate.test(v) && weight[v].get_den() != 1)
        weights_integral = false;
      if (candidate.test(v) && sgn(weight[v]) == 0) zero_weight.set(v);
    }
    exclude_dominated_candidates();
    zero_weight &= candidate;
    pack_order.resize(n);
    std::iota(pack_order.begin(), pack_order.end(), 0);
    std::sort(pack_order.begin(), pack_order.end(), [&](int a, int b) {
      return nbhd[a].count() < nbhd[b].count();
    });
  }

  // Candidate u is dropped when some v covers at least as much for at most
  // the same weight; ties broken by strict containment then index, which
  // keeps exactly one representative per equivalence class.
  void exclude_dominated_candidates() {
    Bits keep = candidate;
    for (int u = 0; u < n; ++u) {
      if (!candidate.test(u)) continue;
      for (int v = 0; v < n && keep.test(u); ++v) {
        if (v == u || !candidate.test(v)) continue;
        if (!nbhd[u].is_subset_of(nbhd[v])) continue;
        if (weight[v] > weight[u]) continue;
        bool strictly_better =
            weight[v] < weight[u] || nbhd[u] != nbhd[v] || v < u;
        if (strictly_better) keep.reset(u);
      }
    }
    candidate = keep;
  }

  // Undominated vertices whose candidate-dominator sets are pairwise
  // disjoint each need their own pick; the sum of the cheapest candidate per
  // packed set is a valid lower bound. claimed is the union of the packed
  // candidate sets. Returns false when some vertex has no candidate at all.
  bool lower_bound(const Bits& dominated, const Bits& avail, Rat& lb,
                   Bits& claimed) const {
    lb = 0;
    claimed.reset();
    for (int u : pack_order) {
      if (dominated.test(u)) continue;
      Bits cands = nbhd[u] & avail;
      if (cands.none()) return false;
      if ((cands & claimed).any()) continue;
      Rat cheapest = weight[cands.find_first()];
      for (auto v = cands.find_first(); v != Bits::npos;
           v = cands.find_next(v))
        cheapest = std::min(cheapest, weight[v]);
      lb += cheapest;
      claimed |= cands;
    }
    return true;
  }

  bool bound_exceeded(const Rat& value) const {
    if (have_best && value >= best_cost) return true;
    if (budget && value > *budget) return true;
    return false;
  }

  // Smallest total any acceptable completion may reach: the budget, or one
  // less than the incumbent when all candidate weights are integers.
  std::optional<Rat> completion_cap() const {
    std::optional<Rat> cap;
    if (budget) cap = *budget;
    if (have_best && weights_integral) {
      Rat c = best_cost - 1;
      if (!cap || c < *cap) cap = c;
    }
    return cap;
  }

  void record(const Rat& cost, const std::vector<int>& chosen) {
    if (have_best && cost >= best_cost) return;
    best_cost = cost;
    best_set = chosen;
    have_best = true;
    if (decide_only && budget && best_cost <= *budget) stop = true;
  }

  void recurse(Bits dominated, Bits avail, Rat cost,
               std::vector<int>& chosen) {
    if (stop) return;
    ++explored;
    if (dominated.all()) {
      record(cost, chosen);
      return;
    }
    Rat lb;
    Bits claimed(n);
    if (!lower_bound(dominated, avail, lb, claimed)) return;
    if (bound_exceeded(cost + lb)) return;
    // When the bound is exactly tight, every packed set takes exactly one
    // pick and any pick of positive weight outside the packed sets would
    // break the cap, so the candidate pool shrinks to the claimed sets plus
    // the free vertices. This is what lets an infeasible-budget search
    // propagate instead of enumerating all tight completions.
    if (auto cap = completion_cap(); cap && cost + lb == *cap)
      avail &= claimed | zero_weight;

    // Branch on an undominated vertex with the fewest candidate dominators.
    int branch_v = -1;
    std::size_t branch_count = 0;
    for (int u = 0; u < n; ++u) {
      if (dominated.test(u)) continue;
      std::size_t c = (nbhd[u] & avail).count();
      if (branch_v < 0 || c < branch_count) {
        branch_v = u;
        branch_count = c;
        if (c <= 1) break;
      }
    }
    Bits cands = nbhd[branch_v] & avail;
    std::vector<int> order;
    for (auto v = cands.find_first(); v != Bits::npos; v = cands.find_next(v))
      order.push_back(static_cast<int>(v));
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      std::size_t ca = (nbhd[a] & ~dominated).count();
      std::size_t cb = (nbhd[b] & ~dominated).count();
      if (ca != cb) return ca > cb;
      if (weight[a] != weight[b]) return weight[a] < weight[b];
      return a < b;
    });
    Bits child_avail = avail;
    for (int v : order) {
      chosen.push_back(v);
      recurse(dominated | nbhd[v], child_avail, cost + weight[v], chosen);
      chosen.pop_back();
      if (stop) return;
      // Subsequent branches exclude v so the subtrees stay disjoint.
      child_avail.reset(v);
    }
  }

  bool run() {
    Bits dominated(n);
    std::vector<int> chosen;
    recurse(dominated, candidate, Rat(0), chosen);
    if (!have_best) return false;
    if (budget && best_cost > *budget) return false;
    return true;
  }
};

}  // namespace

std::optional<DsResult> solve_min_dominating_set(const LabeledGraph& g,
                                                 std::optional<int> budget) {
  std::optional<Rat> b;
  if (budget) b = Rat(*budget);
  DomEngine eng(g, b, /*weighted=*/false);
  eng.decide_only = budget.has_value();
  if (!eng.run()) return std::nullopt;
  if (!is_dominating_set(g, eng.best_set))
    throw std::logic_error("dominating-set witness failed feasibility check");
  DsResult res;
  res.optimum = static_cast<int>(eng.best_set.size());
  res.witness = eng.best_set;
  res.explored = eng.explored;
  return res;
}

std::optional<WdsResult> solve_min_weight_dominating_set(
    const LabeledGraph& g, std::optional<Rat> budget) {
  DomEngine eng(g, budget, /*weighted=*/true);
  eng.decide_only = budget.has_value();
  if (!eng.run()) return std::nullopt;
  if (!is_dominating_set(g, eng.best_set))
    throw std::logic_error("dominating-set witness failed feasibility check");
  WdsResult res;
  res.optimum = set_weight(g, eng.best_set);
  res.witness = eng.best_set;
  res.explored = eng.explored;
  return res;
}

namespace {

bool combos(int n, int k, int start, std::vector<int>& cur,
            const std::function<bool(const std::vector<int>&)>& accept) {
  if (static_cast<int>(cur.size()) == k) return accept(cur);
  for (int v = start; v <= n - (k - static_cast<int>(cur.size())); ++v) {
    cur.push_back(v);
    if (combos(n, k, v + 1, cur, accept)) return true;
    cur.pop_back();
  }
  return false;
}

}  // namespace

std::optional<DsResult> solve_min_connected_dominating_set(
    const LabeledGraph& g, std::optional<int> budget) {
  if (g.size() == 0) return DsResult{0, {}, 0};
  if (!g.connected()) return std::nullopt;
  int kmax = budget ? std::min(*budget, g.size()) : g.size();
  std::uint64_t explored = 0;
  for (int k = 1; k <= kmax; ++k) {
    std::vector<int> cur;
    std::vector<int> found;
    bool ok = combos(g.size(), k, 0, cur, [&](const std::vector<int>& s) {
      ++explored;
      if (!is_dominating_set(g, s)) return false;
      if (!induced_connected(g, s)) return false;
      found = s;
      return true;
    });
    if (ok) {
      DsResult res;
      res.optimum = k;
      res.witness = found;
      res.explored = explored;
      return res;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> solve_steiner_tree(
    const LabeledGraph& g, const std::vector<int>& terminals, int k) {
  if (terminals.empty())
    throw std::invalid_argument("Steiner tree needs a nonempty terminal set");
  if (k < 0) throw std::invalid_argument("negative Steiner budget");
  if (induced_connected(g, terminals)) return std::vector<int>{};
  std::vector<int> pool;
  std::vector<bool> is_term(g.size(), false);
  for (int t : terminals) is_term[t] = true;
  for (int v = 0; v < g.size(); ++v)
    if (!is_term[v]) pool.push_back(v);
  for (int size = 1; size <= std::min<int>(k, pool.size()); ++size) {
    std::vector<int> cur;
    std::vector<int> found;
    bool ok = combos(static_cast<int>(pool.size()), size, 0, cur,
                     [&](const std::vector<int>& idxs) {
                       std::vector<int> joint = terminals;
                       for (int i : idxs) joint.push_back(pool[i]);
                       if (!induced_connected(g, joint)) return false;
                       for (int i : idxs) found.push_back(pool[i]);
                       return true;
                     });
    if (ok) return found;
  }
  return std::nullopt;
}

}  // namespace dsg

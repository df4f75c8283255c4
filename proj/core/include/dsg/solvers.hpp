// Exact desk-scale solvers: branch-and-bound (weighted) dominating set,
// connected dominating set and Steiner tree decision by bounded enumeration.

#pragma once

#include "dsg/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace dsg {

struct DsResult {
  int optimum = 0;
  std::vector<int> witness;
  std::uint64_t explored = 0;
};

struct WdsResult {
  Rat optimum;
  std::vector<int> witness;
  std::uint64_t explored = 0;
};

// Feasibility checks used both by callers and by the solvers themselves
// before they return a witness. Domination is closed-neighborhood: a vertex
// dominates itself.
bool is_dominating_set(const LabeledGraph& g, const std::vector<int>& set);
bool induced_connected(const LabeledGraph& g, const std::vector<int>& set);
Rat set_weight(const LabeledGraph& g, const std::vector<int>& set);

// Minimum dominating set by branch and bound, branching over the closed
// neighborhood of an undominated vertex with the fewest candidate
// dominators, pruned by the incumbent and a disjoint-neighborhood lower
// bound. Without a budget the result is the exact optimum. With a budget the
// search stops at the first witness within budget and returns it (decide
// semantics); nullopt means no dominating set of size <= budget exists.
std::optional<DsResult> solve_min_dominating_set(
    const LabeledGraph& g, std::optional<int> budget = std::nullopt);

// Weighted variant. Vertices of infinite weight are never selected. With a
// budget, weights strictly above the budget are normalized to infinite
// (accepts the big-M encoding of forbidden vertices). nullopt means no
// finite-weight dominating set within the budget (or at all) exists.
std::optional<WdsResult> solve_min_weight_dominating_set(
    const LabeledGraph& g, std::optional<Rat> budget = std::nullopt);

// Exact minimum dominating set whose induced subgraph is connected, by
// enumeration in increasing cardinality. nullopt when g is disconnected or
// the budget is infeasible.
std::optional<DsResult> solve_min_connected_dominating_set(
    const LabeledGraph& g, std::optional<int> budget = std::nullopt);

// Decides whether some W with |W| <= k makes terminals+W induce a connected
// subgraph; returns the witness W. Terminals must be nonempty.
std::optional<std::vector<int>> solve_steiner_tree(
    const LabeledGraph& g, const std::vector<int>& terminals, int k);

}  // namespace dsg

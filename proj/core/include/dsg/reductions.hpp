// Gadget-graph builders for (3,3)-SAT instances, the split-graph double
// cover, and their exact geometric realizations (balls, unit balls, planar
// fat objects). Every realizer verifies its own scene before returning.

#pragma once

#include "dsg/cnf.hpp"
#include "dsg/graph.hpp"
#include "dsg/scene.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dsg {

enum class TargetKind {
  DominatingSet,
  WeightedDominatingSet,
  ConnectedDominatingSet,
  SteinerTree,
};

std::string target_kind_name(TargetKind k);

struct ReductionOutput {
  LabeledGraph graph;
  TargetKind target = TargetKind::DominatingSet;
  std::optional<Rat> budget;            // k = n+t for the SAT gadgets
  std::vector<std::string> terminals;   // Steiner terminal labels
  int n = 0;  // occurring variables
  int t = 0;  // literal occurrences
  int m = 0;  // clauses
};

struct RealizationError : std::runtime_error {
  RealizationReport report;
  explicit RealizationError(RealizationReport rep)
      : std::runtime_error("realization failed exact verification (" +
                           std::to_string(rep.diff.missing_edges.size()) +
                           " missing, " +
                           std::to_string(rep.diff.extra_edges.size()) +
                           " extra edges)"),
        report(std::move(rep)) {}
};

// Unweighted dominating-set gadget graph: a triangle per variable
// (x_T, x_F, ear), a 3-path plus ear per literal occurrence, one vertex per
// clause, wiring (c_k, l_i^3) and (x^T/F, l_i^1), and a clique on the l_i^1
// layer. Budget k = n + t; |V| = 3n + 4t + m. Requires clause sizes 2 or 3.
ReductionOutput build_gphi_unweighted(const CnfFormula& f);

// Weighted variant on seven cliques C1..C7 plus two weight-0 dummies; C1,
// C3, C5, C7 carry infinite weight. Budget weight n + t;
// |V| = 3n + 4t + m + 2.
ReductionOutput build_gphi_weighted(const CnfFormula& f);

// Split-graph double cover G' on 2n vertices: A a clique, B independent,
// (a_i, b_j) iff i = j or (v_i, v_j) is an edge. Dominating-set budgets
// carry over unchanged; the Steiner instance is (G', T = B, k).
ReductionOutput build_split_double_cover(const LabeledGraph& g,
                                         std::optional<Rat> budget = {});

// Exact 3D ball scene realizing the unweighted gadget graph. All data is
// rational; h = 20*N^2 with N = max(3n+1, (11/10)t).
Scene realize_unweighted_3d(const CnfFormula& f);

struct WeightedUnitParams {
  Rat eps;
  Rat angle_scale;      // tangent-half-angle parameter step per literal
  Rat contact_margin;   // slack applied to the radical-coordinate contacts
  bool printed_two_clause_z = false;  // z = -(i+1/2)eps instead of 2-(i+1/2)eps

  // Parameters certified by the exact verifier across the strict corpus:
  // eps = 1/(64 t n^2), angle_scale = min(1/(4n), 1/(2t)), margin 0.
  static WeightedUnitParams certified(int n, int t);
  // As printed in the source construction: eps = 1/(3 t n^2) and angular
  // step ~ 1/n (tangent-half-angle 1/(2n)). Fails verification once the
  // literal layer spreads past the unit-distance cap; kept for comparison.
  static WeightedUnitParams paper(int n, int t);
};

// Unit-ball scene (all radius_sq = 1/4) realizing the weighted gadget
// graph. Cylindrical layout: literal columns on the unit cylinder at
// rationalized angles, variable and clause columns on the axis and at
// angle pi with one square-root x-coordinate. Throws RealizationError with
// the diff if the parameters fail exact verification.
Scene realize_weighted_unit(const CnfFormula& f,
                            std::optional<WeightedUnitParams> params = {});

// Planar fat-object scene for the split double cover: disks of radius 1/n
// tangent to the unit circle from outside, hulls of the inner circle of
// radius 1-eps plus generator points. Requires |V(g)| >= 3 and eps in (0,1).
Scene realize_split_planar(const LabeledGraph& g, const Rat& eps);

}  // namespace dsg

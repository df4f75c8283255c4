// Exact 3D ball primitives, pair classification, the skew-line tangent-ball
// construction, scenes and intersection-graph extraction.

#pragma once

#include "dsg/exact.hpp"
#include "dsg/graph.hpp"
#include "dsg/planar.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace dsg {

enum class PairClass { Disjoint, Tangent, Overlap };

std::string pair_class_name(PairClass c);

struct Ball {
  std::string label;
  std::array<Coord, 3> center;
  Rat radius_sq;  // radius is sqrt(radius_sq), never stored rounded
};

// Squared center distance as a single-radical expression. Requires any
// PureSqrt coordinates of the two centers to share an axis.
RadExpr center_dist_sq(const Ball& a, const Ball& b);

// Exact classification of two closed balls: squared center distance against
// rsq_a + rsq_b + 2*sqrt(rsq_a*rsq_b). Tangent means exact equality.
PairClass balls_classify(const Ball& a, const Ball& b);

// The unique ball tangent to the x-axis at (x,0,0) and to the line
// {(0,s,h)} at (0,y,h): center (x, y, z) with z = (h^2+x^2-y^2)/(2h) and
// radius_sq = y^2 + z^2. Both tangencies are re-verified before returning.
// h = 0 is rejected (the lines would intersect).
Ball tangent_ball_skew_lines(const Rat& x, const Rat& y, const Rat& h);

struct Scene {
  int dimension = 3;  // 2 or 3
  std::vector<Ball> balls;             // dimension 3
  std::vector<PlanarObject> objects;   // dimension 2
  std::vector<Pt2> circle_points;      // dimension 2: shared point table
  std::map<std::string, Rat> params;
  LabeledGraph expected;

  std::size_t object_count() const {
    return dimension == 3 ? balls.size() : objects.size();
  }
};

struct IntersectionResult {
  LabeledGraph graph;
  std::vector<std::pair<std::string, std::string>> tangent_pairs;
};

// Vertex per object (same labels); edge iff the exact pair classification is
// Tangent or Overlap. Also reports the list of exactly tangent pairs.
IntersectionResult intersection_graph(const Scene& s);

struct RealizationReport {
  bool matches = false;
  GraphDiff diff;  // relative to the expected graph
  std::vector<std::pair<std::string, std::string>> tangent_pairs;
  std::map<std::string, Rat> params;
};

// Computes the intersection graph and compares it (by label) with the
// scene's expected graph; matches iff the edge sets are identical.
RealizationReport verify_realization(const Scene& s);

}  // namespace dsg

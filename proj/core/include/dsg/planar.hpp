// Planar objects for the split-graph realization: outer disks and convex
// hulls of an inner circle plus unit-circle generator points. All predicates
// are exact; hull boundaries involve at most the radical sqrt(1 - rho^2).

#pragma once

#include "dsg/exact.hpp"

#include <string>
#include <vector>

namespace dsg {

enum class PairClass;

struct Pt2 {
  Rat x, y;
  bool operator==(const Pt2& o) const { return x == o.x && y == o.y; }
};

struct PlanarObject {
  enum class Kind { Disk, Hull };
  Kind kind = Kind::Disk;
  std::string label;

  // Disk
  Pt2 center;
  Rat radius;

  // Hull: convex hull of the circle of inner_radius around the origin and
  // the listed unit-circle points (indices into the scene's point table).
  Rat inner_radius;
  std::vector<int> generators;

  static PlanarObject disk(std::string label, Pt2 center, Rat radius);
  static PlanarObject hull(std::string label, Rat inner_radius,
                           std::vector<int> generators);
};

// Exact classification of two planar objects. Disk-disk compares squared
// center distance with the squared radius sum. Hull-hull is always Overlap
// (both contain the inner disk). Hull-disk decides containment of the disk
// center and otherwise compares the exact disk-to-hull distance feature by
// feature (generator vertices, chord edges, tangent edges, free arcs).
PairClass planar_classify(const PlanarObject& a, const PlanarObject& b,
                          const std::vector<Pt2>& circle_points);

// Certified lower bound on fatness rho_in/rho_out: 1 for disks,
// inner_radius for hulls (inner circle inside, unit circle outside).
Rat fatness_lower_bound(const PlanarObject& o);

}  // namespace dsg

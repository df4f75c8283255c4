#include "dsg/scene.hpp"

namespace dsg {

std::string pair_class_name(PairClass c) {
  switch (c) {
    case PairClass::Disjoint: return "disjoint";
    case PairClass::Tangent: return "tangent";
    case PairClass::Overlap: return "overlap";
  }
  return "?";
}

RadExpr center_dist_sq(const Ball& a, const Ball& b) {
  RadExpr total = RadExpr::rational(Rat(0));
  for (int axis = 0; axis < 3; ++axis) {
    RadExpr d = Coord::diff_sq(a.center[axis], b.center[axis]);
    try {
      total = total.add(d);
    } catch (const UnsupportedFormError&) {
      throw UnsupportedFormError(
          "balls '" + a.label + "' and '" + b.label +
          "' carry square-root coordinates on different axes");
    }
  }
  return total;
}

PairClass balls_classify(const Ball& a, const Ball& b) {
  RadExpr d2 = center_dist_sq(a, b);
  // d2 - (r_a + r_b)^2 = (d2.a - rsq_a - rsq_b) + d2.b*sqrt(d2.q)
  //                      - 2*sqrt(rsq_a * rsq_b)
  int s = sign_two_radicals(d2.a - a.radius_sq - b.radius_sq, d2.b, d2.q,
                            Rat(-2), a.radius_sq * b.radius_sq);
  if (s > 0) return PairClass::Disjoint;
  if (s == 0) return PairClass::Tangent;
  return PairClass::Overlap;
}

Ball tangent_ball_skew_lines(const Rat& x, const Rat& y, const Rat& h) {
  if (sgn(h) == 0)
    throw std::domain_error(
        "tangent_ball_skew_lines: h = 0 makes the lines intersect");
  Rat z = (h * h + x * x - y * y) / (2 * h);
  Ball b;
  b.center = {Coord::of(x), Coord::of(y), Coord::of(z)};
  b.radius_sq = y * y + z * z;
  // Tangency to the x-axis at (x,0,0): the foot is the orthogonal
  // projection, and its squared distance to the center must equal radius_sq.
  if (y * y + z * z != b.radius_sq)
    throw std::logic_error("skew tangent ball: first tangency violated");
  // Tangency to {(0,s,h)} at (0,y,h).
  if (x * x + (z - h) * (z - h) != b.radius_sq)
    throw std::logic_error("skew tangent ball: second tangency violated");
  return b;
}

namespace {

PairClass classify_pair(const Scene& s, std::size_t i, std::size_t j) {
  if (s.dimension == 3) return balls_classify(s.balls[i], s.balls[j]);
  return planar_classify(s.objects[i], s.objects[j], s.circle_points);
}

std::string object_label(const Scene& s, std::size_t i) {
  return s.dimension == 3 ? s.balls[i].label : s.objects[i].label;
}

}  // namespace

IntersectionResult intersection_graph(const Scene& s) {
  IntersectionResult res;
  std::size_t n = s.object_count();
  for (std::size_t i = 0; i < n; ++i)
    res.graph.add_vertex(object_label(s, i));
  res.graph.require_unique_labels();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      PairClass c = classify_pair(s, i, j);
      if (c == PairClass::Disjoint) continue;
      res.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
      if (c == PairClass::Tangent)
        res.tangent_pairs.push_back(
            {object_label(s, i), object_label(s, j)});
    }
  }
  return res;
}

RealizationReport verify_realization(const Scene& s) {
  RealizationReport rep;
  IntersectionResult got = intersection_graph(s);
  rep.diff = graph_equal(s.expected, got.graph);
  rep.matches = rep.diff.equal();
  rep.tangent_pairs = std::move(got.tangent_pairs);
  rep.params = s.params;
  return rep;
}

}  // namespace dsg

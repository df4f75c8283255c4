// Labeled, optionally vertex-weighted graphs plus label-matched comparison.

#pragma once

#include "dsg/exact.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dsg {

struct Weight {
  bool infinite = false;
  Rat value = Rat(1);

  static Weight one() { return {}; }
  static Weight inf() { return {true, Rat(0)}; }
  static Weight finite(const Rat& v) {
    if (sgn(v) < 0) throw std::invalid_argument("negative vertex weight");
    return {false, v};
  }
  bool operator==(const Weight& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
};

std::string weight_to_string(const Weight& w);
Weight weight_from_string(const std::string& s);

struct Vertex {
  int id = 0;
  std::string label;
  Weight weight;
};

struct LabeledGraph {
  std::vector<Vertex> vertices;
  std::set<std::pair<int, int>> edges;  // stored with first < second

  int add_vertex(const std::string& label, Weight w = Weight::one());
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int size() const { return static_cast<int>(vertices.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  std::optional<int> find_label(const std::string& label) const;
  // Throws if any label repeats.
  void require_unique_labels() const;
  std::vector<std::vector<int>> adjacency() const;
  bool connected() const;
};

struct GraphDiff {
  // Edges of the first graph absent from the second, and vice versa,
  // reported as label pairs.
  std::vector<std::pair<std::string, std::string>> missing_edges;
  std::vector<std::pair<std::string, std::string>> extra_edges;
  std::vector<std::string> label_mismatches;
  bool equal() const {
    return missing_edges.empty() && extra_edges.empty() &&
           label_mismatches.empty();
  }
};

// Label-matched equality (not isomorphism). missing_edges: in g1 but not g2;
// extra_edges: in g2 but not g1. Duplicate labels on either side are an
// error.
GraphDiff graph_equal(const LabeledGraph& g1, const LabeledGraph& g2);

}  // namespace dsg

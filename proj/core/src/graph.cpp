#include "dsg/graph.hpp"

#include <algorithm>
#include <unordered_map>

namespace dsg {

std::string weight_to_string(const Weight& w) {
  return w.infinite ? "inf" : rat_to_string(w.value);
}

Weight weight_from_string(const std::string& s) {
  if (s == "inf") return Weight::inf();
  return Weight::finite(rat_from_string(s));
}

int LabeledGraph::add_vertex(const std::string& label, Weight w) {
  int id = size();
  vertices.push_back({id, label, w});
  return id;
}

void LabeledGraph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loop rejected");
  if (u < 0 || v < 0 || u >= size() || v >= size())
    throw std::invalid_argument("edge endpoint out of range");
  if (u > v) std::swap(u, v);
  edges.insert({u, v});
}

bool LabeledGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return edges.count({u, v}) > 0;
}

std::optional<int> LabeledGraph::find_label(const std::string& label) const {
  for (const auto& v : vertices)
    if (v.label == label) return v.id;
  return std::nullopt;
}

void LabeledGraph::require_unique_labels() const {
  std::unordered_map<std::string, int> seen;
  for (const auto& v : vertices) {
    auto [it, inserted] = seen.emplace(v.label, v.id);
    if (!inserted)
      throw std::invalid_argument("duplicate vertex label: " + v.label);
  }
}

std::vector<std::vector<int>> LabeledGraph::adjacency() const {
  std::vector<std::vector<int>> adj(size());
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

bool LabeledGraph::connected() const {
  if (size() == 0) return true;
  auto adj = adjacency();
  std::vector<bool> seen(size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == size();
}

GraphDiff graph_equal(const LabeledGraph& g1, const LabeledGraph& g2) {
  g1.require_unique_labels();
  g2.require_unique_labels();
  GraphDiff diff;

  std::unordered_map<std::string, int> m1, m2;
  for (const auto& v : g1.vertices) m1[v.label] = v.id;
  for (const auto& v : g2.vertices) m2[v.label] = v.id;
  for (const auto& [label, id] : m1)
    if (!m2.count(label)) diff.label_mismatches.push_back(label);
  for (const auto& [label, id] : m2)
    if (!m1.count(label)) diff.label_mismatches.push_back(label);
  std::sort(diff.label_mismatches.begin(), diff.label_mismatches.end());

  auto edge_labels = [](const LabeledGraph& g) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& [u, v] : g.edges) {
      std::string a = g.vertices[u].label, b = g.vertices[v].label;
      if (b < a) std::swap(a, b);
      out.insert({a, b});
    }
    return out;
  };
  auto e1 = edge_labels(g1), e2 = edge_labels(g2);
  for (const auto& e : e1)
    if (!e2.count(e)) diff.missing_edges.push_back(e);
  for (const auto& e : e2)
    if (!e1.count(e)) diff.extra_edges.push_back(e);
  return diff;
}

}  // namespace dsg

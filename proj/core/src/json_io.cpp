#include "dsg/json_io.hpp"

namespace dsg {

using nlohmann::json;

json graph_to_json(const LabeledGraph& g) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : g.vertices)
    j["vertices"].push_back(
        {{"id", v.id}, {"label", v.label}, {"weight", weight_to_string(v.weight)}});
  j["edges"] = json::array();
  for (const auto& [u, v] : g.edges) j["edges"].push_back({u, v});
  return j;
}

LabeledGraph graph_from_json(const json& j) {
  LabeledGraph g;
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw std::invalid_argument("graph JSON: missing vertices array");
  for (const auto& jv : j["vertices"]) {
    int id = jv.at("id").get<int>();
    if (id != g.size())
      throw std::invalid_argument("graph JSON: vertex ids must be dense from 0");
    Weight w = jv.contains("weight")
                   ? weight_from_string(jv["weight"].get<std::string>())
                   : Weight::one();
    g.add_vertex(jv.at("label").get<std::string>(), w);
  }
  g.require_unique_labels();
  for (const auto& je : j.value("edges", json::array())) {
    if (!je.is_array() || je.size() != 2)
      throw std::invalid_argument("graph JSON: edge must be an id pair");
    int u = je[0].get<int>(), v = je[1].get<int>();
    if (u >= v)
      throw std::invalid_argument("graph JSON: edges must satisfy id_low < id_high");
    g.add_edge(u, v);
  }
  return g;
}

json reduction_to_json(const ReductionOutput& red) {
  json j = graph_to_json(red.graph);
  j["target"] = target_kind_name(red.target);
  if (red.budget) j["budget"] = rat_to_string(*red.budget);
  if (!red.terminals.empty()) j["terminals"] = red.terminals;
  j["counts"] = {{"n", red.n}, {"t", red.t}, {"m", red.m}};
  return j;
}

namespace {

json coord_to_json(const Coord& c) {
  if (c.rational) return json{{"rat", rat_to_string(c.r)}};
  return json{{"c", rat_to_string(c.c)}, {"q", rat_to_string(c.q)}};
}

Coord coord_from_json(const json& j) {
  if (j.contains("rat")) return Coord::of(rat_from_string(j["rat"]));
  if (j.contains("c") && j.contains("q"))
    return Coord::pure_sqrt(rat_from_string(j["c"]), rat_from_string(j["q"]));
  throw std::invalid_argument("scene JSON: coordinate needs rat or c/q");
}

}  // namespace

json scene_to_json(const Scene& s) {
  json j;
  j["dimension"] = s.dimension;
  json params = json::object();
  for (const auto& [k, v] : s.params) params[k] = rat_to_string(v);
  j["params"] = params;
  if (s.dimension == 3) {
    j["balls"] = json::array();
    for (const auto& b : s.balls) {
      json jb;
      jb["label"] = b.label;
      jb["center"] = {coord_to_json(b.center[0]), coord_to_json(b.center[1]),
                      coord_to_json(b.center[2])};
      jb["radius_sq"] = rat_to_string(b.radius_sq);
      j["balls"].push_back(std::move(jb));
    }
  } else {
    j["circle_points"] = json::array();
    for (const auto& p : s.circle_points)
      j["circle_points"].push_back({rat_to_string(p.x), rat_to_string(p.y)});
    j["objects"] = json::array();
    for (const auto& o : s.objects) {
      json jo;
      jo["label"] = o.label;
      if (o.kind == PlanarObject::Kind::Disk) {
        jo["kind"] = "disk";
        jo["center"] = {rat_to_string(o.center.x), rat_to_string(o.center.y)};
        jo["radius"] = rat_to_string(o.radius);
      } else {
        jo["kind"] = "hull";
        jo["inner_radius"] = rat_to_string(o.inner_radius);
        jo["generators"] = o.generators;
      }
      j["objects"].push_back(std::move(jo));
    }
  }
  j["expected_graph"] = graph_to_json(s.expected);
  return j;
}

Scene scene_from_json(const json& j) {
  Scene s;
  s.dimension = j.at("dimension").get<int>();
  if (s.dimension != 2 && s.dimension != 3)
    throw std::invalid_argument("scene JSON: dimension must be 2 or 3");
  json params = j.value("params", json::object());
  for (const auto& [k, v] : params.items())
    s.params[k] = rat_from_string(v.get<std::string>());
  if (s.dimension == 3) {
    for (const auto& jb : j.value("balls", json::array())) {
      Ball b;
      b.label = jb.at("label").get<std::string>();
      const auto& c = jb.at("center");
      if (!c.is_array() || c.size() != 3)
        throw std::invalid_argument("scene JSON: ball center needs 3 coords");
      b.center = {coord_from_json(c[0]), coord_from_json(c[1]),
                  coord_from_json(c[2])};
      b.radius_sq = rat_from_string(jb.at("radius_sq").get<std::string>());
      if (sgn(b.radius_sq) <= 0)
        throw std::invalid_argument("scene JSON: radius_sq must be positive");
      s.balls.push_back(std::move(b));
    }
  } else {
    for (const auto& jp : j.value("circle_points", json::array())) {
      if (!jp.is_array() || jp.size() != 2)
        throw std::invalid_argument("scene JSON: circle point needs 2 coords");
      s.circle_points.push_back({rat_from_string(jp[0].get<std::string>()),
                                 rat_from_string(jp[1].get<std::string>())});
    }
    for (const auto& jo : j.value("objects", json::array())) {
      std::string kind = jo.at("kind").get<std::string>();
      if (kind == "disk") {
        const auto& c = jo.at("center");
        s.objects.push_back(PlanarObject::disk(
            jo.at("label").get<std::string>(),
            {rat_from_string(c.at(0).get<std::string>()),
             rat_from_string(c.at(1).get<std::string>())},
            rat_from_string(jo.at("radius").get<std::string>())));
      } else if (kind == "hull") {
        s.objects.push_back(PlanarObject::hull(
            jo.at("label").get<std::string>(),
            rat_from_string(jo.at("inner_radius").get<std::string>()),
            jo.at("generators").get<std::vector<int>>()));
      } else {
        throw std::invalid_argument("scene JSON: unknown object kind " + kind);
      }
    }
  }
  s.expected = graph_from_json(j.at("expected_graph"));
  return s;
}

}  // namespace dsg

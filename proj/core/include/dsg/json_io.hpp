// JSON file formats: labeled graphs and geometric scenes. Rationals are
// strings "p/q" in lowest terms with q > 0; square-root coordinates are
// {"c": "p/q", "q": "p/q"} meaning c*sqrt(q).

#pragma once

#include "dsg/graph.hpp"
#include "dsg/reductions.hpp"
#include "dsg/scene.hpp"

#include <json.hpp>

namespace dsg {

nlohmann::json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const nlohmann::json& j);

// Graph JSON plus budget/target/terminals/counts fields emitted by reduce.
nlohmann::json reduction_to_json(const ReductionOutput& red);

nlohmann::json scene_to_json(const Scene& s);
Scene scene_from_json(const nlohmann::json& j);

}  // namespace dsg

#ifndef PLUM_MODEL_HPP
#define PLUM_MODEL_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <json.hpp>

#include "plum/universal.hpp"

namespace plum {

/// Explicit minor model inside the universal graph: a connected branch
/// set of addresses per input vertex, and a branch path per input edge
/// whose first/last vertices lie in the endpoint branch sets and whose
/// interior lies in no other image.
struct MinorModel {
    std::map<std::int64_t, std::vector<GAddress>> branch_sets;
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<GAddress>> branch_paths;
};

/// Serialization: {"input":…, "host_level_map":…, "branch_sets":…,
/// "branch_paths":…}; keys sorted, addresses in path/set order.
/// host_level_map records, per input vertex, the deepest level its
/// branch set touches.
nlohmann::json model_to_json(const MinorModel& m, const nlohmann::json& input_graph);

struct ParsedModel {
    MinorModel model;
    nlohmann::json input_graph;
};

ParsedModel model_from_json(const nlohmann::json& j);

} // namespace plum

#endif

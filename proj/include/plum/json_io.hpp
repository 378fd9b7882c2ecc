#ifndef PLUM_JSON_IO_HPP
#define PLUM_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "plum/plane_graph.hpp"

namespace plum {

/// Graph schema:
///   {"vertices":[id...], "edges":[[u,v]...], "rotation":{"id":[nb...]}}
/// ids are arbitrary integers; "rotation" is optional. Parsing runs the
/// embedding step, so the result always carries a planar rotation.
PlaneGraph graph_from_json(const nlohmann::json& j);
PlaneGraph graph_from_json_text(const std::string& text);

nlohmann::json graph_to_json(const PlaneGraph& g);
std::string graph_to_dot(const PlaneGraph& g);

/// Canonical serialization used everywhere: sorted keys, 2-space indent,
/// trailing newline. Byte-stable across runs.
std::string dump_json(const nlohmann::json& j);

} // namespace plum

#endif

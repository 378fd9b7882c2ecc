#ifndef PLUM_EARS_HPP
#define PLUM_EARS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "plum/plane_graph.hpp"

namespace plum {

/// One ear: an open path whose endpoints lie in the prefix graph and
/// whose internal vertices are new. `face` is the boundary walk of the
/// prefix face the ear lies in (vertices of the full graph).
struct Ear {
    std::vector<Vertex> path;
    FaceCycle face;
};

struct EarDecomposition {
    std::vector<Vertex> base_cycle;
    std::vector<Ear> ears;

    nlohmann::json to_json(const PlaneGraph& g) const;
};

/// A simple cycle containing both edges, found by subdividing them and
/// routing two internally-disjoint paths between the midpoints.
std::vector<Vertex> cycle_through_two_edges(const PlaneGraph& g, std::pair<Vertex, Vertex> e0,
                                            std::pair<Vertex, Vertex> e);

/// Ear decomposition driven by an edge order: the base cycle goes
/// through the least edge; each step adds the least uncovered edge via
/// the subpath of a cycle through it and the least edge.
/// Default order is lexicographic on (min label, max label); a seed
/// shuffles it reproducibly.
EarDecomposition ear_decomposition(const PlaneGraph& g,
                                   std::optional<std::uint64_t> seed = std::nullopt);

/// The unique face of the embedded prefix whose region contains the
/// ear, located by scanning the ear end's rotation in the full graph
/// for its flanking prefix neighbors. Checked from both ends.
FaceCycle locate_ear_face(const PlaneGraph& full,
                          const std::vector<std::pair<Vertex, Vertex>>& prefix_edges,
                          const std::vector<Vertex>& ear_path);

} // namespace plum

#endif

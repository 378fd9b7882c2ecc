#ifndef PLUM_REDUCE_HPP
#define PLUM_REDUCE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <json.hpp>

#include "plum/plane_graph.hpp"

namespace plum {

using LabelEdge = std::pair<std::int64_t, std::int64_t>; // normalized lo,hi

inline LabelEdge label_edge(std::int64_t a, std::int64_t b) {
    return a < b ? LabelEdge{a, b} : LabelEdge{b, a};
}

/// Witness that the input is a minor of the reduced graph: contracting
/// every blowup set and deleting everything in `added` recovers a graph
/// label-isomorphic to the input. Blowup vectors keep spine order, so
/// consecutive entries are edges of the reduced graph.
struct ReductionWitness {
    std::map<std::int64_t, std::vector<std::int64_t>> blowup;
    std::map<LabelEdge, LabelEdge> edge_map; // input edge -> reduced edge
    std::vector<std::int64_t> added_vertices;
    std::vector<LabelEdge> added_edges;

    nlohmann::json to_json() const;
};

struct Reduction {
    PlaneGraph graph;
    ReductionWitness witness;
};

/// Adds fresh repair paths inside faces until the graph is 2-connected
/// (padding inputs with fewer than 3 vertices first). The input stays a
/// topological subgraph; the witness's blowup is the identity.
Reduction make_two_connected(const PlaneGraph& g);

/// Splits every vertex of degree >= 4 into a caterpillar spine whose
/// vertices absorb the incident edges in rotation order. Requires a
/// 2-connected input; output is sub-cubic and 2-connected.
Reduction make_subcubic(const PlaneGraph& g);

/// make_subcubic after make_two_connected, witnesses composed.
Reduction reduce(const PlaneGraph& g);

/// Oracle for the witness contract: contract blowups, delete added,
/// compare labels and label edges with the original. Exact, no search.
bool witness_recovers_input(const PlaneGraph& original, const PlaneGraph& reduced,
                            const ReductionWitness& w);

} // namespace plum

#endif

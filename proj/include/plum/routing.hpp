#ifndef PLUM_ROUTING_HPP
#define PLUM_ROUTING_HPP

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "plum/plane_graph.hpp"

namespace plum {

/// Vertex-disjoint paths, each an ordered vertex list whose consecutive
/// pairs are host edges. Paths are pairwise vertex-disjoint, except that
/// a singleton source (or sink) set is shared by all paths as a common
/// endpoint.
struct PathSet {
    std::vector<std::vector<Vertex>> paths;
};

/// Infeasibility witness: removing `cut` disconnects every remaining
/// source from every remaining sink, and |cut| < k.
struct CutWitness {
    std::vector<Vertex> cut;
};

using RoutingResult = std::variant<PathSet, CutWitness>;

/// Adjacency view used by the router: a host graph restricted to an
/// allowed vertex set, optionally with individual edges removed.
struct RoutingView {
    const PlaneGraph* host = nullptr;
    std::vector<char> allowed;                        // empty = all allowed
    std::function<bool(Vertex, Vertex)> edge_banned;  // may be null

    bool vertex_ok(Vertex v) const { return allowed.empty() || allowed[v]; }
    bool edge_ok(Vertex u, Vertex v) const {
        return vertex_ok(u) && vertex_ok(v) && (!edge_banned || !edge_banned(u, v));
    }
};

/// k internally-vertex-disjoint paths from `sources` to `sinks` avoiding
/// `forbidden`, by unit-vertex-capacity max flow. Terminal vertices are
/// endpoint-only: no path passes through a source or sink. A singleton
/// terminal set is shared (classic Menger between two vertices);
/// otherwise every terminal starts/ends at most one path and the paths
/// are fully disjoint. Returns a CutWitness of size < k when infeasible.
RoutingResult disjoint_paths(const RoutingView& view,
                             const std::vector<Vertex>& sources,
                             const std::vector<Vertex>& sinks,
                             int k,
                             const std::vector<Vertex>& forbidden = {});

RoutingResult disjoint_paths(const PlaneGraph& g,
                             const std::vector<Vertex>& sources,
                             const std::vector<Vertex>& sinks,
                             int k,
                             const std::vector<Vertex>& forbidden = {});

/// Max number of disjoint source-sink paths in the view, capped.
int max_disjoint_paths(const RoutingView& view,
                       const std::vector<Vertex>& sources,
                       const std::vector<Vertex>& sinks,
                       int cap,
                       const std::vector<Vertex>& forbidden = {});

} // namespace plum

#endif

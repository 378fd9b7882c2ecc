#ifndef PLUM_PLANE_GRAPH_HPP
#define PLUM_PLANE_GRAPH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "plum/error.hpp"

namespace plum {

/// Dense vertex index inside one PlaneGraph.
using Vertex = std::int32_t;

constexpr Vertex kNoVertex = -1;

/// Finite simple graph with a rotation system: the cyclic order of
/// neighbors around each vertex. The rotation determines a sphere
/// embedding via face tracing; see trace_faces().
///
/// Vertices are dense indices 0..n-1 in insertion order. Each vertex
/// carries an int64 label (external id); labels default to the index.
class PlaneGraph {
public:
    PlaneGraph() = default;

    /// Builds a graph from explicit rotation lists. Validates that the
    /// lists are symmetric, loop-free and duplicate-free.
    static PlaneGraph from_rotations(std::vector<std::vector<Vertex>> rotations,
                                     std::vector<std::int64_t> labels);

    Vertex add_vertex();
    Vertex add_vertex(std::int64_t label);

    /// Appends v to u's rotation and u to v's. Rejects loops and
    /// parallel edges.
    void add_edge(Vertex u, Vertex v);

    /// Inserts the edge with explicit rotation positions: the new
    /// neighbor lands immediately after `after_u` in u's rotation
    /// (kNoVertex appends), and likewise for v.
    void add_edge_after(Vertex u, Vertex after_u, Vertex v, Vertex after_v);

    /// Replaces occurrence of `old_nb` in v's rotation by `new_nb`,
    /// keeping the position. Low-level: caller maintains symmetry.
    void replace_neighbor(Vertex v, Vertex old_nb, Vertex new_nb);

    int vertex_count() const { return static_cast<int>(rotation_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {rotation_[v].data(), rotation_[v].size()};
    }
    int degree(Vertex v) const { return static_cast<int>(rotation_[v].size()); }
    bool has_edge(Vertex u, Vertex v) const;

    std::int64_t label(Vertex v) const { return labels_[v]; }
    /// Index of the vertex labelled `label`, or kNoVertex.
    Vertex find_label(std::int64_t label) const;

    /// Position of u in v's rotation; -1 if absent.
    int rotation_index(Vertex v, Vertex u) const;
    /// Neighbor following u in v's rotation (cyclically).
    Vertex next_in_rotation(Vertex v, Vertex u) const;
    /// Neighbor preceding u in v's rotation (cyclically).
    Vertex prev_in_rotation(Vertex v, Vertex u) const;

    /// Edges as (u,v) pairs with u < v, ordered by (u, rotation position).
    std::vector<std::pair<Vertex, Vertex>> edges() const;

private:
    std::vector<std::vector<Vertex>> rotation_;
    std::vector<std::int64_t> labels_;
    std::size_t edge_count_ = 0;
};

/// Closed boundary walk of one face, as the vertex sequence visited.
/// Consecutive entries (cyclically) are host edges; for 2-connected
/// graphs the walk is a simple cycle.
struct FaceCycle {
    std::vector<Vertex> verts;

    std::size_t size() const { return verts.size(); }
};

/// Traces every face of the embedding. Works per connected component;
/// isolated vertices contribute no faces.
/// Rule: the dart following (u -> v) is (v -> w) with w the successor
/// of u in v's rotation.
std::vector<FaceCycle> trace_faces(const PlaneGraph& g);

/// Faces of a connected embedded graph. Throws Disconnected otherwise.
std::vector<FaceCycle> faces(const PlaneGraph& g);

/// V - E + F == 2 on every connected component (isolated vertices count
/// one face). False means the rotation system is not a sphere embedding.
bool euler_ok(const PlaneGraph& g);

std::vector<std::vector<Vertex>> connected_components(const PlaneGraph& g);
bool is_connected(const PlaneGraph& g);

/// |V| >= 3, connected, and no cutvertex.
bool is_two_connected(const PlaneGraph& g);
/// Max degree <= 3.
bool is_subcubic(const PlaneGraph& g);

std::vector<Vertex> articulation_points(const PlaneGraph& g);

/// Biconnected components as edge lists (every edge in exactly one).
std::vector<std::vector<std::pair<Vertex, Vertex>>> biconnected_components(const PlaneGraph& g);

/// Replaces edge {u,v} by a path through k new degree-2 vertices,
/// keeping both rotations planar. k = 0 returns the graph unchanged.
PlaneGraph subdivide_edge(const PlaneGraph& g, Vertex u, Vertex v, int k);

} // namespace plum

#endif

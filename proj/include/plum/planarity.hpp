#ifndef PLUM_PLANARITY_HPP
#define PLUM_PLANARITY_HPP

#include <cstdint>
#include <vector>

#include "plum/plane_graph.hpp"

namespace plum {

/// Builds an embedded PlaneGraph from a vertex/edge list. If `rotation`
/// is non-empty it must list, for every vertex, exactly its neighbors;
/// the rotation is validated against Euler's formula (InvalidRotation).
/// Otherwise a planar rotation is computed (NonPlanar when none exists).
///
/// `vertex_labels[i]` names vertex i; `edge_list` uses indices into it.
PlaneGraph build_embedding(const std::vector<std::int64_t>& vertex_labels,
                           const std::vector<std::pair<int, int>>& edge_list,
                           const std::vector<std::vector<int>>& rotation = {});

/// Computes a planar rotation for an arbitrary simple graph given as
/// adjacency (order inside the lists is ignored). Throws NonPlanar.
/// Face-insertion scheme per biconnected block, blocks merged at
/// cutvertices, components embedded independently.
PlaneGraph planar_embed(const std::vector<std::vector<Vertex>>& adjacency,
                        const std::vector<std::int64_t>& labels);

bool is_planar(const std::vector<std::vector<Vertex>>& adjacency);

} // namespace plum

#endif

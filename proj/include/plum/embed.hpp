#ifndef PLUM_EMBED_HPP
#define PLUM_EMBED_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "plum/model.hpp"
#include "plum/plane_graph.hpp"
#include "plum/universal.hpp"

namespace plum {

struct EmbedOptions {
    /// Extra materialization rounds allowed per routing step before
    /// giving up with DepthCapExceeded.
    int max_extra_depth = 12;
    std::uint64_t vertex_cap = kDefaultVertexCap;
    /// Record per-step snapshots and run the per-step order/containment
    /// assertions (used by tests).
    bool validate_steps = false;
    /// Optional shuffle seed for the ear decomposition's edge order.
    std::optional<std::uint64_t> ear_seed;
};

/// Snapshot after the base case / after each ear: the prefix graph
/// embedded so far and its partial model (labels match the input's).
struct EmbedStep {
    PlaneGraph prefix;
    MinorModel partial;
};

struct EmbedResult {
    MinorModel model;
    std::shared_ptr<Universe> universe;
    int deepest_level = 0;
    std::vector<EmbedStep> steps; // only with validate_steps
};

/// Builds an explicit minor model of a finite sub-cubic 2-connected
/// plane graph inside a lazily deepened truncation of the universal
/// graph: ear decomposition, base cycle between two disjoint deep face
/// cycles, then one routed ear per step.
EmbedResult embed(const PlaneGraph& g, const EmbedOptions& opt = {});

/// Arbitrary finite planar input: reduce() first, embed the reduction,
/// then contract the spine images back so the model speaks about the
/// input itself (branch sets pruned to minimal connected covers).
EmbedResult embed_any(const PlaneGraph& g, const EmbedOptions& opt = {});

} // namespace plum

#endif

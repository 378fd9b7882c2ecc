#ifndef PLUM_VERIFY_HPP
#define PLUM_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "plum/model.hpp"
#include "plum/plane_graph.hpp"
#include "plum/universal.hpp"

namespace plum {

/// Outcome of the four inflated-copy conditions, each with a concrete
/// witness string on failure.
struct CheckReport {
    struct Condition {
        bool passed = true;
        std::string witness;
    };
    Condition connected;     // (i)  every branch set connected
    Condition paths;         // (ii) every branch path joins its endpoint sets
    Condition disjoint;      // (iii) images pairwise disjoint
    Condition coverage;      // (iv) model is exactly the input's shape in the host

    bool passed() const {
        return connected.passed && paths.passed && disjoint.passed && coverage.passed;
    }
    nlohmann::json to_json() const;
};

/// Independent inflated-copy check: resolves the model's addresses in
/// the universe (materializing their defining expansions) and verifies
/// the four conditions against the input graph. Shares no traversal
/// logic with the embedder. Throws DanglingAddress for unresolvable
/// addresses.
CheckReport check_inflated_copy(const MinorModel& m, const PlaneGraph& input, Universe& host);

/// Convenience: rebuilds a host universe from the model's addresses.
CheckReport check_model(const MinorModel& m, const PlaneGraph& input,
                        std::uint64_t vertex_cap = kDefaultVertexCap);

/// Exhaustive branch-set search for tiny instances (bitmask over the
/// host). Returns a witness when the pattern is a minor of the host.
struct BruteForceWitness {
    std::map<std::int64_t, std::vector<Vertex>> branch_sets;        // pattern label -> host verts
    std::map<std::pair<std::int64_t, std::int64_t>, std::pair<Vertex, Vertex>> edge_links;
};

std::optional<BruteForceWitness> brute_force_minor(const PlaneGraph& host,
                                                   const PlaneGraph& pattern,
                                                   int host_cap = 24, int pattern_cap = 6);

/// Desk-scale probe of slice connectivity: samples non-adjacent pairs
/// among the wheel vertices (level n+1) of the canonical level-n slice
/// and measures their min vertex cut at each materialization depth
/// 1..depth. Cuts below n+3 at shallow depths are reported as
/// insufficient depth, not failure.
struct ProbeReport {
    int level = 0;
    int depth = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    struct Pair {
        GAddress a, b;
        std::vector<int> cut_per_depth; // index d-1 = cut at depth d
    };
    std::vector<Pair> pairs;
    std::vector<int> min_cut_per_depth;
    bool monotone = true;
    bool sufficient = false; // final min cut >= level + 3

    nlohmann::json to_json() const;
};

ProbeReport slice_connectivity_probe(int level, int depth, int trials, std::uint64_t seed,
                                     std::uint64_t vertex_cap = kDefaultVertexCap);

} // namespace plum

#endif

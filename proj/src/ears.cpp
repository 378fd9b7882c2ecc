#include "plum/ears.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>

#include "plum/routing.hpp"

namespace plum {

using nlohmann::json;

json EarDecomposition::to_json(const PlaneGraph& g) const {
    json j;
    json base = json::array();
    for (Vertex v : base_cycle) base.push_back(g.label(v));
    j["base_cycle"] = std::move(base);
    json list = json::array();
    for (const auto& ear : ears) {
        json e;
        json p = json::array();
        for (Vertex v : ear.path) p.push_back(g.label(v));
        e["path"] = std::move(p);
        json f = json::array();
        for (Vertex v : ear.face.verts) f.push_back(g.label(v));
        e["face"] = std::move(f);
        list.push_back(std::move(e));
    }
    j["ears"] = std::move(list);
    return j;
}

std::vector<Vertex> cycle_through_two_edges(const PlaneGraph& g, std::pair<Vertex, Vertex> e0,
                                            std::pair<Vertex, Vertex> e) {
    auto norm = [](std::pair<Vertex, Vertex> p) {
        return std::pair<Vertex, Vertex>{std::min(p.first, p.second),
                                         std::max(p.first, p.second)};
    };
    if (norm(e0) == norm(e)) fail(Errc::InvalidArgument, "edges must differ");
    if (!g.has_edge(e0.first, e0.second) || !g.has_edge(e.first, e.second))
        fail(Errc::MissingEdge, "cycle_through_two_edges: edge not in graph");
    if (!is_two_connected(g)) fail(Errc::NotTwoConnected, "cycle_through_two_edges");

    PlaneGraph s1 = subdivide_edge(g, e0.first, e0.second, 1);
    Vertex m0 = s1.vertex_count() - 1;
    PlaneGraph s2 = subdivide_edge(s1, e.first, e.second, 1);
    Vertex m1 = s2.vertex_count() - 1;

    auto res = disjoint_paths(s2, {m0}, {m1}, 2);
    auto* ps = std::get_if<PathSet>(&res);
    if (!ps) fail(Errc::NotTwoConnected, "no two disjoint paths between edge midpoints");
    const auto& p1 = ps->paths[0];
    const auto& p2 = ps->paths[1];
    // both run m0 .. m1; drop the midpoints and walk p1 forward, p2 back
    std::vector<Vertex> cycle;
    for (std::size_t i = 1; i + 1 < p1.size(); ++i) cycle.push_back(p1[i]);
    for (std::size_t i = p2.size() - 2; i >= 1; --i) cycle.push_back(p2[i]);
    // sanity: simple and contains both edges
    std::set<Vertex> uniq(cycle.begin(), cycle.end());
    assert(uniq.size() == cycle.size());
    auto on_cycle = [&](std::pair<Vertex, Vertex> ed) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            Vertex a = cycle[i], b = cycle[(i + 1) % cycle.size()];
            if ((a == ed.first && b == ed.second) || (a == ed.second && b == ed.first))
                return true;
        }
        return false;
    };
    assert(on_cycle(e0));
    assert(on_cycle(e));
    (void)on_cycle;
    return cycle;
}

namespace {

// deterministic bounded rng (splitmix64 + rejection) for seeded orders
struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t mask = ~0ULL;
        if (bound == 0) return 0;
        std::uint64_t limit = mask - mask % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }
};

std::vector<Vertex> shortest_path_avoiding_edge(const PlaneGraph& g, Vertex s, Vertex t,
                                                std::pair<Vertex, Vertex> banned) {
    std::vector<Vertex> parent(g.vertex_count(), -2);
    std::queue<Vertex> q;
    parent[s] = -1;
    q.push(s);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v)) {
            if ((v == banned.first && w == banned.second) ||
                (v == banned.second && w == banned.first))
                continue;
            if (parent[w] != -2) continue;
            parent[w] = v;
            if (w == t) {
                std::vector<Vertex> path{t};
                for (Vertex x = v; x != -1; x = parent[x]) path.push_back(x);
                std::reverse(path.begin(), path.end());
                return path;
            }
            q.push(w);
        }
    }
    fail(Errc::NotTwoConnected, "graph minus an edge is disconnected");
}

} // namespace

EarDecomposition ear_decomposition(const PlaneGraph& g, std::optional<std::uint64_t> seed) {
    if (!is_two_connected(g)) fail(Errc::NotTwoConnected, "ear_decomposition");

    auto edge_list = g.edges();
    std::sort(edge_list.begin(), edge_list.end(),
              [&](const auto& a, const auto& b) {
                  auto ka = std::minmax(g.label(a.first), g.label(a.second));
                  auto kb = std::minmax(g.label(b.first), g.label(b.second));
                  return ka < kb;
              });
    if (seed) {
        SplitMix rng{*seed ^ 0x5851f42d4c957f2dULL};
        for (std::size_t i = edge_list.size(); i > 1; --i)
            std::swap(edge_list[i - 1], edge_list[rng.below(i)]);
    }

    EarDecomposition out;
    auto e0 = edge_list[0];
    // base cycle: the least edge plus a shortest path around it
    auto path = shortest_path_avoiding_edge(g, e0.first, e0.second, e0);
    out.base_cycle = path; // closes with edge (e0.second, e0.first)

    std::set<std::pair<Vertex, Vertex>> covered;
    std::vector<char> in_prefix(g.vertex_count(), 0);
    auto cover = [&](Vertex a, Vertex b) {
        covered.insert({std::min(a, b), std::max(a, b)});
        in_prefix[a] = in_prefix[b] = 1;
    };
    for (std::size_t i = 0; i < out.base_cycle.size(); ++i)
        cover(out.base_cycle[i], out.base_cycle[(i + 1) % out.base_cycle.size()]);

    while (covered.size() < g.edge_count()) {
        std::pair<Vertex, Vertex> e{-1, -1};
        for (const auto& cand : edge_list) {
            if (!covered.count({std::min(cand.first, cand.second),
                                std::max(cand.first, cand.second)})) {
                e = cand;
                break;
            }
        }
        assert(e.first != -1);

        std::vector<Vertex> ear_path;
        if (in_prefix[e.first] && in_prefix[e.second]) {
            ear_path = {e.first, e.second}; // chord
        } else {
            auto cyc = cycle_through_two_edges(g, e0, e);
            int len = static_cast<int>(cyc.size());
            int pe = -1;
            for (int i = 0; i < len; ++i) {
                Vertex a = cyc[i], b = cyc[(i + 1) % len];
                if ((a == e.first && b == e.second) || (a == e.second && b == e.first)) {
                    pe = i;
                    break;
                }
            }
            assert(pe != -1);
            // grow the arc around position pe until both ends hit the prefix
            int lo = pe, hi = (pe + 1) % len;
            while (!in_prefix[cyc[lo]]) lo = (lo + len - 1) % len;
            while (!in_prefix[cyc[hi]]) hi = (hi + 1) % len;
            for (int i = lo; i != hi; i = (i + 1) % len) ear_path.push_back(cyc[i]);
            ear_path.push_back(cyc[hi]);
        }
        assert(ear_path.front() != ear_path.back());

        Ear ear;
        std::vector<std::pair<Vertex, Vertex>> prefix_edges(covered.begin(), covered.end());
        ear.face = locate_ear_face(g, prefix_edges, ear_path);
        ear.path = std::move(ear_path);
        for (std::size_t i = 0; i + 1 < ear.path.size(); ++i) cover(ear.path[i], ear.path[i + 1]);
        out.ears.push_back(std::move(ear));
    }
    assert(out.ears.size() == g.edge_count() - g.vertex_count());
    return out;
}

FaceCycle locate_ear_face(const PlaneGraph& full,
                          const std::vector<std::pair<Vertex, Vertex>>& prefix_edges,
                          const std::vector<Vertex>& ear_path) {
    if (ear_path.size() < 2) fail(Errc::InvalidArgument, "ear too short");
    std::set<std::pair<Vertex, Vertex>> pe;
    std::vector<char> in_prefix(full.vertex_count(), 0);
    for (auto [a, b] : prefix_edges) {
        pe.insert({std::min(a, b), std::max(a, b)});
        in_prefix[a] = in_prefix[b] = 1;
    }
    auto is_prefix_edge = [&](Vertex a, Vertex b) {
        return pe.count({std::min(a, b), std::max(a, b)}) != 0;
    };

    // prefix embedding: full rotations filtered to prefix edges
    std::vector<std::vector<Vertex>> rot(full.vertex_count());
    std::vector<std::int64_t> labels(full.vertex_count());
    for (Vertex v = 0; v < full.vertex_count(); ++v) {
        labels[v] = full.label(v);
        for (Vertex w : full.neighbors(v))
            if (is_prefix_edge(v, w)) rot[v].push_back(w);
    }
    PlaneGraph prefix = PlaneGraph::from_rotations(std::move(rot), std::move(labels));
    auto prefix_faces = trace_faces(prefix);

    // corner of the ear at one end: flanking prefix neighbors in the
    // full rotation around the end
    auto corner_face = [&](Vertex x, Vertex ear_nb) -> int {
        int deg = full.degree(x);
        int i = full.rotation_index(x, ear_nb);
        if (i < 0) fail(Errc::InvalidArgument, "ear dart missing from full graph");
        auto nb = full.neighbors(x);
        Vertex before = kNoVertex, after = kNoVertex;
        for (int d = 1; d < deg; ++d) {
            Vertex cand = nb[(i - d % deg + deg) % deg];
            if (is_prefix_edge(x, cand)) {
                before = cand;
                break;
            }
        }
        for (int d = 1; d < deg; ++d) {
            Vertex cand = nb[(i + d) % deg];
            if (is_prefix_edge(x, cand)) {
                after = cand;
                break;
            }
        }
        if (before == kNoVertex || after == kNoVertex)
            fail(Errc::EarNotInOneFace, "ear end has no prefix corner");
        // the face whose walk passes before -> x -> after
        for (int f = 0; f < static_cast<int>(prefix_faces.size()); ++f) {
            const auto& walk = prefix_faces[f].verts;
            int len = static_cast<int>(walk.size());
            for (int p = 0; p < len; ++p) {
                if (walk[p] == before && walk[(p + 1) % len] == x &&
                    walk[(p + 2) % len] == after)
                    return f;
            }
        }
        fail(Errc::EarNotInOneFace, "no prefix face at the ear's corner");
    };

    int fa = corner_face(ear_path.front(), ear_path[1]);
    int fb = corner_face(ear_path.back(), ear_path[ear_path.size() - 2]);
    if (fa != fb) fail(Errc::EarNotInOneFace, "ear ends disagree about the face");
    return prefix_faces[fa];
}

} // namespace plum

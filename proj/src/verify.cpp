#include "plum/verify.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "plum/routing.hpp"

namespace plum {

using nlohmann::json;

json CheckReport::to_json() const {
    json j;
    auto put = [&](const char* name, const Condition& c) {
        json e;
        e["passed"] = c.passed;
        if (!c.passed) e["witness"] = c.witness;
        j["conditions"][name] = std::move(e);
    };
    put("i_connected", connected);
    put("ii_paths", paths);
    put("iii_disjoint", disjoint);
    put("iv_coverage", coverage);
    j["passed"] = passed();
    return j;
}

CheckReport check_inflated_copy(const MinorModel& m, const PlaneGraph& input, Universe& host) {
    CheckReport rep;
    const PlaneGraph& hg_pre = host.graph();
    (void)hg_pre;

    // resolve every address first (materializes defining expansions)
    std::map<std::int64_t, std::vector<Vertex>> bs;
    for (const auto& [v, set] : m.branch_sets) {
        auto& out = bs[v];
        for (const GAddress& a : set) out.push_back(host.require_vertex(a));
    }
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<Vertex>> bp;
    for (const auto& [e, path] : m.branch_paths) {
        auto& out = bp[e];
        for (const GAddress& a : path) out.push_back(host.require_vertex(a));
    }
    const PlaneGraph& hg = host.graph();

    // ---- (iv) shape: exactly the input's vertices and edges, nothing else
    {
        std::set<std::int64_t> want_v;
        for (Vertex v = 0; v < input.vertex_count(); ++v) want_v.insert(input.label(v));
        std::set<std::pair<std::int64_t, std::int64_t>> want_e;
        for (auto [u, v] : input.edges()) {
            auto a = input.label(u), b = input.label(v);
            want_e.insert({std::min(a, b), std::max(a, b)});
        }
        for (const auto& [v, set] : bs) {
            if (!want_v.count(v)) {
                rep.coverage = {false, "branch set for unknown vertex " + std::to_string(v)};
                break;
            }
            if (set.empty())
                rep.coverage = {false, "empty branch set for vertex " + std::to_string(v)};
        }
        if (rep.coverage.passed)
            for (std::int64_t v : want_v)
                if (!bs.count(v)) {
                    rep.coverage = {false, "missing branch set for vertex " + std::to_string(v)};
                    break;
                }
        if (rep.coverage.passed)
            for (const auto& [e, path] : bp) {
                if (!want_e.count(e)) {
                    rep.coverage = {false, "branch path for unknown edge " +
                                               std::to_string(e.first) + "-" +
                                               std::to_string(e.second)};
                    break;
                }
                if (path.empty())
                    rep.coverage = {false, "empty branch path"};
            }
        if (rep.coverage.passed)
            for (const auto& e : want_e)
                if (!bp.count(e)) {
                    rep.coverage = {false, "missing branch path for edge " +
                                               std::to_string(e.first) + "-" +
                                               std::to_string(e.second)};
                    break;
                }
    }

    // ---- (i) connectivity of each branch set in the host
    for (const auto& [v, set] : bs) {
        if (set.empty()) continue;
        std::set<Vertex> in(set.begin(), set.end());
        std::set<Vertex> seen{*in.begin()};
        std::vector<Vertex> stack{*in.begin()};
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex w : hg.neighbors(x))
                if (in.count(w) && !seen.count(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
        }
        if (seen.size() != in.size()) {
            rep.connected = {false, "branch set of vertex " + std::to_string(v) +
                                        " is disconnected in the host"};
            break;
        }
    }

    // ---- (ii) each branch path joins its endpoint branch sets
    for (const auto& [e, path] : bp) {
        auto name = std::to_string(e.first) + "-" + std::to_string(e.second);
        if (path.size() < 2) {
            rep.paths = {false, "branch path " + name + " has fewer than two vertices"};
            break;
        }
        bool ok = true;
        std::set<Vertex> uniq(path.begin(), path.end());
        if (uniq.size() != path.size()) {
            rep.paths = {false, "branch path " + name + " repeats a vertex"};
            break;
        }
        for (std::size_t i = 0; i + 1 < path.size() && ok; ++i)
            if (!hg.has_edge(path[i], path[i + 1])) {
                rep.paths = {false, "branch path " + name + " uses a non-edge"};
                ok = false;
            }
        if (!ok) break;
        auto ends_in = [&](std::int64_t v, Vertex x) {
            auto it = bs.find(v);
            return it != bs.end() &&
                   std::find(it->second.begin(), it->second.end(), x) != it->second.end();
        };
        if (!ends_in(e.first, path.front()) || !ends_in(e.second, path.back())) {
            rep.paths = {false, "branch path " + name + " does not join its branch sets"};
            break;
        }
    }

    // ---- (iii) pairwise disjointness
    {
        std::map<Vertex, std::string> owner;
        auto claim = [&](Vertex x, const std::string& who) -> bool {
            auto [it, fresh] = owner.emplace(x, who);
            if (!fresh) {
                rep.disjoint = {false, "host vertex " + std::to_string(hg.label(x)) +
                                           " shared by " + it->second + " and " + who};
                return false;
            }
            return true;
        };
        bool ok = true;
        for (const auto& [v, set] : bs) {
            for (Vertex x : set)
                if (!(ok = claim(x, "branch set " + std::to_string(v)))) break;
            if (!ok) break;
        }
        if (ok) {
            for (const auto& [e, path] : bp) {
                auto name = "branch path " + std::to_string(e.first) + "-" +
                            std::to_string(e.second);
                for (std::size_t i = 1; ok && i + 1 < path.size(); ++i)
                    ok = claim(path[i], name);
                if (!ok) break;
            }
        }
    }

    return rep;
}

CheckReport check_model(const MinorModel& m, const PlaneGraph& input, std::uint64_t vertex_cap) {
    Universe host(vertex_cap);
    return check_inflated_copy(m, input, host);
}

// ---------------------------------------------------------------------
// brute-force minor search (bitmask, budget-limited)
// ---------------------------------------------------------------------

namespace {

struct MinorSearch {
    const PlaneGraph& host;
    const PlaneGraph& pattern;
    int hn, pn;
    std::vector<std::uint32_t> adj; // host adjacency masks
    std::vector<std::vector<int>> pat_adj;
    std::vector<int> order;               // pattern vertices, search order
    std::vector<std::uint32_t> part_mask; // per pattern vertex (order index)
    std::uint32_t used = 0;

    bool found = false;
    std::vector<std::uint32_t> solution;

    MinorSearch(const PlaneGraph& h, const PlaneGraph& p) : host(h), pattern(p) {
        hn = h.vertex_count();
        pn = p.vertex_count();
        adj.assign(hn, 0);
        for (auto [u, v] : h.edges()) {
            adj[u] |= 1u << v;
            adj[v] |= 1u << u;
        }
        pat_adj.assign(pn, {});
        for (auto [u, v] : p.edges()) {
            pat_adj[u].push_back(v);
            pat_adj[v].push_back(u);
        }
        order.resize(pn);
        for (int i = 0; i < pn; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (p.degree(a) != p.degree(b)) return p.degree(a) > p.degree(b);
            return p.label(a) < p.label(b);
        });
        part_mask.assign(pn, 0);
    }

    std::uint32_t neighborhood(std::uint32_t mask) const {
        std::uint32_t nb = 0;
        for (int v = 0; v < hn; ++v)
            if (mask & (1u << v)) nb |= adj[v];
        return nb & ~mask;
    }

    // enumerate connected subsets of `free` with given max size, calling
    // f(mask); canonical rooting at the subset's minimum vertex
    template <class F>
    void connected_subsets(std::uint32_t free, int max_size, F&& f) {
        for (int r = 0; r < hn; ++r) {
            if (!(free & (1u << r))) continue;
            std::uint32_t allowed = free & ~((1u << r) - 1); // only >= r
            std::set<std::uint32_t> seen;
            std::vector<std::uint32_t> stack{1u << r};
            seen.insert(1u << r);
            while (!stack.empty()) {
                std::uint32_t s = stack.back();
                stack.pop_back();
                f(s);
                if (found) return;
                if (std::popcount(s) >= max_size) continue;
                std::uint32_t ext = neighborhood(s) & allowed;
                while (ext) {
                    std::uint32_t bit = ext & (~ext + 1);
                    ext ^= bit;
                    std::uint32_t t = s | bit;
                    if (seen.insert(t).second) stack.push_back(t);
                }
            }
            if (found) return;
        }
    }

    void search(int idx, int budget) {
        if (found) return;
        if (idx == pn) {
            found = true;
            solution = part_mask;
            return;
        }
        int pv = order[idx];
        int remaining = pn - idx - 1;
        int max_size = budget - remaining; // each later part needs >= 1 vertex
        if (max_size < 1) return;
        std::uint32_t free = ~used & ((hn == 32 ? ~0u : (1u << hn) - 1));
        connected_subsets(free, max_size, [&](std::uint32_t s) {
            // host edges must exist toward every already-placed pattern neighbor
            for (int j = 0; j < idx; ++j) {
                int pu = order[j];
                bool adjacent_in_pattern =
                    std::find(pat_adj[pv].begin(), pat_adj[pv].end(), pu) != pat_adj[pv].end();
                if (adjacent_in_pattern && !(neighborhood(part_mask[pu]) & s)) return;
            }
            part_mask[pv] = s;
            used |= s;
            search(idx + 1, budget - std::popcount(s));
            if (!found) {
                used &= ~s;
                part_mask[pv] = 0;
            }
        });
    }
};

} // namespace

std::optional<BruteForceWitness> brute_force_minor(const PlaneGraph& host,
                                                   const PlaneGraph& pattern, int host_cap,
                                                   int pattern_cap) {
    if (host.vertex_count() > host_cap || host.vertex_count() > 32)
        fail(Errc::CapExceeded, "host too large for brute force");
    if (pattern.vertex_count() > pattern_cap)
        fail(Errc::CapExceeded, "pattern too large for brute force");
    if (pattern.vertex_count() == 0 || pattern.vertex_count() > host.vertex_count())
        return std::nullopt;

    MinorSearch s(host, pattern);
    // iterative deepening on the total number of host vertices used
    for (int budget = pattern.vertex_count(); budget <= host.vertex_count() && !s.found;
         ++budget) {
        s.used = 0;
        std::fill(s.part_mask.begin(), s.part_mask.end(), 0);
        s.search(0, budget);
    }
    if (!s.found) return std::nullopt;

    BruteForceWitness w;
    for (int pv = 0; pv < s.pn; ++pv) {
        auto& set = w.branch_sets[pattern.label(pv)];
        for (int v = 0; v < s.hn; ++v)
            if (s.solution[pv] & (1u << v)) set.push_back(v);
    }
    for (auto [u, v] : pattern.edges()) {
        auto key = std::make_pair(std::min(pattern.label(u), pattern.label(v)),
                                  std::max(pattern.label(u), pattern.label(v)));
        const auto& su = w.branch_sets[pattern.label(u)];
        const auto& sv = w.branch_sets[pattern.label(v)];
        bool placed = false;
        for (Vertex a : su) {
            for (Vertex b : sv)
                if (host.has_edge(a, b)) {
                    auto link = pattern.label(u) <= pattern.label(v)
                                    ? std::make_pair(a, b)
                                    : std::make_pair(b, a);
                    w.edge_links[key] = link;
                    placed = true;
                    break;
                }
            if (placed) break;
        }
        assert(placed);
    }
    return w;
}

// ---------------------------------------------------------------------
// slice connectivity probe
// ---------------------------------------------------------------------

namespace {

struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        std::uint64_t limit = ~0ULL - ~0ULL % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }
};

} // namespace

json ProbeReport::to_json() const {
    json j;
    j["level"] = level;
    j["depth"] = depth;
    j["trials"] = trials;
    j["seed"] = seed;
    j["min_cut_per_depth"] = min_cut_per_depth;
    j["monotone"] = monotone;
    j["sufficient"] = sufficient;
    j["required_cut"] = level + 3;
    json ps = json::array();
    for (const auto& p : pairs) {
        json e;
        e["a"] = p.a.str();
        e["b"] = p.b.str();
        e["cut_per_depth"] = p.cut_per_depth;
        ps.push_back(std::move(e));
    }
    j["pairs"] = std::move(ps);
    return j;
}

ProbeReport slice_connectivity_probe(int level, int depth, int trials, std::uint64_t seed,
                                     std::uint64_t vertex_cap) {
    if (level < 0 || depth < 1 || trials < 1) fail(Errc::InvalidArgument, "bad probe arguments");
    ProbeReport rep;
    rep.level = level;
    rep.depth = depth;
    rep.trials = trials;
    rep.seed = seed;

    // canonical slice: descend from root face A by first children
    FaceId f{0, {}};
    for (int i = 0; i < level; ++i) f = f.child(0);

    Universe u(vertex_cap);
    SliceRef ref;
    ref.face = f;
    ref.depth = 1;
    Extracted first = slice_subgraph(u, ref);

    // wheel vertices (level+1) are the slice's shallow interior
    std::vector<int> wheel;
    for (int i = 0; i < static_cast<int>(first.address.size()); ++i)
        if (first.address[i].kind != GAddress::Kind::Base && first.address[i].face == f)
            wheel.push_back(i);

    // sample non-adjacent wheel pairs (by host vertex, stable across depths)
    SplitMix rng{seed ^ 0x9e3779b97f4a7c15ULL};
    std::set<std::pair<Vertex, Vertex>> chosen;
    std::vector<std::pair<GAddress, GAddress>> pair_addrs;
    int attempts = 0;
    while (static_cast<int>(pair_addrs.size()) < trials && attempts < trials * 64) {
        ++attempts;
        int i = static_cast<int>(rng.below(wheel.size()));
        int j = static_cast<int>(rng.below(wheel.size()));
        if (i == j) continue;
        int a = wheel[std::min(i, j)], b = wheel[std::max(i, j)];
        if (first.graph.has_edge(a, b)) continue;
        if (!chosen.insert({first.host_vertex[a], first.host_vertex[b]}).second) continue;
        pair_addrs.emplace_back(first.address[a], first.address[b]);
    }

    rep.pairs.resize(pair_addrs.size());
    for (std::size_t i = 0; i < pair_addrs.size(); ++i) {
        rep.pairs[i].a = pair_addrs[i].first;
        rep.pairs[i].b = pair_addrs[i].second;
    }

    rep.min_cut_per_depth.assign(depth, 0);
    for (int d = 1; d <= depth; ++d) {
        ref.depth = d;
        Extracted ex = slice_subgraph(u, ref);
        std::map<GAddress, Vertex> local;
        for (int i = 0; i < static_cast<int>(ex.address.size()); ++i) local[ex.address[i]] = i;
        int depth_min = -1;
        for (std::size_t i = 0; i < pair_addrs.size(); ++i) {
            Vertex a = local.at(pair_addrs[i].first), b = local.at(pair_addrs[i].second);
            RoutingView view;
            view.host = &ex.graph;
            int cut = max_disjoint_paths(view, {a}, {b}, level + 8);
            rep.pairs[i].cut_per_depth.push_back(cut);
            if (depth_min < 0 || cut < depth_min) depth_min = cut;
        }
        rep.min_cut_per_depth[d - 1] = depth_min;
    }
    for (auto& p : rep.pairs)
        for (std::size_t d = 1; d < p.cut_per_depth.size(); ++d)
            if (p.cut_per_depth[d] < p.cut_per_depth[d - 1]) rep.monotone = false;
    rep.sufficient = !rep.min_cut_per_depth.empty() &&
                     rep.min_cut_per_depth.back() >= level + 3;
    return rep;
}

} // namespace plum

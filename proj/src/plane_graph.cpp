#include "plum/plane_graph.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <unordered_map>

namespace plum {

PlaneGraph PlaneGraph::from_rotations(std::vector<std::vector<Vertex>> rotations,
                                      std::vector<std::int64_t> labels) {
    PlaneGraph g;
    int n = static_cast<int>(rotations.size());
    if (labels.empty()) {
        labels.resize(n);
        for (int i = 0; i < n; ++i) labels[i] = i;
    }
    if (static_cast<int>(labels.size()) != n)
        fail(Errc::InvalidArgument, "from_rotations: label count mismatch");
    std::size_t dart_total = 0;
    std::vector<Vertex> mark(n, -1);
    std::vector<std::pair<Vertex, Vertex>> darts;
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : rotations[v]) {
            if (w < 0 || w >= n) fail(Errc::InvalidArgument, "from_rotations: bad neighbor id");
            if (w == v) fail(Errc::InvalidArgument, "from_rotations: loop");
            if (mark[w] == v) fail(Errc::InvalidArgument, "from_rotations: repeated neighbor");
            mark[w] = v;
            darts.emplace_back(v, w);
            ++dart_total;
        }
    }
    // symmetry: w in rotation[v] iff v in rotation[w]
    std::sort(darts.begin(), darts.end());
    for (auto [v, w] : darts) {
        if (!std::binary_search(darts.begin(), darts.end(), std::make_pair(w, v)))
            fail(Errc::InvalidArgument, "from_rotations: asymmetric adjacency");
    }
    g.rotation_ = std::move(rotations);
    g.labels_ = std::move(labels);
    g.edge_count_ = dart_total / 2;
    return g;
}

Vertex PlaneGraph::add_vertex() { return add_vertex(static_cast<std::int64_t>(rotation_.size())); }

Vertex PlaneGraph::add_vertex(std::int64_t label) {
    rotation_.emplace_back();
    labels_.push_back(label);
    return static_cast<Vertex>(rotation_.size() - 1);
}

void PlaneGraph::add_edge(Vertex u, Vertex v) {
    add_edge_after(u, kNoVertex, v, kNoVertex);
}

void PlaneGraph::add_edge_after(Vertex u, Vertex after_u, Vertex v, Vertex after_v) {
    if (u == v) fail(Errc::InvalidArgument, "loop edge");
    if (has_edge(u, v)) fail(Errc::InvalidArgument, "parallel edge");
    auto insert = [&](Vertex at, Vertex after, Vertex nb) {
        auto& rot = rotation_[at];
        if (after == kNoVertex) {
            rot.push_back(nb);
            return;
        }
        auto it = std::find(rot.begin(), rot.end(), after);
        if (it == rot.end()) fail(Errc::InvalidArgument, "rotation anchor not a neighbor");
        rot.insert(it + 1, nb);
    };
    insert(u, after_u, v);
    insert(v, after_v, u);
    ++edge_count_;
}

void PlaneGraph::replace_neighbor(Vertex v, Vertex old_nb, Vertex new_nb) {
    auto& rot = rotation_[v];
    auto it = std::find(rot.begin(), rot.end(), old_nb);
    if (it == rot.end()) fail(Errc::InvalidArgument, "replace_neighbor: not a neighbor");
    *it = new_nb;
}

bool PlaneGraph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
    const auto& a = rotation_[u].size() <= rotation_[v].size() ? rotation_[u] : rotation_[v];
    Vertex want = rotation_[u].size() <= rotation_[v].size() ? v : u;
    return std::find(a.begin(), a.end(), want) != a.end();
}

Vertex PlaneGraph::find_label(std::int64_t label) const {
    for (Vertex v = 0; v < vertex_count(); ++v)
        if (labels_[v] == label) return v;
    return kNoVertex;
}

int PlaneGraph::rotation_index(Vertex v, Vertex u) const {
    const auto& rot = rotation_[v];
    for (std::size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == u) return static_cast<int>(i);
    return -1;
}

Vertex PlaneGraph::next_in_rotation(Vertex v, Vertex u) const {
    int i = rotation_index(v, u);
    if (i < 0) fail(Errc::InvalidArgument, "next_in_rotation: not a neighbor");
    const auto& rot = rotation_[v];
    return rot[(i + 1) % rot.size()];
}

Vertex PlaneGraph::prev_in_rotation(Vertex v, Vertex u) const {
    int i = rotation_index(v, u);
    if (i < 0) fail(Errc::InvalidArgument, "prev_in_rotation: not a neighbor");
    const auto& rot = rotation_[v];
    return rot[(i + rot.size() - 1) % rot.size()];
}

std::vector<std::pair<Vertex, Vertex>> PlaneGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : rotation_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

// Dart table: darts enumerated as (v, position in rotation[v]).
struct DartTable {
    const PlaneGraph& g;
    std::vector<int> offset;          // vertex -> first dart id
    std::vector<int> reverse;         // dart id -> id of the reversed dart
    int count = 0;

    explicit DartTable(const PlaneGraph& graph) : g(graph) {
        int n = g.vertex_count();
        offset.resize(n + 1, 0);
        for (Vertex v = 0; v < n; ++v) offset[v + 1] = offset[v] + g.degree(v);
        count = offset[n];
        reverse.assign(count, -1);
        for (Vertex v = 0; v < n; ++v) {
            auto nb = g.neighbors(v);
            for (int i = 0; i < static_cast<int>(nb.size()); ++i) {
                if (reverse[offset[v] + i] != -1) continue;
                Vertex w = nb[i];
                int j = g.rotation_index(w, v);
                assert(j >= 0);
                reverse[offset[v] + i] = offset[w] + j;
                reverse[offset[w] + j] = offset[v] + i;
            }
        }
    }

    Vertex tail(int d) const {
        // darts are grouped per tail; binary search the offset table
        auto it = std::upper_bound(offset.begin(), offset.end(), d);
        return static_cast<Vertex>(it - offset.begin() - 1);
    }
    Vertex head(int d) const {
        Vertex t = tail(d);
        return g.neighbors(t)[d - offset[t]];
    }
    // dart after d along its face: reverse, then rotation successor
    int face_next(int d) const {
        int r = reverse[d];
        Vertex v = tail(r);
        int i = r - offset[v];
        int deg = g.degree(v);
        return offset[v] + (i + 1) % deg;
    }
};

} // namespace

std::vector<FaceCycle> trace_faces(const PlaneGraph& g) {
    DartTable darts(g);
    std::vector<char> seen(darts.count, 0);
    std::vector<FaceCycle> out;
    for (int d0 = 0; d0 < darts.count; ++d0) {
        if (seen[d0]) continue;
        FaceCycle fc;
        int d = d0;
        do {
            seen[d] = 1;
            fc.verts.push_back(darts.tail(d));
            d = darts.face_next(d);
        } while (d != d0);
        out.push_back(std::move(fc));
    }
    return out;
}

std::vector<FaceCycle> faces(const PlaneGraph& g) {
    if (!is_connected(g)) fail(Errc::Disconnected, "faces: graph not connected");
    return trace_faces(g);
}

bool euler_ok(const PlaneGraph& g) {
    auto comps = connected_components(g);
    auto all = trace_faces(g);
    // Assign each face to the component of its first vertex.
    std::vector<int> comp_of(g.vertex_count(), -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (Vertex v : comps[c]) comp_of[v] = static_cast<int>(c);
    std::vector<std::int64_t> fcount(comps.size(), 0), ecount(comps.size(), 0);
    for (const auto& f : all) fcount[comp_of[f.verts[0]]]++;
    for (auto [u, v] : g.edges()) ecount[comp_of[u]]++;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        std::int64_t V = static_cast<std::int64_t>(comps[c].size());
        std::int64_t F = fcount[c] == 0 ? 1 : fcount[c]; // isolated vertex: one face
        if (V - ecount[c] + F != 2) return false;
    }
    return true;
}

std::vector<std::vector<Vertex>> connected_components(const PlaneGraph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        int c = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<Vertex> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            out[c].push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (comp[w] == -1) {
                    comp[w] = c;
                    stack.push_back(w);
                }
            }
        }
    }
    return out;
}

bool is_connected(const PlaneGraph& g) {
    return g.vertex_count() == 0 || connected_components(g).size() == 1;
}

namespace {

// Iterative Tarjan lowlink. Reports articulation vertices and, when
// `blocks` is non-null, the biconnected components as edge lists.
void tarjan_blocks(const PlaneGraph& g, std::vector<Vertex>* arts,
                   std::vector<std::vector<std::pair<Vertex, Vertex>>>* blocks) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), child_count(n, 0);
    std::vector<char> is_art(n, 0);
    std::vector<std::pair<Vertex, Vertex>> estack;
    int timer = 0;

    struct Frame {
        Vertex v;
        std::size_t next_nb;
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> stack{{root, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            auto& fr = stack.back();
            Vertex v = fr.v;
            auto nb = g.neighbors(v);
            if (fr.next_nb < nb.size()) {
                Vertex w = nb[fr.next_nb++];
                if (w == parent[v]) continue;
                if (disc[w] == -1) {
                    parent[w] = v;
                    ++child_count[v];
                    estack.emplace_back(v, w);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, 0});
                } else if (disc[w] < disc[v]) {
                    estack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                if (stack.empty()) break;
                Vertex p = stack.back().v;
                low[p] = std::min(low[p], low[v]);
                if (low[v] >= disc[p]) {
                    // p separates v's subtree: close a block
                    if (parent[p] != -1 || child_count[p] >= 2) is_art[p] = 1;
                    if (blocks) {
                        std::vector<std::pair<Vertex, Vertex>> blk;
                        while (!estack.empty()) {
                            auto e = estack.back();
                            estack.pop_back();
                            blk.push_back(e);
                            if (e.first == p && e.second == v) break;
                        }
                        blocks->push_back(std::move(blk));
                    } else {
                        while (!estack.empty()) {
                            auto e = estack.back();
                            estack.pop_back();
                            if (e.first == p && e.second == v) break;
                        }
                    }
                }
            }
        }
    }
    if (arts) {
        for (Vertex v = 0; v < n; ++v)
            if (is_art[v]) arts->push_back(v);
    }
}

} // namespace

std::vector<Vertex> articulation_points(const PlaneGraph& g) {
    std::vector<Vertex> arts;
    tarjan_blocks(g, &arts, nullptr);
    return arts;
}

std::vector<std::vector<std::pair<Vertex, Vertex>>> biconnected_components(const PlaneGraph& g) {
    std::vector<std::vector<std::pair<Vertex, Vertex>>> blocks;
    tarjan_blocks(g, nullptr, &blocks);
    return blocks;
}

bool is_two_connected(const PlaneGraph& g) {
    if (g.vertex_count() < 3) return false;
    if (!is_connected(g)) return false;
    return articulation_points(g).empty();
}

bool is_subcubic(const PlaneGraph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 3) return false;
    return true;
}

PlaneGraph subdivide_edge(const PlaneGraph& g, Vertex u, Vertex v, int k) {
    if (!g.has_edge(u, v)) fail(Errc::MissingEdge, "subdivide_edge: no such edge");
    if (k < 0) fail(Errc::InvalidArgument, "subdivide_edge: negative count");
    if (k == 0) return g;
    int n = g.vertex_count();
    std::vector<std::vector<Vertex>> rot(n + k);
    std::vector<std::int64_t> labels(n + k);
    std::int64_t next_label = 0;
    for (Vertex w = 0; w < n; ++w) {
        rot[w].assign(g.neighbors(w).begin(), g.neighbors(w).end());
        labels[w] = g.label(w);
        next_label = std::max(next_label, g.label(w) + 1);
    }
    Vertex first = n, last = n + k - 1;
    // Same rotation slots, so both sides of the edge keep their faces.
    std::replace(rot[u].begin(), rot[u].end(), v, first);
    std::replace(rot[v].begin(), rot[v].end(), u, last);
    for (int i = 0; i < k; ++i) {
        Vertex c = n + i;
        labels[c] = next_label++;
        rot[c] = {i == 0 ? u : c - 1, i == k - 1 ? v : c + 1};
    }
    return PlaneGraph::from_rotations(std::move(rot), std::move(labels));
}

} // namespace plum

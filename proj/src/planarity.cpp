#include "plum/planarity.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <set>

namespace plum {

namespace {

// ---------------------------------------------------------------------
// Demoucron-Malgrange-Pertuiset face insertion for a 2-connected graph.
//
// Keeps the partial embedding as its list of faces (vertex cycles; H is
// 2-connected throughout, so faces are simple cycles). Each round finds
// the fragments of H in G, their admissible faces, and embeds one
// fragment path into one face. A fragment with no admissible face
// certifies non-planarity. The final rotation system is reconstructed
// from the face walks.
// ---------------------------------------------------------------------
class BlockEmbedder {
public:
    BlockEmbedder(int n, const std::vector<std::vector<Vertex>>& adj) : n_(n), adj_(adj) {}

    // Returns rotation lists for the block's vertices (empty lists for
    // vertices outside the block).
    std::vector<std::vector<Vertex>> run() {
        std::size_t m = 0;
        std::vector<char> present(n_, 0);
        for (Vertex v = 0; v < n_; ++v) m += adj_[v].size();
        m /= 2;
        int nv = 0;
        for (Vertex v = 0; v < n_; ++v)
            if (!adj_[v].empty()) { present[v] = 1; ++nv; }
        if (nv >= 3 && m > 3 * static_cast<std::size_t>(nv) - 6)
            fail(Errc::NonPlanar, "edge count exceeds planar bound");

        init_cycle();
        while (embedded_edges_ < m) embed_one_fragment();

        // sigma(v->w) = next dart out of v; from phi(u->v) = (v->w):
        // sigma_v(u) = w for consecutive darts (u->v),(v->w) of a face.
        std::vector<std::map<Vertex, Vertex>> succ(n_);
        for (const auto& f : faces_) {
            std::size_t len = f.size();
            for (std::size_t i = 0; i < len; ++i) {
                Vertex u = f[i], v = f[(i + 1) % len], w = f[(i + 2) % len];
                succ[v][u] = w;
            }
        }
        std::vector<std::vector<Vertex>> rot(n_);
        for (Vertex v = 0; v < n_; ++v) {
            if (succ[v].empty()) continue;
            Vertex start = succ[v].begin()->first;
            Vertex cur = start;
            do {
                rot[v].push_back(cur);
                auto it = succ[v].find(cur);
                assert(it != succ[v].end());
                cur = it->second;
            } while (cur != start && rot[v].size() <= succ[v].size());
            if (rot[v].size() != succ[v].size())
                fail(Errc::NonPlanar, "rotation reconstruction failed");
        }
        return rot;
    }

private:
    int n_;
    const std::vector<std::vector<Vertex>>& adj_;
    std::vector<std::vector<Vertex>> faces_;
    std::vector<char> in_h_;
    std::set<std::pair<Vertex, Vertex>> h_edges_; // normalized u<v
    std::size_t embedded_edges_ = 0;

    static std::pair<Vertex, Vertex> norm(Vertex u, Vertex v) {
        return {std::min(u, v), std::max(u, v)};
    }

    void add_h_edge(Vertex u, Vertex v) {
        if (h_edges_.insert(norm(u, v)).second) ++embedded_edges_;
    }

    void init_cycle() {
        in_h_.assign(n_, 0);
        // Find any cycle by walking from the smallest non-isolated vertex.
        Vertex start = 0;
        while (adj_[start].empty()) ++start;
        std::vector<Vertex> path{start};
        std::vector<int> pos(n_, -1);
        pos[start] = 0;
        Vertex prev = -1, cur = start;
        for (;;) {
            Vertex nxt = -1;
            for (Vertex w : adj_[cur])
                if (w != prev) { nxt = w; break; }
            assert(nxt != -1); // min degree >= 2 in a 2-connected block
            if (pos[nxt] != -1) {
                std::vector<Vertex> cyc(path.begin() + pos[nxt], path.end());
                for (std::size_t i = 0; i < cyc.size(); ++i) {
                    in_h_[cyc[i]] = 1;
                    add_h_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
                }
                faces_.push_back(cyc);
                std::reverse(cyc.begin(), cyc.end());
                faces_.push_back(cyc);
                return;
            }
            pos[nxt] = static_cast<int>(path.size());
            path.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
    }

    struct Fragment {
        std::vector<Vertex> attachments;       // sorted H-vertices
        std::vector<Vertex> inner;             // component of G - V(H), empty for a chord
        std::pair<Vertex, Vertex> chord{-1, -1};
        std::vector<int> admissible;           // face indices
    };

    bool face_contains_all(const std::vector<Vertex>& face, const std::vector<Vertex>& want) const {
        for (Vertex a : want)
            if (std::find(face.begin(), face.end(), a) == face.end()) return false;
        return true;
    }

    std::vector<Fragment> fragments() const {
        std::vector<Fragment> out;
        // chords
        for (Vertex u = 0; u < n_; ++u) {
            if (!in_h_[u]) continue;
            for (Vertex v : adj_[u]) {
                if (u >= v || !in_h_[v]) continue;
                if (h_edges_.count(norm(u, v))) continue;
                Fragment f;
                f.attachments = {u, v};
                f.chord = {u, v};
                out.push_back(std::move(f));
            }
        }
        // components of G - V(H) with their attachments
        std::vector<int> comp(n_, -1);
        for (Vertex s = 0; s < n_; ++s) {
            if (in_h_[s] || adj_[s].empty() || comp[s] != -1) continue;
            Fragment f;
            std::set<Vertex> att;
            comp[s] = 1;
            std::vector<Vertex> stack{s};
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                f.inner.push_back(v);
                for (Vertex w : adj_[v]) {
                    if (in_h_[w]) {
                        att.insert(w);
                    } else if (comp[w] == -1) {
                        comp[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
            f.attachments.assign(att.begin(), att.end());
            out.push_back(std::move(f));
        }
        return out;
    }

    // Path through the fragment between two distinct attachments, with
    // no internal vertex in H.
    std::vector<Vertex> alpha_path(const Fragment& f) const {
        if (f.chord.first != -1) return {f.chord.first, f.chord.second};
        assert(f.attachments.size() >= 2); // guaranteed by 2-connectivity
        Vertex a = f.attachments[0];
        // BFS from a through the fragment to any other attachment.
        std::vector<Vertex> parent(n_, -2);
        std::vector<Vertex> queue;
        parent[a] = -1;
        queue.push_back(a);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            Vertex v = queue[qi];
            for (Vertex w : adj_[v]) {
                if (parent[w] != -2) continue;
                if (in_h_[w]) {
                    if (v == a) continue; // a->w direct would be a chord of H, different fragment
                    if (w == a) continue;
                    parent[w] = v;
                    std::vector<Vertex> path{w};
                    for (Vertex x = v; x != -1; x = parent[x]) path.push_back(x);
                    std::reverse(path.begin(), path.end());
                    return path; // a ... w
                }
                parent[w] = v;
                queue.push_back(w);
            }
        }
        fail(Errc::NonPlanar, "fragment path extraction failed");
    }

    void embed_one_fragment() {
        auto frags = fragments();
        assert(!frags.empty());
        for (auto& f : frags) {
            for (int fi = 0; fi < static_cast<int>(faces_.size()); ++fi)
                if (face_contains_all(faces_[fi], f.attachments)) f.admissible.push_back(fi);
            if (f.admissible.empty()) fail(Errc::NonPlanar, "fragment with no admissible face");
        }
        int pick = 0;
        for (int i = 0; i < static_cast<int>(frags.size()); ++i)
            if (frags[i].admissible.size() == 1) { pick = i; break; }
        const Fragment& f = frags[pick];
        int fi = f.admissible.front();
        auto path = alpha_path(f);
        embed_path(fi, path);
    }

    void embed_path(int face_idx, const std::vector<Vertex>& path) {
        std::vector<Vertex> face = faces_[face_idx];
        Vertex a = path.front(), b = path.back();
        auto ita = std::find(face.begin(), face.end(), a);
        auto itb = std::find(face.begin(), face.end(), b);
        assert(ita != face.end() && itb != face.end());
        std::size_t ia = ita - face.begin(), ib = itb - face.begin(), len = face.size();
        // arc1: a..b along the walk, arc2: b..a
        std::vector<Vertex> arc1, arc2;
        for (std::size_t i = ia; i != ib; i = (i + 1) % len) arc1.push_back(face[i]);
        arc1.push_back(b);
        for (std::size_t i = ib; i != ia; i = (i + 1) % len) arc2.push_back(face[i]);
        arc2.push_back(a);
        // face1 = arc1 + reversed path interior; face2 = arc2 + path interior
        std::vector<Vertex> f1 = arc1, f2 = arc2;
        for (std::size_t i = path.size() - 2; i >= 1; --i) f1.push_back(path[i]);
        for (std::size_t i = 1; i + 1 < path.size(); ++i) f2.push_back(path[i]);
        faces_[face_idx] = std::move(f1);
        faces_.push_back(std::move(f2));
        for (std::size_t i = 0; i + 1 < path.size(); ++i) add_h_edge(path[i], path[i + 1]);
        for (Vertex v : path) in_h_[v] = 1;
    }
};

} // namespace

PlaneGraph planar_embed(const std::vector<std::vector<Vertex>>& adjacency,
                        const std::vector<std::int64_t>& labels) {
    int n = static_cast<int>(adjacency.size());
    std::vector<std::vector<Vertex>> rot(n);

    // Embed each biconnected block separately, then splice the blocks'
    // rotation cycles together at shared vertices (gluing spheres at a
    // cutvertex keeps the union planar).
    PlaneGraph flat;
    for (int i = 0; i < n; ++i) flat.add_vertex(labels.empty() ? i : labels[i]);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : adjacency[v])
            if (v < w) flat.add_edge(v, w);

    auto blocks = biconnected_components(flat);
    for (const auto& blk : blocks) {
        std::vector<std::vector<Vertex>> badj(n);
        for (auto [u, v] : blk) {
            badj[u].push_back(v);
            badj[v].push_back(u);
        }
        std::vector<std::vector<Vertex>> brot;
        if (blk.size() == 1) {
            auto [u, v] = blk[0];
            brot.assign(n, {});
            brot[u] = {v};
            brot[v] = {u};
        } else {
            BlockEmbedder be(n, badj);
            brot = be.run();
        }
        for (Vertex v = 0; v < n; ++v)
            rot[v].insert(rot[v].end(), brot[v].begin(), brot[v].end());
    }
    return PlaneGraph::from_rotations(std::move(rot), labels);
}

bool is_planar(const std::vector<std::vector<Vertex>>& adjacency) {
    try {
        planar_embed(adjacency, {});
        return true;
    } catch (const Error& e) {
        if (e.code() == Errc::NonPlanar) return false;
        throw;
    }
}

PlaneGraph build_embedding(const std::vector<std::int64_t>& vertex_labels,
                           const std::vector<std::pair<int, int>>& edge_list,
                           const std::vector<std::vector<int>>& rotation) {
    int n = static_cast<int>(vertex_labels.size());
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(Errc::InvalidArgument, "edge endpoint out of range");
        if (u == v) fail(Errc::InvalidArgument, "loop edge");
    }
    if (!rotation.empty()) {
        if (static_cast<int>(rotation.size()) != n)
            fail(Errc::InvalidRotation, "rotation must cover every vertex");
        std::vector<std::vector<Vertex>> rot(n);
        for (int v = 0; v < n; ++v)
            for (int w : rotation[v]) rot[v].push_back(w);
        PlaneGraph g = [&] {
            try {
                return PlaneGraph::from_rotations(std::move(rot), vertex_labels);
            } catch (const Error&) {
                fail(Errc::InvalidRotation, "rotation lists are not a valid adjacency");
            }
        }();
        // rotation must mention exactly the listed edges
        std::set<std::pair<Vertex, Vertex>> want;
        for (auto [u, v] : edge_list) want.insert({std::min(u, v), std::max(u, v)});
        auto got = g.edges();
        if (got.size() != want.size()) fail(Errc::InvalidRotation, "rotation edges mismatch");
        for (auto [u, v] : got)
            if (!want.count({std::min(u, v), std::max(u, v)}))
                fail(Errc::InvalidRotation, "rotation edges mismatch");
        if (!euler_ok(g)) fail(Errc::InvalidRotation, "rotation is not planar (Euler check)");
        return g;
    }
    std::vector<std::vector<Vertex>> adj(n);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edge_list) {
        auto key = std::make_pair(std::min(u, v), std::max(u, v));
        if (!seen.insert(key).second) fail(Errc::InvalidArgument, "parallel edge");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    PlaneGraph g = planar_embed(adj, vertex_labels);
    assert(euler_ok(g));
    return g;
}

} // namespace plum

#include "plum/embed.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "plum/ears.hpp"
#include "plum/reduce.hpp"
#include "plum/routing.hpp"

namespace plum {

namespace {

// ---------------------------------------------------------------------
// Input-side plan: ear decomposition plus the tree of prefix faces.
// Node 0/1 are the two faces of the base cycle; every ear splits the
// node it lies in. All of it is combinatorics of the input embedding,
// independent of the host.
// ---------------------------------------------------------------------

struct PlanNode {
    std::vector<Vertex> walk; // oriented boundary cycle
    int parent = -1;
    int child_a = -1; // arc x..y plus reversed ear inter; gets the ear
    int child_b = -1; // arc y..x plus ear interior
    int split_ear = -1;
};

struct Plan {
    EarDecomposition dec;
    std::vector<PlanNode> nodes;
    std::vector<int> ear_node; // per ear: the node it splits

    bool in_subtree(int node, int descendant) const {
        for (int x = descendant; x != -1; x = nodes[x].parent)
            if (x == node) return true;
        return false;
    }

    // boundary vertices of `node` that are ends of ears >= from_ear
    // located inside the node's region
    std::vector<Vertex> pending_terminals(int node, int from_ear) const {
        std::set<Vertex> walk_set(nodes[node].walk.begin(), nodes[node].walk.end());
        std::set<Vertex> out;
        for (int j = from_ear; j < static_cast<int>(dec.ears.size()); ++j) {
            if (!in_subtree(node, ear_node[j])) continue;
            for (Vertex end : {dec.ears[j].path.front(), dec.ears[j].path.back()})
                if (walk_set.count(end)) out.insert(end);
        }
        return {out.begin(), out.end()};
    }
};

// cyclic sequence equality, same direction
bool cyclic_equal(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    if (a.size() != b.size() || a.empty()) return a.size() == b.size();
    auto it = std::find(b.begin(), b.end(), a[0]);
    while (it != b.end()) {
        std::size_t off = it - b.begin();
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i)
            ok = a[i] == b[(off + i) % b.size()];
        if (ok) return true;
        it = std::find(it + 1, b.end(), a[0]);
    }
    return false;
}

Plan make_plan(const PlaneGraph& g, const EmbedOptions& opt) {
    Plan plan;
    plan.dec = ear_decomposition(g, opt.ear_seed);

    PlanNode n0, n1;
    n0.walk = plan.dec.base_cycle;
    n1.walk = plan.dec.base_cycle;
    std::reverse(n1.walk.begin(), n1.walk.end());
    plan.nodes.push_back(std::move(n0));
    plan.nodes.push_back(std::move(n1));

    std::vector<int> active{0, 1};
    plan.ear_node.assign(plan.dec.ears.size(), -1);

    for (int k = 0; k < static_cast<int>(plan.dec.ears.size()); ++k) {
        const Ear& ear = plan.dec.ears[k];
        int where = -1;
        for (int id : active)
            if (cyclic_equal(ear.face.verts, plan.nodes[id].walk)) {
                where = id;
                break;
            }
        if (where == -1)
            fail(Errc::InternalOrderViolation, "located ear face missing from the face tree");
        plan.ear_node[k] = where;

        const auto& walk = plan.nodes[where].walk;
        Vertex x = ear.path.front(), y = ear.path.back();
        int len = static_cast<int>(walk.size());
        int px = -1, py = -1;
        for (int i = 0; i < len; ++i) {
            if (walk[i] == x) px = i;
            if (walk[i] == y) py = i;
        }
        assert(px >= 0 && py >= 0 && px != py);

        PlanNode a, b;
        for (int i = px; i != py; i = (i + 1) % len) a.walk.push_back(walk[i]);
        a.walk.push_back(y);
        for (std::size_t i = ear.path.size() - 2; i >= 1; --i) a.walk.push_back(ear.path[i]);
        for (int i = py; i != px; i = (i + 1) % len) b.walk.push_back(walk[i]);
        b.walk.push_back(x);
        for (std::size_t i = 1; i + 1 < ear.path.size(); ++i) b.walk.push_back(ear.path[i]);
        a.parent = b.parent = where;

        int ia = static_cast<int>(plan.nodes.size());
        plan.nodes[where].child_a = ia;
        plan.nodes[where].child_b = ia + 1;
        plan.nodes[where].split_ear = k;
        plan.nodes.push_back(std::move(a));
        plan.nodes.push_back(std::move(b));
        active.erase(std::find(active.begin(), active.end(), where));
        active.push_back(ia);
        active.push_back(ia + 1);
    }
    return plan;
}

// ---------------------------------------------------------------------
// Host-side state
// ---------------------------------------------------------------------

struct HostFace {
    FaceId face;
    bool has_diam = false;
    int lo = 0, hi = 0; // normalized diameter ends
    int side = 0;       // 0 = children [lo,hi), 1 = rest
    std::vector<Vertex> boundary;                 // slice boundary cycle
    std::set<std::pair<Vertex, Vertex>> banned;   // its edges (not part of the slice)
    std::map<Vertex, Vertex> terminals;           // input vertex -> host vertex
};

std::pair<Vertex, Vertex> norm_edge(Vertex a, Vertex b) {
    return {std::min(a, b), std::max(a, b)};
}

class Embedder {
public:
    Embedder(const PlaneGraph& g, const EmbedOptions& opt)
        : g_(g), opt_(opt), uni_(std::make_shared<Universe>(opt.vertex_cap)) {}

    EmbedResult run() {
        if (g_.vertex_count() < 3) fail(Errc::InvalidArgument, "embed needs at least 3 vertices");
        if (!is_two_connected(g_)) fail(Errc::NotTwoConnected, "embed needs a 2-connected input");
        if (!is_subcubic(g_)) fail(Errc::InvalidArgument, "embed needs a sub-cubic input");

        plan_ = make_plan(g_, opt_);
        embed_base();
        snapshot(0);
        for (int k = 0; k < static_cast<int>(plan_.dec.ears.size()); ++k) {
            embed_ear(k);
            snapshot(k + 1);
        }

        EmbedResult res;
        res.universe = uni_;
        res.deepest_level = deepest_;
        for (auto& [v, path] : phi_v_) {
            auto& set = res.model.branch_sets[g_.label(v)];
            for (Vertex hv : path) set.push_back(uni_->address_of(hv));
        }
        for (auto& [e, path] : phi_e_) {
            std::int64_t la = g_.label(e.first), lb = g_.label(e.second);
            auto key = std::minmax(la, lb);
            std::vector<Vertex> oriented = path;
            if (la > lb) std::reverse(oriented.begin(), oriented.end());
            auto& out = res.model.branch_paths[{key.first, key.second}];
            for (Vertex hv : oriented) out.push_back(uni_->address_of(hv));
        }
        res.steps = std::move(steps_);
        return res;
    }

private:
    const PlaneGraph& g_;
    EmbedOptions opt_;
    std::shared_ptr<Universe> uni_;
    Plan plan_;

    std::vector<char> used_;
    std::map<Vertex, std::vector<Vertex>> phi_v_;
    std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> phi_e_; // key: dense pair, path key.first -> key.second
    std::map<int, HostFace> active_; // plan node -> host slice
    int deepest_ = 0;
    std::vector<EmbedStep> steps_;
    std::set<std::pair<Vertex, Vertex>> covered_; // prefix edges (dense, normalized)

    bool used(Vertex v) const { return v < static_cast<Vertex>(used_.size()) && used_[v]; }
    void mark_used(Vertex v) {
        if (v >= static_cast<Vertex>(used_.size())) used_.resize(v + 1, 0);
        used_[v] = 1;
    }

    void put_edge(Vertex u, Vertex v, std::vector<Vertex> path_from_u) {
        assert(!path_from_u.empty());
        auto key = norm_edge(u, v);
        if (u > v) std::reverse(path_from_u.begin(), path_from_u.end());
        phi_e_[key] = std::move(path_from_u);
        covered_.insert(key);
    }

    void extend_branch(Vertex v, const std::vector<Vertex>& grown) {
        auto& path = phi_v_[v];
        assert(!path.empty() && !grown.empty());
        if (grown.front() == path.back()) {
            path.insert(path.end(), grown.begin() + 1, grown.end());
        } else {
            assert(grown.front() == path.front());
            std::reverse(path.begin(), path.end());
            path.insert(path.end(), grown.begin() + 1, grown.end());
        }
    }

    // ----------------------------------------------------------------
    // shared helpers
    // ----------------------------------------------------------------

    std::vector<Vertex> boundary_cycle(const FaceId& f) const {
        return uni_->face(f).boundary;
    }

    static std::set<std::pair<Vertex, Vertex>> cycle_edges(const std::vector<Vertex>& cyc) {
        std::set<std::pair<Vertex, Vertex>> out;
        for (std::size_t i = 0; i < cyc.size(); ++i)
            out.insert(norm_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
        return out;
    }

    // does a materialized host vertex belong to the slice region of hf
    // (strict interior; boundary handled separately)?
    bool inside_slice(const HostFace& hf, const GAddress& a) const {
        if (!address_inside_region(a, hf.face)) return false;
        if (!hf.has_diam) return true;
        int ci = address_child_index(a, hf.face);
        if (ci == -1) {
            if (a.kind == GAddress::Kind::Center) return false; // on the diameter
            int s = a.spoke;
            if (s == hf.lo || s == hf.hi) return false; // on the diameter
            bool in0 = hf.lo < s && s < hf.hi;
            return hf.side == 0 ? in0 : !in0;
        }
        bool in0 = hf.lo <= ci && ci < hf.hi;
        return hf.side == 0 ? in0 : !in0;
    }

    // expand the descent chain from the slice face to target_level and
    // one ring of children around every chain face; returns the target
    FaceId corridor(const HostFace& hf, int target_level) {
        uni_->ensure_expanded(hf.face);
        int m = static_cast<int>(uni_->face(hf.face).boundary.size());
        int first = 0;
        if (hf.has_diam) first = hf.side == 0 ? hf.lo : hf.hi;
        // ring at the top: children of the slice face on our side
        for (int k = 0; k < m; ++k) {
            bool in0 = hf.lo <= k && k < hf.hi;
            bool ours = !hf.has_diam || (hf.side == 0 ? in0 : !in0);
            if (!ours) continue;
            const FaceId child = hf.face.child(k);
            if (!uni_->face(child).expanded && child.depth() < target_level)
                uni_->ensure_expanded(child);
        }
        FaceId cur = hf.face.child(first);
        while (cur.depth() < target_level) {
            uni_->ensure_expanded(cur);
            int cm = static_cast<int>(uni_->face(cur).boundary.size());
            for (int k = 0; k < cm; ++k) {
                const FaceId child = cur.child(k);
                if (child.depth() < target_level && !uni_->face(child).expanded)
                    uni_->ensure_expanded(child);
            }
            cur = cur.child(0);
        }
        uni_->ensure_expanded(cur); // target's wheel carries the diameters
        return cur;
    }

    RoutingView make_view(const HostFace& hf, const FaceId& f_target,
                          const std::vector<Vertex>& sources) {
        const PlaneGraph& host = uni_->graph();
        RoutingView view;
        view.host = &host;
        view.allowed.assign(host.vertex_count(), 0);
        for (Vertex v = 0; v < host.vertex_count(); ++v) {
            if (used(v)) continue;
            const GAddress& a = uni_->address_of(v);
            if (!inside_slice(hf, a)) continue;
            if (address_inside_region(a, f_target)) continue;
            view.allowed[v] = 1;
        }
        for (Vertex b : hf.boundary)
            if (!used(b)) view.allowed[b] = 1;
        for (Vertex s : sources) view.allowed[s] = 1; // terminals are used but usable as starts
        auto banned = hf.banned;
        view.edge_banned = [banned](Vertex a, Vertex b) {
            return banned.count(norm_edge(a, b)) != 0;
        };
        return view;
    }

    void snapshot(int after_steps) {
        if (!opt_.validate_steps) return;
        // prefix graph on covered edges
        std::vector<Vertex> verts;
        std::vector<char> present(g_.vertex_count(), 0);
        for (auto [a, b] : covered_) present[a] = present[b] = 1;
        std::vector<Vertex> remap(g_.vertex_count(), kNoVertex);
        std::vector<std::vector<Vertex>> rot;
        std::vector<std::int64_t> labels;
        for (Vertex v = 0; v < g_.vertex_count(); ++v) {
            if (!present[v]) continue;
            remap[v] = static_cast<Vertex>(rot.size());
            rot.emplace_back();
            labels.push_back(g_.label(v));
        }
        for (Vertex v = 0; v < g_.vertex_count(); ++v) {
            if (!present[v]) continue;
            for (Vertex w : g_.neighbors(v))
                if (present[w] && covered_.count(norm_edge(v, w)))
                    rot[remap[v]].push_back(remap[w]);
        }
        EmbedStep st;
        st.prefix = PlaneGraph::from_rotations(std::move(rot), std::move(labels));
        for (const auto& [v, path] : phi_v_) {
            auto& set = st.partial.branch_sets[g_.label(v)];
            for (Vertex hv : path) set.push_back(uni_->address_of(hv));
        }
        for (const auto& [e, path] : phi_e_) {
            std::int64_t la = g_.label(e.first), lb = g_.label(e.second);
            auto key = std::minmax(la, lb);
            std::vector<Vertex> oriented = path;
            if (la > lb) std::reverse(oriented.begin(), oriented.end());
            auto& out = st.partial.branch_paths[{key.first, key.second}];
            for (Vertex hv : oriented) out.push_back(uni_->address_of(hv));
        }
        steps_.push_back(std::move(st));
        (void)after_steps;

        // slice containment: every registered terminal is the single
        // vertex its branch path has inside the slice
        for (const auto& [node, hf] : active_) {
            std::set<Vertex> bset(hf.boundary.begin(), hf.boundary.end());
            for (const auto& [iv, term] : hf.terminals) {
                auto it = phi_v_.find(iv);
                if (it == phi_v_.end()) continue;
                int hits = 0;
                for (Vertex hv : it->second) {
                    bool in_slice = bset.count(hv) || inside_slice(hf, uni_->address_of(hv));
                    if (in_slice) {
                        ++hits;
                        if (hv != term)
                            fail(Errc::InternalOrderViolation,
                                 "branch path touches its slice away from the terminal");
                    }
                }
                if (hits != 1)
                    fail(Errc::InternalOrderViolation,
                         "branch path must meet its slice exactly once");
            }
        }
    }

    // ----------------------------------------------------------------
    // base case
    // ----------------------------------------------------------------

    void embed_base() {
        int l0 = static_cast<int>(plan_.dec.base_cycle.size());
        int piece_level = l0 - 2;
        FaceId P{0, {}};
        for (int i = 0; i < piece_level; ++i) P = P.child(0);

        uni_->ensure_expanded(P);
        int m = static_cast<int>(uni_->face(P).boundary.size());
        for (int k = 0; k < m; ++k) uni_->ensure_expanded(P.child(k));
        FaceId fc0 = P.child(0).child(2);
        FaceId fc1 = P.child(2).child(2);

        std::vector<Vertex> C0 = boundary_cycle(fc0);
        std::vector<Vertex> C1 = boundary_cycle(fc1);
        {
            std::set<Vertex> s0(C0.begin(), C0.end());
            for (Vertex v : C1) assert(!s0.count(v));
        }

        const std::set<Vertex> piece_boundary(uni_->face(P).boundary.begin(),
                                              uni_->face(P).boundary.end());
        PathSet paths;
        bool routed = false;
        for (int attempt = 0; attempt <= opt_.max_extra_depth && !routed; ++attempt) {
            const PlaneGraph& host = uni_->graph();
            RoutingView view;
            view.host = &host;
            view.allowed.assign(host.vertex_count(), 0);
            for (Vertex v = 0; v < host.vertex_count(); ++v) {
                const GAddress& a = uni_->address_of(v);
                bool inside = address_inside_region(a, P) || piece_boundary.count(v);
                if (!inside) continue;
                if (address_inside_region(a, fc0) || address_inside_region(a, fc1)) continue;
                view.allowed[v] = 1;
            }
            for (Vertex v : C0) view.allowed[v] = 1;
            for (Vertex v : C1) view.allowed[v] = 1;
            auto res = disjoint_paths(view, C0, C1, l0);
            if (auto* ps = std::get_if<PathSet>(&res)) {
                paths = std::move(*ps);
                routed = true;
                break;
            }
            // deepen: one more ring inside the piece, away from both
            // protected face regions
            std::vector<FaceId> leaves = uni_->leaf_faces();
            bool grown = false;
            for (const FaceId& leaf : leaves) {
                if (!P.is_prefix_of(leaf)) continue;
                if (fc0.is_prefix_of(leaf) || fc1.is_prefix_of(leaf)) continue;
                uni_->ensure_expanded(leaf);
                grown = true;
            }
            if (!grown) break;
        }
        if (!routed) fail(Errc::DepthCapExceeded, "base-case routing failed at the depth cap");

        // order the paths along C0 and map the base cycle onto them
        std::map<Vertex, int> pos0;
        for (int i = 0; i < static_cast<int>(C0.size()); ++i) pos0[C0[i]] = i;
        std::sort(paths.paths.begin(), paths.paths.end(),
                  [&](const auto& a, const auto& b) { return pos0.at(a.front()) < pos0.at(b.front()); });

        const auto& base = plan_.dec.base_cycle;
        HostFace h0, h1;
        h0.face = fc0;
        h0.boundary = C0;
        h0.banned = cycle_edges(C0);
        h1.face = fc1;
        h1.boundary = C1;
        h1.banned = cycle_edges(C1);

        for (int i = 0; i < l0; ++i) {
            Vertex w = base[i];
            phi_v_[w] = paths.paths[i];
            for (Vertex hv : paths.paths[i]) mark_used(hv);
            h0.terminals[w] = paths.paths[i].front();
            h1.terminals[w] = paths.paths[i].back();
        }
        for (Vertex hv : C0) mark_used(hv);

        // edges of the base cycle: the C0 arcs between consecutive marks
        int n0 = static_cast<int>(C0.size());
        for (int i = 0; i < l0; ++i) {
            Vertex wu = base[i], wv = base[(i + 1) % l0];
            int from = pos0.at(h0.terminals[wu]);
            int to = pos0.at(h0.terminals[wv]);
            std::vector<Vertex> arc;
            for (int p = from; p != to; p = (p + 1) % n0) arc.push_back(C0[p]);
            arc.push_back(C0[to]);
            put_edge(wu, wv, std::move(arc));
        }
        active_[0] = std::move(h0);
        active_[1] = std::move(h1);
        deepest_ = l0;
    }

    // ----------------------------------------------------------------
    // inductive step
    // ----------------------------------------------------------------

    void embed_ear(int k) {
        const Ear& ear = plan_.dec.ears[k];
        int node = plan_.ear_node[k];
        auto hf_it = active_.find(node);
        if (hf_it == active_.end())
            fail(Errc::InternalOrderViolation, "ear's face has no active slice");
        HostFace hf = std::move(hf_it->second);
        active_.erase(hf_it);

        Vertex x = ear.path.front(), y = ear.path.back();
        int L = static_cast<int>(ear.path.size()) - 1;
        int l = static_cast<int>(plan_.nodes[node].walk.size());
        int N = std::max(2 * L + l - 3, hf.face.depth() + 1);

        std::vector<Vertex> vf = plan_.pending_terminals(node, k);
        assert(std::find(vf.begin(), vf.end(), x) != vf.end());
        assert(std::find(vf.begin(), vf.end(), y) != vf.end());

        std::vector<Vertex> sources;
        std::map<Vertex, Vertex> source_owner; // host terminal -> input vertex
        for (Vertex v : vf) {
            auto it = hf.terminals.find(v);
            if (it == hf.terminals.end())
                fail(Errc::InternalOrderViolation, "missing terminal for a pending ear end");
            sources.push_back(it->second);
            source_owner[it->second] = v;
        }
        int kpaths = static_cast<int>(sources.size());

        PathSet paths;
        FaceId f_target;
        bool routed = false;
        for (int r = 0; r <= opt_.max_extra_depth && !routed; ++r) {
            f_target = corridor(hf, N + r);
            std::vector<Vertex> sinks;
            for (Vertex b : boundary_cycle(f_target))
                if (!used(b)) sinks.push_back(b);
            if (static_cast<int>(sinks.size()) < kpaths) continue;
            RoutingView view = make_view(hf, f_target, sources);
            auto res = disjoint_paths(view, sources, sinks, kpaths);
            if (auto* ps = std::get_if<PathSet>(&res)) {
                paths = std::move(*ps);
                routed = true;
            }
        }
        if (!routed) fail(Errc::DepthCapExceeded, "ear routing failed at the depth cap");

        // landings
        std::vector<Vertex> fb = boundary_cycle(f_target);
        std::map<Vertex, int> fpos;
        for (int i = 0; i < static_cast<int>(fb.size()); ++i) fpos[fb[i]] = i;
        std::map<Vertex, const std::vector<Vertex>*> path_of; // input vertex -> routed path
        for (const auto& p : paths.paths) path_of[source_owner.at(p.front())] = &p;

        int ix = fpos.at(path_of.at(x)->back());
        int iy = fpos.at(path_of.at(y)->back());

        // the diameter, oriented from p(x) to p(y)
        std::vector<Vertex> D = uni_->diameter(f_target, ix, iy);
        int lo = std::min(ix, iy), hi = std::max(ix, iy);

        // which host side does each routed non-end vertex land on
        auto host_side = [&](int pos) {
            bool in0 = lo < pos && pos < hi;
            return in0 ? 0 : 1;
        };
        // which input arc is each on: 0 = strictly between x..y along the
        // walk (childA), 1 = strictly between y..x (childB)
        const auto& walk = plan_.nodes[node].walk;
        int len = static_cast<int>(walk.size());
        int px = -1, py = -1;
        for (int i = 0; i < len; ++i) {
            if (walk[i] == x) px = i;
            if (walk[i] == y) py = i;
        }
        std::map<Vertex, int> input_arc;
        for (int i = (px + 1) % len; i != py; i = (i + 1) % len) input_arc[walk[i]] = 0;
        for (int i = (py + 1) % len; i != px; i = (i + 1) % len) input_arc[walk[i]] = 1;

        int side_of_arc0 = -1;
        for (Vertex v : vf) {
            if (v == x || v == y) continue;
            int arc = input_arc.at(v);
            int side = host_side(fpos.at(path_of.at(v)->back()));
            int expect_for_arc0 = arc == 0 ? side : 1 - side;
            if (side_of_arc0 == -1)
                side_of_arc0 = expect_for_arc0;
            else if (side_of_arc0 != expect_for_arc0)
                fail(Errc::InternalOrderViolation,
                     "terminal landings straddle the diameter inconsistently");
        }
        if (side_of_arc0 == -1) side_of_arc0 = 0;

        if (opt_.validate_steps) check_landing_order(hf, vf, path_of, fpos, source_owner);

        // budget: |V_F'| + |V_F''| <= 2L + l
        {
            int va = static_cast<int>(plan_.pending_terminals(plan_.nodes[node].child_a, k + 1).size());
            int vb = static_cast<int>(plan_.pending_terminals(plan_.nodes[node].child_b, k + 1).size());
            assert(va + vb <= 2 * L + l);
            (void)va;
            (void)vb;
        }

        // extend the branch paths of every routed vertex
        for (Vertex v : vf) {
            const auto& p = *path_of.at(v);
            extend_branch(v, p);
            for (Vertex hv : p) mark_used(hv);
        }

        // place the ear's interior on the diameter, evenly spread
        int dn = static_cast<int>(D.size());
        std::vector<int> spot(L + 1, 0);
        spot[0] = 0;
        spot[L] = dn - 1;
        for (int t = 1; t < L; ++t) {
            spot[t] = t * (dn - 1) / L;
            assert(spot[t] > spot[t - 1] && spot[t] < dn - 1);
        }
        for (int t = 1; t < L; ++t) {
            Vertex u = ear.path[t];
            phi_v_[u] = {D[spot[t]]};
        }
        for (int t = 0; t < L; ++t) {
            std::vector<Vertex> seg(D.begin() + spot[t], D.begin() + spot[t + 1] + 1);
            put_edge(ear.path[t], ear.path[t + 1], std::move(seg));
        }
        for (Vertex hv : D) mark_used(hv);
        deepest_ = std::max(deepest_, f_target.depth() + 1);

        // carve the two child slices out of f_target
        HostFace ha = make_side_face(f_target, fb, D, lo, hi, side_of_arc0);
        HostFace hb = make_side_face(f_target, fb, D, lo, hi, 1 - side_of_arc0);
        for (Vertex v : vf) {
            if (v == x || v == y) continue;
            Vertex land = path_of.at(v)->back();
            (input_arc.at(v) == 0 ? ha : hb).terminals[v] = land;
        }
        ha.terminals[x] = hb.terminals[x] = path_of.at(x)->back();
        ha.terminals[y] = hb.terminals[y] = path_of.at(y)->back();
        for (int t = 1; t < L; ++t) {
            ha.terminals[ear.path[t]] = D[spot[t]];
            hb.terminals[ear.path[t]] = D[spot[t]];
        }
        active_[plan_.nodes[node].child_a] = std::move(ha);
        active_[plan_.nodes[node].child_b] = std::move(hb);
    }

    HostFace make_side_face(const FaceId& f, const std::vector<Vertex>& fb,
                            const std::vector<Vertex>& D, int lo, int hi, int side) {
        HostFace h;
        h.face = f;
        h.has_diam = true;
        h.lo = lo;
        h.hi = hi;
        h.side = side;
        int m = static_cast<int>(fb.size());
        std::vector<Vertex>& cyc = h.boundary;
        if (side == 0) {
            for (int i = lo; i <= hi; ++i) cyc.push_back(fb[i]);
        } else {
            for (int i = hi; i != lo; i = (i + 1) % m) cyc.push_back(fb[i]);
            cyc.push_back(fb[lo]);
        }
        // close with the diameter's interior, walking back toward the start
        // (D runs p(x) -> p(y); align by matching the arc's far end)
        std::vector<Vertex> dint(D.begin() + 1, D.end() - 1);
        if (D.back() == cyc.back()) {
            for (auto it = dint.rbegin(); it != dint.rend(); ++it) cyc.push_back(*it);
        } else {
            assert(D.front() == cyc.back());
            for (Vertex v : dint) cyc.push_back(v);
        }
        h.banned = cycle_edges(cyc);
        return h;
    }

    void check_landing_order(const HostFace& hf, const std::vector<Vertex>& vf,
                             const std::map<Vertex, const std::vector<Vertex>*>& path_of,
                             const std::map<Vertex, int>& fpos,
                             const std::map<Vertex, Vertex>& source_owner) {
        (void)source_owner;
        std::map<Vertex, int> bpos;
        for (int i = 0; i < static_cast<int>(hf.boundary.size()); ++i) bpos[hf.boundary[i]] = i;
        std::vector<Vertex> by_terminal = vf, by_landing = vf;
        std::sort(by_terminal.begin(), by_terminal.end(), [&](Vertex a, Vertex b) {
            return bpos.at(hf.terminals.at(a)) < bpos.at(hf.terminals.at(b));
        });
        std::sort(by_landing.begin(), by_landing.end(), [&](Vertex a, Vertex b) {
            return fpos.at(path_of.at(a)->back()) < fpos.at(path_of.at(b)->back());
        });
        std::vector<Vertex> rev = by_landing;
        std::reverse(rev.begin(), rev.end());
        if (!cyclic_equal(by_terminal, by_landing) && !cyclic_equal(by_terminal, rev))
            fail(Errc::InternalOrderViolation, "landing order breaks the terminal cyclic order");
    }
};

// ---------------------------------------------------------------------
// projection for embed_any
// ---------------------------------------------------------------------

std::vector<GAddress> prune_branch_set(Universe& uni, const std::vector<GAddress>& set,
                                       const std::vector<GAddress>& attachments) {
    if (set.size() <= 1) return set;
    std::map<Vertex, GAddress> verts;
    for (const GAddress& a : set) verts.emplace(uni.require_vertex(a), a);
    std::vector<Vertex> att;
    for (const GAddress& a : attachments) att.push_back(uni.require_vertex(a));
    std::sort(att.begin(), att.end());
    att.erase(std::unique(att.begin(), att.end()), att.end());
    if (att.empty()) {
        auto smallest = std::min_element(
            verts.begin(), verts.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
        return {smallest->second};
    }
    // BFS tree over the set from one attachment; keep the tree paths to
    // the other attachments
    const PlaneGraph& host = uni.graph();
    std::map<Vertex, Vertex> parent;
    parent[att[0]] = kNoVertex;
    std::vector<Vertex> queue{att[0]};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Vertex v = queue[qi];
        for (Vertex w : host.neighbors(v)) {
            if (!verts.count(w) || parent.count(w)) continue;
            parent[w] = v;
            queue.push_back(w);
        }
    }
    std::set<Vertex> kept;
    for (Vertex a : att) {
        if (!parent.count(a))
            fail(Errc::InternalOrderViolation, "branch set disconnected during pruning");
        for (Vertex v = a; v != kNoVertex; v = parent.at(v)) kept.insert(v);
    }
    std::vector<GAddress> out;
    for (Vertex v : kept) out.push_back(verts.at(v));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

EmbedResult embed(const PlaneGraph& g, const EmbedOptions& opt) {
    Embedder e(g, opt);
    return e.run();
}

EmbedResult embed_any(const PlaneGraph& g, const EmbedOptions& opt) {
    Reduction red = reduce(g);
    EmbedResult inner = embed(red.graph, opt);

    EmbedResult out;
    out.universe = inner.universe;
    out.deepest_level = inner.deepest_level;

    // merge each spine (and the paths between its pieces) into one set
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::int64_t lab = g.label(v);
        const auto& spine = red.witness.blowup.at(lab);
        std::set<GAddress> merged;
        for (std::int64_t piece : spine) {
            const auto& bs = inner.model.branch_sets.at(piece);
            merged.insert(bs.begin(), bs.end());
        }
        for (std::size_t i = 0; i + 1 < spine.size(); ++i) {
            auto key = std::minmax(spine[i], spine[i + 1]);
            const auto& path = inner.model.branch_paths.at({key.first, key.second});
            merged.insert(path.begin(), path.end());
        }
        out.model.branch_sets[lab] = {merged.begin(), merged.end()};
    }
    for (auto [u, v] : g.edges()) {
        std::int64_t la = g.label(u), lb = g.label(v);
        LabelEdge e = label_edge(la, lb);
        LabelEdge img = red.witness.edge_map.at(e); // normalized: endpoint pairing lost
        std::vector<GAddress> path = inner.model.branch_paths.at(img);
        // the stored path runs img.first -> img.second; e.first's side is
        // whichever image endpoint lies in e.first's spine
        const auto& spine_first = red.witness.blowup.at(e.first);
        bool img_first_is_e_first =
            std::find(spine_first.begin(), spine_first.end(), img.first) != spine_first.end();
        if (!img_first_is_e_first) std::reverse(path.begin(), path.end());
        out.model.branch_paths[e] = std::move(path);
    }
    // prune the merged sets to minimal connected covers of their
    // attachment points
    std::map<std::int64_t, std::vector<GAddress>> attach;
    for (const auto& [e, path] : out.model.branch_paths) {
        attach[e.first].push_back(path.front());
        attach[e.second].push_back(path.back());
    }
    for (auto& [lab, set] : out.model.branch_sets)
        set = prune_branch_set(*out.universe, set, attach[lab]);
    return out;
}

} // namespace plum

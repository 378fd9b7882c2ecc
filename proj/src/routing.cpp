#include "plum/routing.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <unordered_map>

namespace plum {

namespace {

struct Arc {
    int to;
    int cap;
    int rev;      // index of the reverse arc in nodes[to]
    bool forward; // created with positive capacity
};

// Unit-vertex-capacity flow network over a RoutingView.
//
// Vertex v splits into in-node 2v and out-node 2v+1 with a capacity-1
// splitter arc. Terminals are endpoint-only: a source has no in-node
// arcs (flow is injected at its out-node), a sink has no out-node arcs
// (flow drains from its in-node). Singleton terminal sets get capacity
// k so all paths may share that endpoint. Graph-edge arcs get capacity
// k+1, which forces every minimum cut onto splitter/terminal arcs and
// makes the cut a set of graph vertices.
class FlowNet {
public:
    FlowNet(const RoutingView& view, const std::vector<Vertex>& sources,
            const std::vector<Vertex>& sinks, int k, const std::vector<Vertex>& forbidden)
        : view_(view), k_(k) {
        const PlaneGraph& g = *view.host;
        int n = g.vertex_count();
        role_.assign(n, Role::Internal);
        for (Vertex v = 0; v < n; ++v)
            if (!view.vertex_ok(v)) role_[v] = Role::Off;
        for (Vertex v : forbidden) role_[v] = Role::Off;
        for (Vertex s : sources) {
            if (role_[s] == Role::Off) fail(Errc::InvalidArgument, "source not in routing view");
            role_[s] = Role::Source;
        }
        for (Vertex t : sinks) {
            if (role_[t] == Role::Source)
                fail(Errc::InvalidArgument, "source/sink sets must be disjoint");
            if (role_[t] == Role::Off) fail(Errc::InvalidArgument, "sink not in routing view");
            role_[t] = Role::Sink;
        }
        nodes_.resize(2 * n + 2);
        s_node_ = 2 * n;
        t_node_ = 2 * n + 1;
        int source_cap = sources.size() == 1 ? k : 1;
        int sink_cap = sinks.size() == 1 ? k : 1;
        for (Vertex v : sources) add_arc(s_node_, out_node(v), source_cap);
        for (Vertex t : sinks) add_arc(in_node(t), t_node_, sink_cap);
        for (Vertex v = 0; v < n; ++v)
            if (role_[v] == Role::Internal) add_arc(in_node(v), out_node(v), 1);
        int big = k + 1;
        for (Vertex u = 0; u < n; ++u) {
            if (role_[u] == Role::Off || role_[u] == Role::Sink) continue;
            for (Vertex v : g.neighbors(u)) {
                if (role_[v] == Role::Off || role_[v] == Role::Source) continue;
                if (!view.edge_ok(u, v)) continue;
                add_arc(out_node(u), in_node(v), big);
            }
        }
    }

    int max_flow(int limit) {
        int flow = 0;
        while (flow < limit && augment()) ++flow;
        return flow;
    }

    std::vector<std::vector<Vertex>> extract_paths(int count) {
        std::vector<std::vector<Vertex>> out;
        // consume flow on forward arcs, walking S -> T
        for (int p = 0; p < count; ++p) {
            std::vector<int> walk{s_node_};
            std::vector<int> pos(nodes_.size(), -1);
            pos[s_node_] = 0;
            int cur = s_node_;
            while (cur != t_node_) {
                int next = -1;
                for (auto& a : nodes_[cur]) {
                    // flow on a forward arc = residual cap of its reverse
                    if (a.forward && nodes_[a.to][a.rev].cap > 0) {
                        a.cap += 1;
                        nodes_[a.to][a.rev].cap -= 1;
                        next = a.to;
                        break;
                    }
                }
                assert(next != -1);
                if (pos[next] != -1) {
                    // flow cycle: drop the loop we just closed
                    for (std::size_t i = pos[next] + 1; i < walk.size(); ++i) pos[walk[i]] = -1;
                    walk.resize(pos[next] + 1);
                } else {
                    pos[next] = static_cast<int>(walk.size());
                    walk.push_back(next);
                }
                cur = next;
            }
            std::vector<Vertex> path;
            for (int node : walk) {
                if (node == s_node_ || node == t_node_) continue;
                if (node % 2 == 0) {
                    Vertex v = node / 2;
                    if (path.empty() || path.back() != v) path.push_back(v);
                } else {
                    Vertex v = node / 2;
                    if (path.empty() || path.back() != v) path.push_back(v);
                }
            }
            out.push_back(std::move(path));
        }
        return out;
    }

    std::vector<Vertex> extract_cut() {
        std::vector<char> reach(nodes_.size(), 0);
        std::queue<int> q;
        q.push(s_node_);
        reach[s_node_] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (auto& a : nodes_[u]) {
                if (a.cap > 0 && !reach[a.to]) {
                    reach[a.to] = 1;
                    q.push(a.to);
                }
            }
        }
        std::vector<Vertex> cut;
        int n = static_cast<int>(role_.size());
        for (Vertex v = 0; v < n; ++v) {
            switch (role_[v]) {
                case Role::Internal:
                    if (reach[in_node(v)] && !reach[out_node(v)]) cut.push_back(v);
                    break;
                case Role::Source:
                    if (!reach[out_node(v)]) cut.push_back(v);
                    break;
                case Role::Sink:
                    if (reach[in_node(v)]) cut.push_back(v);
                    break;
                case Role::Off:
                    break;
            }
        }
        return cut;
    }

private:
    enum class Role { Internal, Source, Sink, Off };

    const RoutingView& view_;
    int k_;
    std::vector<Role> role_;
    std::vector<std::vector<Arc>> nodes_;
    int s_node_ = 0, t_node_ = 0;

    static int in_node(Vertex v) { return 2 * v; }
    static int out_node(Vertex v) { return 2 * v + 1; }

    void add_arc(int from, int to, int cap) {
        nodes_[from].push_back({to, cap, static_cast<int>(nodes_[to].size()), true});
        nodes_[to].push_back({from, 0, static_cast<int>(nodes_[from].size() - 1), false});
    }

    bool augment() {
        std::vector<int> prev_node(nodes_.size(), -1), prev_arc(nodes_.size(), -1);
        std::queue<int> q;
        q.push(s_node_);
        prev_node[s_node_] = s_node_;
        while (!q.empty() && prev_node[t_node_] == -1) {
            int u = q.front();
            q.pop();
            for (int i = 0; i < static_cast<int>(nodes_[u].size()); ++i) {
                const Arc& a = nodes_[u][i];
                if (a.cap > 0 && prev_node[a.to] == -1) {
                    prev_node[a.to] = u;
                    prev_arc[a.to] = i;
                    q.push(a.to);
                }
            }
        }
        if (prev_node[t_node_] == -1) return false;
        for (int v = t_node_; v != s_node_; v = prev_node[v]) {
            Arc& a = nodes_[prev_node[v]][prev_arc[v]];
            a.cap -= 1;
            nodes_[a.to][a.rev].cap += 1;
        }
        return true;
    }
};

} // namespace

RoutingResult disjoint_paths(const RoutingView& view, const std::vector<Vertex>& sources,
                             const std::vector<Vertex>& sinks, int k,
                             const std::vector<Vertex>& forbidden) {
    if (k <= 0) fail(Errc::InvalidArgument, "k must be positive");
    if (sources.empty() || sinks.empty()) fail(Errc::InvalidArgument, "terminal set empty");
    FlowNet net(view, sources, sinks, k, forbidden);
    int got = net.max_flow(k);
    if (got < k) return CutWitness{net.extract_cut()};
    return PathSet{net.extract_paths(k)};
}

RoutingResult disjoint_paths(const PlaneGraph& g, const std::vector<Vertex>& sources,
                             const std::vector<Vertex>& sinks, int k,
                             const std::vector<Vertex>& forbidden) {
    RoutingView view;
    view.host = &g;
    return disjoint_paths(view, sources, sinks, k, forbidden);
}

int max_disjoint_paths(const RoutingView& view, const std::vector<Vertex>& sources,
                       const std::vector<Vertex>& sinks, int cap,
                       const std::vector<Vertex>& forbidden) {
    if (cap <= 0) return 0;
    FlowNet net(view, sources, sinks, cap, forbidden);
    return net.max_flow(cap);
}

} // namespace plum

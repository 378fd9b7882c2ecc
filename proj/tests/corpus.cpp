#include "corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace corpus {

namespace {

// AHU canonical string of a rooted tree
std::string ahu(int v, int parent, const std::vector<std::vector<int>>& adj) {
    std::vector<std::string> subs;
    for (int w : adj[v])
        if (w != parent) subs.push_back(ahu(w, v, adj));
    std::sort(subs.begin(), subs.end());
    std::string s = "(";
    for (const auto& t : subs) s += t;
    s += ")";
    return s;
}

// canonical form of a free tree: root at its center(s)
std::string tree_canon(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    if (n == 1) return "()";
    // find centers by leaf stripping
    std::vector<int> deg(n), order;
    for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
    std::vector<int> layer;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    int left = n;
    while (left > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            --left;
            for (int w : adj[v])
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::vector<std::string> forms;
    for (int c : layer) forms.push_back(ahu(c, -1, adj));
    std::sort(forms.begin(), forms.end());
    return forms.front();
}

} // namespace

std::vector<PlaneGraph> all_trees(int n) {
    std::vector<PlaneGraph> out;
    if (n <= 0) return out;
    if (n == 1) {
        out.push_back(from_edges(1, {}));
        return out;
    }
    if (n == 2) {
        out.push_back(from_edges(2, {{0, 1}}));
        return out;
    }
    std::map<std::string, std::vector<std::pair<int, int>>> classes;
    // all labeled trees via Prüfer sequences
    std::vector<int> seq(n - 2, 0);
    for (;;) {
        std::vector<int> degree(n, 1);
        for (int x : seq) degree[x]++;
        std::vector<std::pair<int, int>> edges;
        std::vector<int> deg = degree;
        std::set<int> leaves;
        for (int v = 0; v < n; ++v)
            if (deg[v] == 1) leaves.insert(v);
        for (int x : seq) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.emplace_back(leaf, x);
            if (--deg[x] == 1) leaves.insert(x);
        }
        int a = *leaves.begin(), b = *std::next(leaves.begin());
        edges.emplace_back(a, b);

        std::vector<std::vector<int>> adj(n);
        for (auto [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        classes.emplace(tree_canon(adj), edges);

        int i = static_cast<int>(seq.size()) - 1;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        seq[i]++;
    }
    for (const auto& [canon, edges] : classes) out.push_back(from_edges(n, edges));
    return out;
}

} // namespace corpus

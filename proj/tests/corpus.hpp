#ifndef PLUM_TESTS_CORPUS_HPP
#define PLUM_TESTS_CORPUS_HPP

#include <numeric>
#include <set>
#include <vector>

#include "plum/planarity.hpp"
#include "plum/plane_graph.hpp"

namespace corpus {

using plum::PlaneGraph;
using plum::Vertex;

inline PlaneGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::int64_t> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    return plum::build_embedding(labels, edges);
}

inline PlaneGraph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return from_edges(n, e);
}

inline PlaneGraph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return from_edges(n, e);
}

inline PlaneGraph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return from_edges(n, e);
}

inline PlaneGraph star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return from_edges(leaves + 1, e);
}

/// hub 0 plus rim 1..k
inline PlaneGraph wheel(int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= k; ++i) {
        e.emplace_back(0, i);
        e.emplace_back(i, i % k + 1);
    }
    return from_edges(k + 1, e);
}

inline PlaneGraph prism() {
    return from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

inline PlaneGraph cube() {
    return from_edges(8, {{0, 1},
                          {1, 2},
                          {2, 3},
                          {3, 0},
                          {4, 5},
                          {5, 6},
                          {6, 7},
                          {7, 4},
                          {0, 4},
                          {1, 5},
                          {2, 6},
                          {3, 7}});
}

inline PlaneGraph octahedron() {
    return from_edges(6, {{0, 1},
                          {0, 2},
                          {0, 3},
                          {0, 4},
                          {1, 2},
                          {2, 3},
                          {3, 4},
                          {4, 1},
                          {5, 1},
                          {5, 2},
                          {5, 3},
                          {5, 4}});
}

/// two degree-3 vertices joined by three internally disjoint paths of
/// length 2
inline PlaneGraph theta() {
    return from_edges(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
}

inline PlaneGraph truncated_tetrahedron() {
    // vertex (v,u) = corner of tetrahedron vertex v toward u
    std::vector<std::pair<int, int>> e;
    auto id = [](int v, int u) {
        int k = u < v ? u : u - 1;
        return v * 3 + k;
    };
    for (int v = 0; v < 4; ++v) {
        std::vector<int> corners;
        for (int u = 0; u < 4; ++u)
            if (u != v) corners.push_back(id(v, u));
        e.emplace_back(corners[0], corners[1]);
        e.emplace_back(corners[1], corners[2]);
        e.emplace_back(corners[2], corners[0]);
    }
    for (int v = 0; v < 4; ++v)
        for (int u = v + 1; u < 4; ++u) e.emplace_back(id(v, u), id(u, v));
    return from_edges(12, e);
}

inline PlaneGraph k33() {
    return from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

inline PlaneGraph grid(int rows, int cols) {
    std::vector<std::pair<int, int>> e;
    auto id = [&](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
        }
    return from_edges(rows * cols, e);
}

/// all unlabeled trees on n vertices, one representative each, via
/// labeled enumeration + canonical form
std::vector<PlaneGraph> all_trees(int n);

} // namespace corpus

#endif

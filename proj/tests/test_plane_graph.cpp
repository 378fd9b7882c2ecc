#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "plum/plane_graph.hpp"

using namespace plum;

TEST_CASE("triangle has two faces of length three") {
    PlaneGraph g = corpus::cycle(3);
    auto fs = faces(g);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].size() == 3);
    CHECK(fs[1].size() == 3);
    CHECK(euler_ok(g));
}

TEST_CASE("K4 embeds with four triangular faces") {
    PlaneGraph g = corpus::complete(4);
    auto fs = faces(g);
    REQUIRE(fs.size() == 4);
    for (const auto& f : fs) CHECK(f.size() == 3);
}

TEST_CASE("cube has six quadrilateral faces") {
    PlaneGraph g = corpus::cube();
    auto fs = faces(g);
    REQUIRE(fs.size() == 6);
    for (const auto& f : fs) CHECK(f.size() == 4);
}

TEST_CASE("face tracing covers every dart exactly once") {
    for (const PlaneGraph& g : {corpus::cycle(5), corpus::complete(4), corpus::cube(),
                                corpus::prism(), corpus::octahedron()}) {
        auto fs = trace_faces(g);
        std::size_t darts = 0;
        std::set<std::pair<Vertex, Vertex>> seen;
        for (const auto& f : fs) {
            for (std::size_t i = 0; i < f.verts.size(); ++i) {
                auto d = std::make_pair(f.verts[i], f.verts[(i + 1) % f.verts.size()]);
                CHECK(seen.insert(d).second);
                ++darts;
            }
        }
        CHECK(darts == 2 * g.edge_count());
    }
}

TEST_CASE("faces requires connectivity") {
    PlaneGraph g;
    g.add_vertex();
    g.add_vertex();
    CHECK_THROWS_AS(faces(g), Error);
    CHECK(euler_ok(g)); // per component: two isolated vertices are fine
}

TEST_CASE("subdivide_edge grows both sides of the edge") {
    PlaneGraph g = corpus::cycle(3);
    SUBCASE("k = 0 is the identity") {
        PlaneGraph h = subdivide_edge(g, 0, 1, 0);
        CHECK(h.vertex_count() == 3);
        CHECK(h.edge_count() == 3);
    }
    SUBCASE("one subdivision turns C3 into C4") {
        PlaneGraph h = subdivide_edge(g, 0, 1, 1);
        CHECK(h.vertex_count() == 4);
        CHECK(h.edge_count() == 4);
        CHECK(is_two_connected(h));
        auto fs = faces(h);
        REQUIRE(fs.size() == 2);
        CHECK(fs[0].size() == 4);
    }
    SUBCASE("K4 with a doubly subdivided edge keeps Euler") {
        PlaneGraph k4 = corpus::complete(4);
        PlaneGraph h = subdivide_edge(k4, 0, 1, 2);
        CHECK(h.vertex_count() == 6);
        CHECK(h.edge_count() == 8);
        CHECK(euler_ok(h));
        CHECK(faces(h).size() == 4);
    }
    SUBCASE("subdividing preserves 2-connectivity and planarity") {
        PlaneGraph h = corpus::prism();
        for (auto [u, v] : std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 3}}) {
            for (int k = 1; k <= 3; ++k) {
                PlaneGraph s = subdivide_edge(h, u, v, k);
                CHECK(euler_ok(s));
                CHECK(is_two_connected(s));
            }
        }
    }
    SUBCASE("missing edge is an error") {
        PlaneGraph p = corpus::path(3);
        CHECK_THROWS_AS(subdivide_edge(p, 0, 2, 1), Error);
    }
}

TEST_CASE("connectivity predicates") {
    CHECK(is_two_connected(corpus::cycle(3)));
    CHECK(is_subcubic(corpus::cycle(3)));
    CHECK_FALSE(is_two_connected(corpus::path(3)));
    CHECK(is_subcubic(corpus::complete(4)));
    CHECK_FALSE(is_subcubic(corpus::complete(5)));
    CHECK_FALSE(is_two_connected(corpus::star(3)));
    CHECK(is_two_connected(corpus::cube()));

    // a single edge and a single vertex are not 2-connected
    PlaneGraph k2;
    k2.add_vertex();
    k2.add_vertex();
    k2.add_edge(0, 1);
    CHECK_FALSE(is_two_connected(k2));
}

TEST_CASE("articulation points of a two-block chain") {
    // two triangles sharing vertex 2
    PlaneGraph g = corpus::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    auto arts = articulation_points(g);
    REQUIRE(arts.size() == 1);
    CHECK(arts[0] == 2);
    CHECK(biconnected_components(g).size() == 2);
}

TEST_CASE("from_rotations validates its input") {
    CHECK_THROWS_AS(PlaneGraph::from_rotations({{1}, {}}, {0, 1}), Error); // asymmetric
    CHECK_THROWS_AS(PlaneGraph::from_rotations({{0}}, {0}), Error);       // loop
    CHECK_THROWS_AS(PlaneGraph::from_rotations({{1, 1}, {0, 0}}, {0, 1}), Error); // repeat
}

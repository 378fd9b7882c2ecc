#include <doctest.h>

#include "corpus.hpp"
#include "plum/json_io.hpp"
#include "plum/planarity.hpp"

using namespace plum;

TEST_CASE("planar corpus embeds with Euler intact") {
    for (const PlaneGraph& g :
         {corpus::cycle(3), corpus::cycle(8), corpus::complete(4), corpus::cube(),
          corpus::prism(), corpus::octahedron(), corpus::wheel(6), corpus::grid(4, 4),
          corpus::truncated_tetrahedron(), corpus::star(5), corpus::path(6)}) {
        CHECK(euler_ok(g));
    }
}

TEST_CASE("K5 and K33 are rejected") {
    CHECK_THROWS_AS(corpus::complete(5), Error);
    CHECK_THROWS_AS(corpus::k33(), Error);
    try {
        corpus::complete(5);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NonPlanar);
    }
}

TEST_CASE("disconnected and multi-block graphs embed") {
    // triangle + separate square
    PlaneGraph g = corpus::from_edges(
        7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 3}});
    CHECK(euler_ok(g));
    CHECK(connected_components(g).size() == 2);

    // two triangles sharing a cutvertex plus a pendant
    PlaneGraph h = corpus::from_edges(
        6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}, {0, 5}});
    CHECK(euler_ok(h));
}

TEST_CASE("a supplied planar rotation is validated and kept") {
    nlohmann::json j;
    j["vertices"] = {0, 1, 2, 3};
    j["edges"] = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}};
    j["rotation"] = {{"0", {1, 3, 2}},
                     {"1", {2, 3, 0}},
                     {"2", {0, 3, 1}},
                     {"3", {0, 1, 2}}};
    PlaneGraph g = graph_from_json(j);
    CHECK(g.neighbors(3)[0] == 0);
    CHECK(faces(g).size() == 4);
}

TEST_CASE("a non-planar rotation is rejected") {
    // K4 with vertex 3's rotation flipped relative to a planar one:
    // the face count breaks Euler on the sphere
    nlohmann::json j;
    j["vertices"] = {0, 1, 2, 3};
    j["edges"] = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}};
    j["rotation"] = {{"0", {1, 3, 2}},
                     {"1", {2, 3, 0}},
                     {"2", {0, 3, 1}},
                     {"3", {0, 2, 1}}};
    CHECK_THROWS_AS(graph_from_json(j), Error);
}

TEST_CASE("graph json round-trips through the embedding") {
    PlaneGraph g = corpus::prism();
    auto j = graph_to_json(g);
    PlaneGraph h = graph_from_json(j);
    CHECK(h.vertex_count() == g.vertex_count());
    CHECK(h.edge_count() == g.edge_count());
    CHECK(euler_ok(h));
}

TEST_CASE("dot export names every edge") {
    PlaneGraph g = corpus::cycle(3);
    std::string dot = graph_to_dot(g);
    CHECK(dot.find("\"0\" -- \"1\"") != std::string::npos);
    CHECK(dot.find("graph G {") == 0);
}

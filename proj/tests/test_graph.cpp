#include <doctest.h>

#include <sstream>

#include "decycle/generators.hpp"
#include "decycle/graph.hpp"
#include "decycle/io.hpp"
#include "decycle/solver.hpp"
#include "test_util.hpp"

using namespace decycle;

TEST_CASE("components") {
    CHECK(components(Graph(0)) == 0);
    CHECK(components(path(5)) == 1);
    Graph two(6);
    two.add_edge(0, 1);
    two.add_edge(1, 2);
    two.add_edge(0, 2);
    two.add_edge(3, 4);
    two.add_edge(4, 5);
    two.add_edge(3, 5);
    CHECK(components(two) == 2);
}

TEST_CASE("acyclicity treats loops and parallel edges as cycles") {
    CHECK(is_acyclic(star(7)));
    CHECK_FALSE(is_acyclic(cycle(3)));
    Graph loop(1);
    loop.add_edge(0, 0);
    CHECK_FALSE(is_acyclic(loop));
    Graph parallel(2);
    parallel.add_edge(0, 1);
    parallel.add_edge(0, 1);
    CHECK_FALSE(is_acyclic(parallel));
}

TEST_CASE("cycle rank") {
    CHECK(cycle_rank(path(7)) == 0);
    CHECK(cycle_rank(petersen()) == 6);
    CHECK(cycle_rank(hypercube(3)) == 5);
}

TEST_CASE("delete_vertices") {
    auto r = delete_vertices(complete(4), {0});
    CHECK(r.graph == complete(3));
    CHECK(delete_vertices(cycle(5), {}).graph == cycle(5));
    auto p = delete_vertices(petersen(), {4});
    CHECK(p.graph.vertex_count() == 9);
    CHECK(p.graph.edge_count() == 12);
    CHECK(p.original_ids.size() == 9);
    CHECK_THROWS_AS(delete_vertices(cycle(4), {7}), std::out_of_range);
}

TEST_CASE("is_decycling_set") {
    VertexSet witness = oracle(petersen()).witness;
    CHECK(witness.size() == 3);
    CHECK(is_decycling_set(petersen(), witness));
    CHECK_FALSE(is_decycling_set(cycle(5), {}));
    CHECK(is_decycling_set(star(6), {}));
}

TEST_CASE("outlay examples") {
    CHECK(outlay(cycle(6), {2}) == 1);
    CHECK(outlay(complete(4), {0, 1}) == 3);
    CHECK(outlay(petersen(), oracle(petersen()).witness) == 6);
    Graph disconnected(4);
    disconnected.add_edge(0, 1);
    disconnected.add_edge(2, 3);
    CHECK_THROWS_AS(outlay(disconnected, {0}), std::invalid_argument);
}

TEST_CASE("outlay identity for decycling sets of connected graphs") {
    std::mt19937 rng(11);
    int instances = 0;
    while (instances < 220) {
        int n = 4 + static_cast<int>(rng() % 9);
        Graph g = testutil::random_connected_graph(n, 0.25, rng);
        VertexSet s = oracle(g).witness;
        CHECK(outlay(g, s) == cycle_rank(g));
        ++instances;
    }
}

TEST_CASE("distance") {
    Graph q3 = hypercube(3);
    CHECK(distance(q3, 0, 7) == 3);  // 000 to 111
    CHECK(distance(q3, 5, 5) == 0);
    Graph split(4);
    split.add_edge(0, 1);
    split.add_edge(2, 3);
    CHECK_FALSE(distance(split, 0, 3).has_value());
}

TEST_CASE("count_4cycles") {
    CHECK(count_4cycles(cycle(4)) == 1);
    CHECK(count_4cycles(hypercube(3)) == 6);
    CHECK(count_4cycles(hypercube(4)) == 24);
    CHECK(count_4cycles(complete(4)) == 3);
}

TEST_CASE("bipartition") {
    auto parts = bipartition(hypercube(4));
    REQUIRE(parts.has_value());
    CHECK(parts->first.size() == 8);
    CHECK(parts->second.size() == 8);
    CHECK_FALSE(bipartition(cycle(5)).has_value());
}

TEST_CASE("graph equality ignores edge insertion order") {
    Graph a(3), b(3);
    a.add_edge(0, 1);
    a.add_edge(1, 2);
    b.add_edge(2, 1);
    b.add_edge(1, 0);
    CHECK(a == b);
}

TEST_CASE("text format round trip is bit exact") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = testutil::random_simple_graph(3 + static_cast<int>(rng() % 10), 0.4, rng);
        std::string text = to_text(g);
        CHECK(parse_text(text) == g);
        CHECK(to_text(parse_text(text)) == text);
    }
    CHECK_THROWS_AS(parse_text("p 2 1\n"), std::invalid_argument);   // missing edge
    CHECK_THROWS_AS(parse_text("p 2 1\ne 0 5\n"), std::out_of_range);
}

TEST_CASE("json round trip keeps labels") {
    Graph g = grid(2, 3);
    Graph back = from_json(to_json(g));
    CHECK(back == g);
    CHECK(back.label(0) == g.label(0));
}

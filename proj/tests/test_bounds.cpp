#include <doctest.h>

#include "decycle/bounds.hpp"
#include "decycle/generators.hpp"
#include "decycle/ops.hpp"
#include "decycle/solver.hpp"
#include "test_util.hpp"

using namespace decycle;

TEST_CASE("degree sum lower bound") {
    CHECK(degree_sum_lower_bound(star(8)) == 0);
    CHECK(degree_sum_lower_bound(complete(5)) == 2);
    CHECK(degree_sum_lower_bound(cycle(11)) == 1);
}

TEST_CASE("max degree lower bound") {
    CHECK(max_degree_lower_bound(petersen()) == 3);
    CHECK(max_degree_lower_bound(hypercube(4)) == 6);
    CHECK(max_degree_lower_bound(path(9)) == 0);
}

TEST_CASE("cube lower bounds") {
    const long long expected[] = {225, 456, 922, 1862, 3755};
    for (int n = 9; n <= 13; ++n) CHECK(cube_lower_bound(n) == expected[n - 9]);
    const long long exact[] = {1, 3, 6, 14, 28, 56, 112};
    for (int n = 2; n <= 8; ++n) CHECK(cube_lower_bound(n) <= exact[n - 2]);
}

TEST_CASE("bipartite upper bound") {
    CHECK(bipartite_upper_bound(complete_bipartite(3, 4)) == 2);
    const long long halves[] = {255, 511, 1023, 2047, 4095};
    for (int n = 9; n <= 13; ++n) CHECK((1LL << (n - 1)) - 1 == halves[n - 9]);
    CHECK(bipartite_upper_bound(hypercube(6)) == 31);
    CHECK(bipartite_upper_bound(path(7)) >= 0);
    CHECK_THROWS_AS(bipartite_upper_bound(cycle(5)), std::invalid_argument);
}

TEST_CASE("covering upper bound") {
    CHECK(covering_upper_bound(cycle(5)) == 2);
    CHECK(covering_upper_bound(complete(6)) == 4);
    CHECK(covering_upper_bound(petersen()) == 5);
    CHECK_THROWS_AS(covering_upper_bound(Graph(3)), std::invalid_argument);
}

TEST_CASE("product bounds") {
    for (int p = 2; p <= 6; ++p) {
        auto [lo, hi] = product_bounds(complete(p));
        CHECK(lo == 2 * p - 4);
        CHECK(hi == 2 * p - 3);
        // The lower bound is tight from p = 3 on (K_2 x K_2 is a 4-cycle).
        if (p >= 3) CHECK(oracle(cartesian_product(complete(2), complete(p))).value == 2 * p - 4);
    }
    auto [zlo, zhi] = product_bounds(Graph(4));
    CHECK(zlo == 0);
    CHECK(zhi == 0);
    // Paths attain the upper bound.
    for (int n = 2; n <= 8; ++n) {
        auto [lo, hi] = product_bounds(path(n));
        CHECK(oracle(cartesian_product(complete(2), path(n))).value == hi);
        CHECK(lo == 0);
    }
}

TEST_CASE("theorem 1.8 on random graphs") {
    std::mt19937 rng(41);
    int done = 0;
    while (done < 200) {
        Graph g = testutil::random_simple_graph(4 + static_cast<int>(rng() % 7), 0.35, rng);
        long long nabla = oracle(g).value;
        long long beta = independence_and_covering(g).beta;
        long long product = oracle(cartesian_product(complete(2), g), 22).value;
        CHECK(2 * nabla <= product);
        CHECK(product <= nabla + beta);
        ++done;
    }
}

TEST_CASE("grid bounds") {
    CHECK(grid_lower_bound(4, 4) == 3);
    CHECK(grid_lower_bound(7, 7) == 12);
    CHECK(grid_lower_bound(3, 3) == 1);
    CHECK_THROWS_AS(grid_lower_bound(2, 5), std::invalid_argument);
    CHECK(grid_upper_bound(7, 7) == 13);
    CHECK(grid_upper_bound(2, 4) == 2);
    CHECK(grid_upper_bound(6, 6) == 10);
}

TEST_CASE("outerplanar bounds") {
    CHECK(outerplanar_bounds(3) == std::pair<long long, long long>{1, 1});
    CHECK(outerplanar_bounds(9) == std::pair<long long, long long>{1, 3});
    CHECK(outerplanar_bounds(4) == std::pair<long long, long long>{1, 1});
    Graph k4_minus = maximal_outerplanar(4, 2);
    CHECK(oracle(k4_minus).value == 1);
    CHECK_THROWS_AS(outerplanar_bounds(2), std::invalid_argument);
}

TEST_CASE("cube bounds table") {
    CHECK(cube_bounds_table(9) == std::pair<long long, long long>{225, 237});
    CHECK(cube_bounds_table(11) == std::pair<long long, long long>{922, 1005});
    CHECK(cube_bounds_table(12) == std::pair<long long, long long>{1862, 2029});
    CHECK_THROWS_AS(cube_bounds_table(8), std::invalid_argument);
}

TEST_CASE("bounds sandwich the oracle value") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = testutil::random_simple_graph(4 + static_cast<int>(rng() % 11), 0.3, rng);
        long long nabla = oracle(g).value;
        BoundReport report = bound_report(g);
        CHECK(report.best_lower() <= nabla);
        if (auto up = report.best_upper()) CHECK(nabla <= *up);
    }
}

TEST_CASE("connectivity at most decycling number plus one") {
    std::mt19937 rng(47);
    int done = 0;
    while (done < 200) {
        Graph g = testutil::random_connected_graph(4 + static_cast<int>(rng() % 11), 0.3, rng);
        CHECK(connectivity(g) <= oracle(g).value + 1);
        ++done;
    }
    CHECK(connectivity(petersen()) <= oracle(petersen()).value + 1);
}

TEST_CASE("identification lemma") {
    std::mt19937 rng(53);
    int done = 0;
    while (done < 200) {
        Graph h = testutil::random_connected_graph(4 + static_cast<int>(rng() % 7), 0.35, rng);
        Graph j = testutil::random_connected_graph(4 + static_cast<int>(rng() % 7), 0.35, rng);
        DecyclingResult rh = oracle(h), rj = oracle(j);
        if (rh.value != rj.value || rh.value == 0) continue;
        BijectionSpec f;
        for (size_t i = 0; i < rh.witness.size(); ++i)
            f.pairs.push_back({rh.witness[i], rj.witness[i]});
        Graph glued = identification(h, j, f);
        CHECK(is_decycling_set(glued, rh.witness));
        CHECK(oracle(glued).value == rh.value);
        ++done;
    }
}

TEST_CASE("homeomorph invariance of the decycling number") {
    std::mt19937 rng(59);
    int done = 0;
    while (done < 200) {
        Graph g = testutil::random_simple_graph(5 + static_cast<int>(rng() % 10), 0.25, rng);
        Graph smoothed = smooth_homeomorphic(g);
        CHECK(oracle(smoothed).value == oracle(g).value);
        ++done;
    }
}

// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <cstdio>
#include <random>

#include "decycle/bounds.hpp"
#include "decycle/families.hpp"
#include "decycle/generators.hpp"
#include "decycle/ops.hpp"
#include "decycle/snake.hpp"
#include "decycle/solver.hpp"
#include "decycle/verify.hpp"
#include "test_util.hpp"

using namespace decycle;

namespace {

int failures = 0;

void report(int number, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", number, detail.c_str());
    if (!ok) failures++;
}

void criterion1_cube_table() {
    const long long expected[] = {0, 1, 3, 6};
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 4; ++n) {
        long long by_oracle = n <= 4 ? oracle(hypercube(n), 16).value : -1;
        DecyclingResult bb = branch_and_bound(hypercube(n));
        ok = ok && by_oracle == expected[n - 1] && bb.value == expected[n - 1] &&
             bb.status == SolveStatus::optimal && verify_certificate(hypercube(n), bb);
    }
    DecyclingResult q5 = branch_and_bound(hypercube(5), 1800.0, 4);
    if (q5.status == SolveStatus::optimal) {
        ok = ok && q5.value == 14 && verify_certificate(hypercube(5), q5);
        detail = "cube values 0,1,3,6 for n=1..4 and Q_5 = 14 with optimality certificate";
    } else {
        ok = ok && q5.lower >= 12 && q5.value == 14;
        detail = "cube values 0,1,3,6; Q_5 budget exceeded with bounds [" +
                 std::to_string(q5.lower) + ", " + std::to_string(q5.value) + "]";
    }
    report(1, ok, detail);
}

void criterion2_cube_bounds() {
    const long long lowers[] = {225, 456, 922, 1862, 3755};
    const long long uppers[] = {237, 493, 1005, 2029, 4077};
    bool ok = true;
    for (int n = 9; n <= 13; ++n) {
        auto [lo, hi] = cube_bounds_table(n);
        ok = ok && lo == lowers[n - 9] && hi == uppers[n - 9] && cube_lower_bound(n) == lo;
    }
    report(2, ok, "cube bounds (225,237) (456,493) (922,1005) (1862,2029) (3755,4077)");
}

void criterion3_grid_formulas() {
    long long checked = 0, mismatches = 0;
    for (int m = 1; m <= 30; ++m)
        for (int n = m; m * n <= 30; ++n) {
            auto a = grid_formula(m, n);
            if (!a.value) continue;
            checked++;
            if (*a.value != oracle(grid(m, n), 30).value) mismatches++;
        }
    bool spots = *grid_formula(2, 6).value == 3 && *grid_formula(4, 5).value == 5 &&
                 *grid_formula(5, 8).value == 10 && *grid_formula(3, 7).value == 5;
    report(3, mismatches == 0 && spots,
           "grid formula = oracle on " + std::to_string(checked) +
               " grids with mn <= 30; spot values (2,6)=3 (4,5)=5 (5,8)=10 (3,7)=5");
}

void criterion4_formula_consistency() {
    bool ok = true;
    long long overlaps = 0;
    try {
        for (int m = 1; m <= 40; ++m)
            for (int n = 1; n <= 40; ++n) {
                auto a = grid_formula(m, n);  // internally asserts case agreement
                if (a.value) overlaps++;
            }
    } catch (const std::logic_error&) {
        ok = false;
    }
    // (7,7): narrow-strip formula, recursive upper bound and the doubling
    // corollary all give 13.
    ok = ok && *grid_formula(7, 7).value == 13 && grid_upper_bound(7, 7) == 13;
    report(4, ok,
           "overlapping grid formula cases agree on all m,n <= 40 (" +
               std::to_string(overlaps) + " resolved); (7,7) triple agreement at 13");
}

void criterion5_doubling() {
    bool ok = false;
    std::string detail = "doubling failed";
    try {
        VertexSet small = oracle(grid(4, 4)).witness;
        VertexSet big = grid_expand_decycling_set(4, 4, small);
        ok = small.size() == 4 && big.size() == 13 && is_decycling_set(grid(7, 7), big) &&
             static_cast<long long>(big.size()) == *grid_formula(7, 7).value;
        detail = "minimum 4-set of P_4xP_4 expands to a verified 13-set of P_7xP_7";
    } catch (const std::exception& e) {
        detail = std::string("doubling threw: ") + e.what();
    }
    report(5, ok, detail);
}

void criterion6_snakes() {
    long long instances = 0, mismatches = 0;
    for_each_square_snake(8, [&](const SnakeSpec& spec) {
        Snake snake = build_snake(spec);
        long long exact = oracle(snake.graph, snake.graph.vertex_count()).value;
        VertexSet greedy = greedy_decycle(spec);
        instances++;
        if (nabla_snake(spec) != exact || static_cast<long long>(greedy.size()) != exact ||
            !is_decycling_set(snake.graph, greedy))
            mismatches++;
        if (is_nonsingular(spec) && segment_formula(spec) != exact) mismatches++;
    });
    long long seg_instances = 0, seg_mismatches = 0;
    for_each_square_snake(10, [&](const SnakeSpec& spec) {
        if (spec.cells.size() < 9 || !is_nonsingular(spec)) return;
        seg_instances++;
        if (segment_formula(spec) != nabla_snake(spec) ||
            segment_formula(spec) != static_cast<long long>(greedy_decycle(spec).size()))
            seg_mismatches++;
    });
    report(6, mismatches == 0 && seg_mismatches == 0,
           "square snakes <= 8 cells: nickname = greedy = oracle on " +
               std::to_string(instances) + " snakes; segment formula checked on " +
               std::to_string(seg_instances) + " nonsingular 9-10 cell snakes");
}

void criterion7_structural_suites() {
    std::mt19937 rng(101);
    long long bad = 0;
    std::string detail;

    // Outlay identity on connected graphs.
    for (int t = 0; t < 210; ++t) {
        Graph g = testutil::random_connected_graph(4 + static_cast<int>(rng() % 9), 0.3, rng);
        if (outlay(g, oracle(g).witness) != cycle_rank(g)) bad++;
    }
    detail += "outlay;";

    // Homeomorph invariance.
    for (int t = 0; t < 210; ++t) {
        Graph g = testutil::random_simple_graph(5 + static_cast<int>(rng() % 10), 0.25, rng);
        if (oracle(smooth_homeomorphic(g)).value != oracle(g).value) bad++;
    }
    detail += " smoothing;";

    // Covering bound.
    for (int t = 0; t < 210; ++t) {
        Graph g = testutil::random_simple_graph(4 + static_cast<int>(rng() % 11), 0.35, rng);
        if (g.edge_count() == 0) continue;
        if (oracle(g).value > covering_upper_bound(g)) bad++;
    }
    detail += " covering;";

    // Product bounds.
    for (int t = 0; t < 210; ++t) {
        Graph g = testutil::random_simple_graph(4 + static_cast<int>(rng() % 7), 0.35, rng);
        long long nabla = oracle(g).value;
        long long beta = independence_and_covering(g).beta;
        long long prod = oracle(cartesian_product(complete(2), g), 22).value;
        if (2 * nabla > prod || prod > nabla + beta) bad++;
    }
    detail += " product;";

    // Connectivity bound.
    for (int t = 0; t < 210; ++t) {
        Graph g = testutil::random_connected_graph(4 + static_cast<int>(rng() % 11), 0.3, rng);
        if (connectivity(g) > oracle(g).value + 1) bad++;
    }
    detail += " connectivity;";

    // Identification lemma.
    int glued_done = 0;
    while (glued_done < 210) {
        Graph h = testutil::random_connected_graph(4 + static_cast<int>(rng() % 7), 0.35, rng);
        Graph j = testutil::random_connected_graph(4 + static_cast<int>(rng() % 7), 0.35, rng);
        DecyclingResult rh = oracle(h), rj = oracle(j);
        if (rh.value != rj.value || rh.value == 0) continue;
        BijectionSpec f;
        for (size_t i = 0; i < rh.witness.size(); ++i)
            f.pairs.push_back({rh.witness[i], rj.witness[i]});
        Graph glued = identification(h, j, f);
        if (!is_decycling_set(glued, rh.witness) || oracle(glued).value != rh.value) bad++;
        glued_done++;
    }
    detail += " identification;";

    // Hypercube structure: 4-cycle counts, uniqueness, spheres, stars.
    for (int n = 3; n <= 5; ++n) {
        Graph q = hypercube(n);
        if (count_4cycles(q) != static_cast<long long>(n) * (n - 1) * (1LL << (n - 3))) bad++;
        auto adj = q.adjacency();
        for (int v = 0; v < q.vertex_count(); ++v)
            for (int u : adj[v])
                for (int w : adj[v]) {
                    if (u >= w) continue;
                    int squares = 0;
                    for (int x : adj[u])
                        if (x != v && q.has_edge(x, w)) squares++;
                    if (squares != 1) bad++;
                }
        auto parts = bipartition(q);
        for (int x : parts->first)
            for (int y : parts->first) {
                if (x >= y) continue;
                int common = 0;
                for (int a : adj[x])
                    for (int b : adj[y])
                        if (a == b) common++;
                if (common != 0 && common != 2) bad++;
            }
    }
    for (int n = 1; n <= 8; ++n) {
        Graph q = hypercube(n);
        std::vector<long long> sphere(n + 1, 0);
        for (int v = 0; v < q.vertex_count(); ++v) sphere[*distance(q, 0, v)]++;
        long long expect = 1;
        for (int k = 0; k <= n; ++k) {
            if (sphere[k] != expect) bad++;
            expect = expect * (n - k) / (k + 1);
        }
    }
    detail += " cube structure";

    report(7, bad == 0, "structural suites (>= 200 instances each): " + detail);
}

void criterion8_triangle_replacement() {
    bool ok = true;
    std::string values;
    for (const Graph& g : {complete(4), complete_bipartite(3, 3), petersen()}) {
        long long n = g.vertex_count() / 2;  // cubic graph of order 2n
        Graph h = triangle_replacement(g);
        DecyclingResult r = branch_and_bound(h, 600.0, 4);
        ok = ok && r.status == SolveStatus::optimal && r.value >= 2 * n;
        // The rank-based bound is (q - p)/2 = 3n/2 up to rounding, so the
        // construction beats it by at least n/2.
        double rank_half = (h.edge_count() - h.vertex_count()) / 2.0;
        ok = ok && r.value - rank_half >= n / 2.0;
        values += (values.empty() ? "" : ", ") + std::to_string(r.value);
    }
    report(8, ok,
           "triangle replacements of K_4, K_{3,3}, Petersen: exact values " + values +
               " >= 2n with gap >= n/2 over the degree-based bound");
}

void criterion9_outerplanar() {
    long long checked = 0, bad = 0;
    for (int n = 3; n <= 18; ++n)
        for (unsigned seed = 1; seed <= 50; ++seed) {
            Graph g = maximal_outerplanar(n, seed);
            long long nabla = oracle(g, 18).value;
            checked++;
            if (nabla < 1 || nabla > n / 3) bad++;
        }
    report(9, bad == 0,
           "maximal outerplanar graphs, n <= 18, 50 seeds each (" + std::to_string(checked) +
               " graphs): 1 <= decycling number <= n/3");
}

}  // namespace

int main() {
    criterion1_cube_table();
    criterion2_cube_bounds();
    criterion3_grid_formulas();
    criterion4_formula_consistency();
    criterion5_doubling();
    criterion6_snakes();
    criterion7_structural_suites();
    criterion8_triangle_replacement();
    criterion9_outerplanar();
    return failures == 0 ? 0 : 1;
}

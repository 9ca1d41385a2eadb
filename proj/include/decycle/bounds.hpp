#pragma once

// Lower and upper bounds on the decycling number, each tagged with the
// citation of the theorem it realizes so reports can print provenance.

#include "decycle/graph.hpp"
#include "decycle/ops.hpp"
#include "decycle/solver.hpp"

namespace decycle {

enum class BoundKind { lower, upper };

struct BoundEntry {
    std::string name;
    BoundKind kind;
    long long value;
    std::string citation;
};

struct BoundReport {
    std::vector<BoundEntry> entries;

    long long best_lower() const {
        long long best = 0;
        for (const auto& e : entries)
            if (e.kind == BoundKind::lower) best = std::max(best, e.value);
        return best;
    }
    std::optional<long long> best_upper() const {
        std::optional<long long> best;
        for (const auto& e : entries)
            if (e.kind == BoundKind::upper && (!best || e.value < *best)) best = e.value;
        return best;
    }
};

namespace detail {

// Per-component iteration helper; the bounds below are additive over
// components.
template <typename Fn>
long long sum_over_components(const Graph& g, Fn per_component) {
    std::vector<int> comp(g.vertex_count(), -1);
    auto adj = g.adjacency();
    long long total = 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> members{s};
        comp[s] = s;
        for (size_t i = 0; i < members.size(); ++i)
            for (int y : adj[members[i]])
                if (comp[y] < 0) {
                    comp[y] = s;
                    members.push_back(y);
                }
        long long q = 0;
        for (int v : members) q += adj[v].size();
        q /= 2;
        std::vector<int> degs;
        for (int v : members) degs.push_back(static_cast<int>(adj[v].size()));
        total += per_component(static_cast<long long>(members.size()), q, degs);
    }
    return total;
}

}  // namespace detail

// Least s such that the s largest degrees satisfy sum(d_i - 1) >= q - p + 1;
// applied per component and summed.
inline long long degree_sum_lower_bound(const Graph& g) {
    if (!g.is_simple()) throw std::invalid_argument("degree_sum_lower_bound requires a simple graph");
    return detail::sum_over_components(g, [](long long p, long long q, std::vector<int>& degs) {
        long long rank = q - p + 1;
        if (rank <= 0) return 0LL;
        std::sort(degs.rbegin(), degs.rend());
        long long s = 0, acc = 0;
        for (int d : degs) {
            s++;
            acc += d - 1;
            if (acc >= rank) return s;
        }
        return s;  // unreachable for a graph with a cycle
    });
}

// ceil((q - p + 1) / (Delta - 1)) per component; 0 on forests.
inline long long max_degree_lower_bound(const Graph& g) {
    if (!g.is_simple()) throw std::invalid_argument("max_degree_lower_bound requires a simple graph");
    return detail::sum_over_components(g, [](long long p, long long q, std::vector<int>& degs) {
        long long rank = q - p + 1;
        if (rank <= 0) return 0LL;
        long long delta = *std::max_element(degs.begin(), degs.end());
        return (rank + delta - 2) / (delta - 1);
    });
}

// Best known lower bound for nabla(Q_n): the exact values up to n = 8,
// then the larger of doubling the previous bound and
// ceil(2^{n-1} - (2^{n-1} - 1)/(n - 1)).
inline long long cube_lower_bound(int n) {
    static const long long exact[9] = {0, 0, 1, 3, 6, 14, 28, 56, 112};
    if (n < 1 || n > 62) throw std::invalid_argument("cube dimension out of supported range");
    if (n <= 8) return exact[n];
    long long bound = exact[8];
    for (int k = 9; k <= n; ++k) {
        long long half = 1LL << (k - 1);
        long long sphere = (half * (k - 2) + 1 + (k - 2)) / (k - 1);  // ceil
        bound = std::max(2 * bound, sphere);
    }
    return bound;
}

// min(r, s) - 1 over the bipartition classes, floored at 0.
inline long long bipartite_upper_bound(const Graph& g) {
    auto parts = bipartition(g);
    if (!parts) throw std::invalid_argument("bipartite_upper_bound requires a bipartite graph");
    long long smaller = std::min(parts->first.size(), parts->second.size());
    return std::max(smaller - 1, 0LL);
}

// beta(G) - 1 for nonnull graphs within the exact independence cap.
inline long long covering_upper_bound(const Graph& g, int exact_limit = 40) {
    if (g.edge_count() == 0) throw std::invalid_argument("covering_upper_bound requires a nonnull graph");
    return independence_and_covering(g, exact_limit).beta - 1;
}

// (2 nabla(G), nabla(G) + beta(G)) bracketing nabla(K_2 x G).
inline std::pair<long long, long long> product_bounds(const Graph& g, int exact_limit = 40,
                                                      double budget_seconds = 60.0) {
    DecyclingResult r = branch_and_bound(g, budget_seconds);
    if (r.status != SolveStatus::optimal)
        throw std::runtime_error("product_bounds: exact solve did not finish in budget");
    long long beta = g.vertex_count() == 0 ? 0 : independence_and_covering(g, exact_limit).beta;
    return {2LL * r.value, r.value + beta};
}

// floor((mn - m - n + 2) / 3); proved only for m, n >= 3.
inline long long grid_lower_bound(long long m, long long n) {
    if (m < 3 || n < 3) throw std::invalid_argument("grid_lower_bound requires m, n >= 3");
    return (m * n - m - n + 2) / 3;
}

namespace detail {

// Closed-form grid values for narrow strips: exact for min side <= 7 with
// long side >= 4, plus the tiny oracle-backed cases.  Covers every residual
// the recursive upper bound can ask for.
inline std::optional<long long> narrow_grid_value(long long m, long long n) {
    if (m > n) std::swap(m, n);
    if (m < 1) throw std::invalid_argument("grid sides must be positive");
    if (m == 1) return 0;
    if (n <= 3) {
        // (2,2) and (2,3) need one vertex; in (3,3) deleting any single
        // vertex leaves a cycle (the center leaves the outer 8-cycle).
        return m == 2 ? 1 : 2;
    }
    switch (m) {
        case 2: return n / 2;
        case 3: return 3 * n / 4;
        case 4: return n;
        case 5: return 3 * n / 2 - n / 8 - 1;
        case 6: return 5 * n / 3;
        case 7: return 2 * n - 1;
        default: return std::nullopt;
    }
}

}  // namespace detail

// Recursive upper bound: with m = 6q + r, n = 6s + t (1 <= r, t <= 6), take
// the better of q(2n - 1) + nabla(P_r x P_n) and s(2m - 1) + nabla(P_t x P_m),
// the residuals resolved by the narrow-strip catalog.
inline long long grid_upper_bound(long long m, long long n) {
    if (m < 1 || n < 1) throw std::invalid_argument("grid sides must be positive");
    auto decompose = [](long long rows, long long cols) {
        long long r = (rows - 1) % 6 + 1;
        long long q = (rows - r) / 6;
        auto residual = detail::narrow_grid_value(r, cols);
        return q * (2 * cols - 1) + *residual;  // r <= 6, so always resolvable
    };
    return std::min(decompose(m, n), decompose(n, m));
}

// 1 <= nabla(G) <= floor(n/3) for maximal outerplanar graphs of order n.
inline std::pair<long long, long long> outerplanar_bounds(long long n) {
    if (n < 3) throw std::invalid_argument("outerplanar_bounds requires n >= 3");
    return {1, n / 3};
}

// Bracketing values for nabla(Q_n), 9 <= n <= 13: the computed lower bound
// and the recorded best-known uppers.
inline std::pair<long long, long long> cube_bounds_table(int n) {
    static const long long uppers[5] = {237, 493, 1005, 2029, 4077};
    if (n < 9 || n > 13) throw std::invalid_argument("cube_bounds_table covers 9 <= n <= 13");
    return {cube_lower_bound(n), uppers[n - 9]};
}

// Every generally-applicable bound for one graph, tagged with provenance.
inline BoundReport bound_report(const Graph& g, int exact_limit = 40) {
    BoundReport report;
    if (g.is_simple()) {
        report.entries.push_back(
            {"degree_sum", BoundKind::lower, degree_sum_lower_bound(g), "Lemma 1.1"});
        report.entries.push_back(
            {"max_degree", BoundKind::lower, max_degree_lower_bound(g), "Corollary 1.2"});
    }
    report.entries.push_back(
        {"cycle_packing", BoundKind::lower, cycle_packing_lower_bound(g), "disjoint cycles"});
    if (g.is_simple() && g.edge_count() > 0 && g.vertex_count() <= exact_limit)
        report.entries.push_back(
            {"covering", BoundKind::upper, covering_upper_bound(g, exact_limit), "Lemma 1.5"});
    if (bipartition(g))
        report.entries.push_back(
            {"bipartite", BoundKind::upper, bipartite_upper_bound(g), "Lemma 3.1"});
    return report;
}

}  // namespace decycle

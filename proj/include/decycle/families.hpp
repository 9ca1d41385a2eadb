#pragma once

// Closed-form decycling numbers where a proof exists, explicit bound
// fallbacks elsewhere.  Overlapping formula cases are cross-asserted.

#include "decycle/bounds.hpp"
#include "decycle/generators.hpp"
#include "decycle/graph.hpp"

namespace decycle {

struct FormulaAnswer {
    std::optional<long long> value;
    std::string citation;
    std::optional<BoundReport> fallback;  // present exactly when value is not
};

// nabla(K_p) = p - 2 (0 for p <= 2).
inline long long complete_formula(long long p) {
    if (p < 1) throw std::invalid_argument("complete_formula requires p >= 1");
    return std::max(p - 2, 0LL);
}

// nabla of a complete multipartite graph: an induced forest holds at most
// one full part plus one extra vertex, so the value is N - s - 1 with s the
// largest part (0 for the edgeless single-part case).
inline long long multipartite_formula(const std::vector<long long>& parts) {
    if (parts.empty()) throw std::invalid_argument("at least one part required");
    for (long long p : parts)
        if (p < 1) throw std::invalid_argument("part sizes must be positive");
    if (parts.size() == 1) return 0;
    long long total = 0, largest = 0;
    for (long long p : parts) {
        total += p;
        largest = std::max(largest, p);
    }
    return total - largest - 1;
}

inline FormulaAnswer cube_formula(int n) {
    if (n < 1) throw std::invalid_argument("cube_formula requires n >= 1");
    static const long long exact[9] = {0, 0, 1, 3, 6, 14, 28, 56, 112};
    if (n <= 8) return {exact[n], "exact cube table", std::nullopt};
    BoundReport fallback;
    if (n <= 13) {
        auto [lo, hi] = cube_bounds_table(n);
        fallback.entries.push_back({"cube_lower", BoundKind::lower, lo, "Lemma 2.1"});
        fallback.entries.push_back({"cube_upper", BoundKind::upper, hi, "Theorem 4.1"});
        return {std::nullopt, "Theorem 4.1", fallback};
    }
    fallback.entries.push_back({"cube_lower", BoundKind::lower, cube_lower_bound(n), "Lemma 2.1"});
    fallback.entries.push_back(
        {"bipartite", BoundKind::upper, (1LL << (n - 1)) - 1, "Lemma 3.1"});
    return {std::nullopt, "Lemma 2.1 / Lemma 3.1", fallback};
}

inline FormulaAnswer grid_formula(long long m, long long n) {
    if (m < 1 || n < 1) throw std::invalid_argument("grid sides must be positive");
    long long a = std::min(m, n), b = std::max(m, n);

    struct Hit {
        long long value;
        std::string citation;
    };
    std::vector<Hit> hits;

    if (a == 1) {
        hits.push_back({0, "path, forest"});
    } else if (b <= 3) {
        hits.push_back({a == 2 ? 1LL : 2LL, "small grid, exact search"});
    }
    if (a <= 7 && b >= 4) {
        auto value = detail::narrow_grid_value(a, b);
        hits.push_back({*value, "Theorem 5.1(" + std::to_string(a - 1) + ")"});
    }
    for (auto [rows, cols] : {std::pair{a, b}, std::pair{b, a}}) {
        // Both cases need the even/odd side at width >= 4 resp. 7: the
        // doubling argument behind them breaks on a width-2 strip (already
        // at P_10 x P_2, where the strip formula gives 5, not 4).
        if (rows >= 4 && rows % 3 == 1 && cols >= 4 && cols % 2 == 0) {
            long long r = (rows - 1) / 3;
            hits.push_back({r * cols - r + 1, "Theorem 5.5"});
        }
        if (rows >= 7 && rows % 6 == 1 && cols >= 7 && cols % 4 == 3) {
            long long r = (rows - 1) / 6, s = (cols + 1) / 4;
            hits.push_back({8 * r * s - 4 * r + 1, "Corollary 5.1"});
        }
    }

    if (!hits.empty()) {
        for (const Hit& h : hits)
            if (h.value != hits.front().value)
                throw std::logic_error("grid formula cases disagree for " + std::to_string(m) +
                                       "x" + std::to_string(n));
        return {hits.front().value, hits.front().citation, std::nullopt};
    }
    BoundReport fallback;  // only reachable with both sides >= 8
    fallback.entries.push_back(
        {"grid_lower", BoundKind::lower, grid_lower_bound(m, n), "Corollary 3.3"});
    fallback.entries.push_back(
        {"grid_upper", BoundKind::upper, grid_upper_bound(m, n), "Theorem 5.3"});
    return {std::nullopt, "Corollary 3.3 / Theorem 5.3", fallback};
}

// Doubling construction: map a minimum decycling set of P_m x P_n with
// cardinality ceil((mn - m - n + 2)/3) by (i, j) -> (2i - 1, 2j - 1) and add
// all even-even positions of P_{2m-1} x P_{2n-1}.  The output is validated
// as a decycling set before it is returned.
inline VertexSet grid_expand_decycling_set(int m, int n, const VertexSet& s) {
    Graph small = grid(m, n);
    long long want = (static_cast<long long>(m) * n - m - n + 2 + 2) / 3;  // ceiling
    if (static_cast<long long>(s.size()) != want || !is_decycling_set(small, s))
        throw std::invalid_argument(
            "input is not a decycling set of the required minimum cardinality");
    int big_cols = 2 * n - 1;
    std::vector<int> out;
    for (int id : s) {
        int i = id / n, j = id % n;  // 0-based
        out.push_back((2 * i) * big_cols + (2 * j));
    }
    for (int i = 1; i < 2 * m - 2; i += 2)
        for (int j = 1; j < 2 * n - 2; j += 2) out.push_back(i * big_cols + j);
    VertexSet result = make_vertex_set(out);
    if (!is_decycling_set(grid(2 * m - 1, 2 * n - 1), result))
        throw std::logic_error("expanded set fails to decycle the doubled grid");
    return result;
}

// Sanity envelope for nabla(P_m x P_n) = mn/3 + O(m + n), with the O-constant
// fixed at 2 for testing purposes.
inline bool grid_asymptotic_check(long long m, long long n, long long value) {
    if (m <= 2 || n <= 2) throw std::invalid_argument("grid_asymptotic_check requires m, n > 2");
    long long diff = 3 * value - m * n;
    return std::abs(diff) <= 3 * 2 * (m + n);
}

}  // namespace decycle

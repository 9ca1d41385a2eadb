#pragma once

// Formula-vs-oracle cross-check suites used by the `verify` CLI subcommand.

#include <functional>

#include "decycle/families.hpp"
#include "decycle/snake.hpp"
#include "decycle/solver.hpp"

namespace decycle {

struct VerifyLine {
    std::string name;
    long long instances = 0;
    long long mismatches = 0;
};

struct VerifyReport {
    std::vector<VerifyLine> lines;
    bool ok() const {
        for (const auto& l : lines)
            if (l.mismatches > 0) return false;
        return true;
    }
};

namespace detail {

inline void partitions_up_to(int total, int max_part, std::vector<long long>& current,
                             const std::function<void(const std::vector<long long>&)>& emit) {
    if (current.size() >= 2) emit(current);
    for (int next = std::min(total, max_part); next >= 1; --next) {
        current.push_back(next);
        partitions_up_to(total - next, next, current, emit);
        current.pop_back();
    }
}

}  // namespace detail

// Complete multipartite formula against the oracle, all part lists with the
// given total or less.
inline VerifyLine verify_multipartite(int total_cap) {
    VerifyLine line{"multipartite formula vs oracle (total <= " + std::to_string(total_cap) + ")"};
    std::vector<long long> parts;
    detail::partitions_up_to(total_cap, total_cap, parts, [&](const std::vector<long long>& p) {
        std::vector<int> sizes(p.begin(), p.end());
        Graph g = complete_multipartite(sizes);
        line.instances++;
        if (multipartite_formula(p) != oracle(g).value) line.mismatches++;
    });
    return line;
}

// Every grid with a closed-form value and at most vertex_cap vertices.
inline VerifyLine verify_grids(int vertex_cap) {
    VerifyLine line{"grid formulas vs oracle (mn <= " + std::to_string(vertex_cap) + ")"};
    for (int m = 1; m * m <= vertex_cap; ++m) {
        for (int n = m; m * n <= vertex_cap; ++n) {
            FormulaAnswer answer = grid_formula(m, n);
            if (!answer.value) continue;
            line.instances++;
            if (*answer.value != oracle(grid(m, n), vertex_cap).value) line.mismatches++;
        }
    }
    return line;
}

template <typename Fn>
inline void for_each_square_snake(int max_cells, Fn visit) {
    for (int cells = 2; cells <= max_cells; ++cells) {
        int junctions = cells - 2;
        std::vector<int> turn(junctions, 0);
        while (true) {
            std::string encoded;
            for (int t : turn) encoded += "RSL"[t];
            visit(square_snake_from_turns(cells, encoded));
            int i = junctions - 1;
            while (i >= 0 && turn[i] == 2) turn[i--] = 0;
            if (i < 0) break;
            turn[i]++;
        }
    }
}

// Exhaustive square-celled snakes: nickname cardinality == greedy set size
// == oracle value.
inline VerifyLine verify_snakes(int max_cells) {
    VerifyLine line{"snake nickname/greedy vs oracle (cells <= " + std::to_string(max_cells) + ")"};
    for_each_square_snake(max_cells, [&](const SnakeSpec& spec) {
        Snake snake = build_snake(spec);
        long long by_name = nabla_snake(spec);
        VertexSet greedy = greedy_decycle(spec);
        int exact = oracle(snake.graph, snake.graph.vertex_count()).value;
        line.instances++;
        if (by_name != exact || static_cast<long long>(greedy.size()) != exact ||
            !is_decycling_set(snake.graph, greedy))
            line.mismatches++;
    });
    return line;
}

inline VerifyReport verify_suite(const std::string& scope, int cap) {
    VerifyReport report;
    if (scope == "families" || scope == "all")
        report.lines.push_back(verify_multipartite(cap > 0 ? std::min(cap, 12) : 12));
    if (scope == "grids" || scope == "all")
        report.lines.push_back(verify_grids(cap > 0 ? cap : 30));
    if (scope == "snakes" || scope == "all")
        report.lines.push_back(verify_snakes(cap > 0 ? std::min(cap, 10) : 8));
    if (report.lines.empty()) throw std::invalid_argument("unknown verify scope: " + scope);
    return report;
}

}  // namespace decycle

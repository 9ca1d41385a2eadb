#pragma once

// Deterministic constructors for the graph families under study: paths,
// cycles, complete and multipartite graphs, the Petersen graph, hypercubes,
// grids, tori, triangle replacements of cubic graphs and maximal
// outerplanar graphs (polygon triangulations).

#include <random>

#include "decycle/graph.hpp"
#include "decycle/ops.hpp"

namespace decycle {

inline Graph path(int p) {
    if (p < 1) throw std::invalid_argument("path requires p >= 1");
    Graph g(p);
    for (int v = 0; v + 1 < p; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle(int p) {
    if (p < 3) throw std::invalid_argument("cycle requires p >= 3");
    Graph g(p);
    for (int v = 0; v < p; ++v) g.add_edge(v, (v + 1) % p);
    return g;
}

inline Graph complete(int p) {
    if (p < 1) throw std::invalid_argument("complete requires p >= 1");
    Graph g(p);
    for (int u = 0; u < p; ++u)
        for (int v = u + 1; v < p; ++v) g.add_edge(u, v);
    return g;
}

inline Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("at least one part required");
    int total = 0;
    std::vector<int> part_of;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("part sizes must be positive");
        total += parts[i];
        part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
    }
    Graph g(total);
    for (int u = 0; u < total; ++u)
        for (int v = u + 1; v < total; ++v)
            if (part_of[u] != part_of[v]) g.add_edge(u, v);
    return g;
}

inline Graph complete_bipartite(int r, int s) {
    return complete_multipartite({r, s});
}

inline Graph star(int p) {
    if (p < 1) throw std::invalid_argument("star requires p >= 1");
    Graph g(p);
    for (int v = 1; v < p; ++v) g.add_edge(0, v);
    return g;
}

// Outer 5-cycle, inner pentagram, spokes.
inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

// Q_n on binary n-strings, adjacency = Hamming distance 1.  Bit k of the
// vertex index is coordinate k; labels spell the string most significant
// coordinate first.
inline Graph hypercube(int n, int max_dimension = 20) {
    if (n < 1) throw std::invalid_argument("hypercube requires n >= 1");
    if (n > max_dimension) throw std::invalid_argument("hypercube dimension over cap");
    Graph g(1 << n);
    for (int v = 0; v < (1 << n); ++v)
        for (int k = 0; k < n; ++k)
            if (!(v & (1 << k))) g.add_edge(v, v | (1 << k));
    for (int v = 0; v < (1 << n); ++v) {
        std::string bits(n, '0');
        for (int k = 0; k < n; ++k)
            if (v & (1 << k)) bits[n - 1 - k] = '1';
        g.set_label(v, bits);
    }
    return g;
}

struct GridSpec {
    int m = 1;  // rows
    int n = 1;  // columns
};

// P_m x P_n with "v_{i,j}" labels in 1-based matrix convention; internal
// ids are row-major 0-based.
inline Graph grid(GridSpec spec) {
    if (spec.m < 1 || spec.n < 1) throw std::invalid_argument("grid requires m, n >= 1");
    Graph g(spec.m * spec.n);
    auto id = [&](int i, int j) { return i * spec.n + j; };
    for (int i = 0; i < spec.m; ++i) {
        for (int j = 0; j < spec.n; ++j) {
            if (i + 1 < spec.m) g.add_edge(id(i, j), id(i + 1, j));
            if (j + 1 < spec.n) g.add_edge(id(i, j), id(i, j + 1));
            g.set_label(id(i, j),
                        "v_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}");
        }
    }
    return g;
}

inline Graph grid(int m, int n) { return grid(GridSpec{m, n}); }

// C_m x C_n.
inline Graph torus(int m, int n) {
    if (m < 3 || n < 3) throw std::invalid_argument("torus requires m, n >= 3");
    Graph g(m * n);
    auto id = [&](int i, int j) { return i * n + j; };
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            g.add_edge(id(i, j), id((i + 1) % m, j));
            g.add_edge(id(i, j), id(i, (j + 1) % n));
            g.set_label(id(i, j),
                        "v_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}");
        }
    }
    return g;
}

// Replace each vertex of a cubic graph by a triangle; each original edge
// joins distinct triangle corners.  The result is cubic on 3|g| vertices.
inline Graph triangle_replacement(const Graph& g) {
    if (!g.is_simple()) throw std::invalid_argument("triangle_replacement requires a simple graph");
    std::vector<int> deg = g.degrees();
    for (int d : deg)
        if (d != 3) throw std::invalid_argument("triangle_replacement requires a cubic graph");
    Graph h(3 * g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        h.add_edge(3 * v, 3 * v + 1);
        h.add_edge(3 * v + 1, 3 * v + 2);
        h.add_edge(3 * v, 3 * v + 2);
    }
    std::vector<int> used(g.vertex_count(), 0);  // corners consumed per vertex
    for (const Edge& e : g.edges()) h.add_edge(3 * e.u + used[e.u]++, 3 * e.v + used[e.v]++);
    return h;
}

namespace detail {

inline void triangulate_range(Graph& g, int lo, int hi, std::mt19937& rng) {
    // Vertices lo..hi along the polygon with the chord (lo, hi) present.
    if (hi - lo < 2) return;
    std::uniform_int_distribution<int> pick(lo + 1, hi - 1);
    int k = pick(rng);
    if (k - lo >= 2) g.add_edge(lo, k);
    if (hi - k >= 2) g.add_edge(k, hi);
    triangulate_range(g, lo, k, rng);
    triangulate_range(g, k, hi, rng);
}

}  // namespace detail

// Seeded random triangulation of an n-gon: the n-cycle plus n-3 non-crossing
// chords; always 2n-3 edges.
inline Graph maximal_outerplanar(int n, unsigned seed) {
    if (n < 3) throw std::invalid_argument("maximal_outerplanar requires n >= 3");
    Graph g = cycle(n);
    std::mt19937 rng(seed);
    detail::triangulate_range(g, 0, n - 1, rng);
    return g;
}

// Deterministic fan triangulation: all chords from vertex 0.
inline Graph maximal_outerplanar_fan(int n) {
    if (n < 3) throw std::invalid_argument("maximal_outerplanar requires n >= 3");
    Graph g = cycle(n);
    for (int v = 2; v + 1 < n; ++v) g.add_edge(0, v);
    return g;
}

}  // namespace decycle

#pragma once

// Structural operations: cartesian products, identification (gluing),
// homeomorphic smoothing, connectivity and exact independence/covering
// numbers.

#include <cstdint>
#include <set>

#include "decycle/graph.hpp"

namespace decycle {

// Cartesian product G x H: vertices are pairs, edges connect pairs equal in
// one coordinate and adjacent in the other.  Vertex (x, y) gets index
// x * |H| + y and a "(lx,ly)" label built from the factor labels.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    if (!g.is_simple() || !h.is_simple())
        throw std::invalid_argument("cartesian_product requires simple graphs");
    int ng = g.vertex_count(), nh = h.vertex_count();
    Graph product(ng * nh);
    auto id = [nh](int x, int y) { return x * nh + y; };
    for (int x = 0; x < ng; ++x)
        for (const Edge& e : h.edges()) product.add_edge(id(x, e.u), id(x, e.v));
    for (int y = 0; y < nh; ++y)
        for (const Edge& e : g.edges()) product.add_edge(id(e.u, y), id(e.v, y));
    for (int x = 0; x < ng; ++x) {
        for (int y = 0; y < nh; ++y) {
            std::string lx = g.has_label(x) ? g.label(x) : std::to_string(x);
            std::string ly = h.has_label(y) ? h.label(y) : std::to_string(y);
            product.set_label(id(x, y), "(" + lx + "," + ly + ")");
        }
    }
    return product;
}

struct BijectionSpec {
    // Ordered pairs (s_i, t_i) mapping vertices of the first graph into the
    // second; both coordinate lists must be duplicate-free.
    std::vector<std::pair<int, int>> pairs;
};

// Identification H o_f J: glue J onto H along the bijection f, keeping the
// simple union of both edge sets.  Vertices of H keep their ids; unmatched
// vertices of J are appended.
inline Graph identification(const Graph& h, const Graph& j, const BijectionSpec& f) {
    std::set<int> domain, codomain;
    for (auto [s, t] : f.pairs) {
        if (s < 0 || s >= h.vertex_count() || t < 0 || t >= j.vertex_count())
            throw std::out_of_range("bijection endpoint out of range");
        if (!domain.insert(s).second || !codomain.insert(t).second)
            throw std::invalid_argument("bijection is not injective");
    }
    std::vector<int> j_to_result(j.vertex_count(), -1);
    for (auto [s, t] : f.pairs) j_to_result[t] = s;
    int next = h.vertex_count();
    for (int v = 0; v < j.vertex_count(); ++v)
        if (j_to_result[v] < 0) j_to_result[v] = next++;

    Graph result(next);
    std::set<Edge> seen;
    auto add_unique = [&](int u, int v) {
        Edge e = make_edge(u, v);
        if (seen.insert(e).second) result.add_edge(e.u, e.v);
    };
    for (const Edge& e : h.edges()) add_unique(e.u, e.v);
    for (const Edge& e : j.edges()) add_unique(j_to_result[e.u], j_to_result[e.v]);
    return result;
}

// Repeatedly replaces each degree-2 vertex not incident to a loop by an edge
// between its neighbors.  May create loops and parallel edges; the result is
// homeomorphic to the input, so the decycling number is preserved.
inline Graph smooth_homeomorphic(const Graph& g) {
    int n = g.vertex_count();
    std::vector<char> alive(n, 1);
    std::vector<Edge> edges = g.edges();
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> deg(n, 0);
        std::vector<char> has_loop(n, 0);
        for (const Edge& e : edges) {
            deg[e.u]++;
            deg[e.v]++;
            if (e.u == e.v) has_loop[e.u] = 1;
        }
        for (int v = 0; v < n && !changed; ++v) {
            if (!alive[v] || deg[v] != 2 || has_loop[v]) continue;
            std::vector<int> ends;
            std::vector<Edge> kept;
            for (const Edge& e : edges) {
                if (e.u == v || e.v == v)
                    ends.push_back(e.u == v ? e.v : e.u);
                else
                    kept.push_back(e);
            }
            kept.push_back(make_edge(ends[0], ends[1]));
            edges = std::move(kept);
            alive[v] = 0;
            changed = true;
        }
    }
    std::vector<int> new_id(n, -1);
    int count = 0;
    for (int v = 0; v < n; ++v)
        if (alive[v]) new_id[v] = count++;
    Graph result(count);
    for (const Edge& e : edges) result.add_edge(new_id[e.u], new_id[e.v]);
    return result;
}

namespace detail {

// Max-flow value between s and t with unit vertex capacities, via node
// splitting and BFS augmentation.  Used only at desk scale.
inline int vertex_disjoint_paths(const Graph& g, int s, int t) {
    int n = g.vertex_count();
    // Node v splits into 2v (in) and 2v+1 (out).
    struct Arc {
        int to, cap, rev;
    };
    std::vector<std::vector<Arc>> arcs(2 * n);
    auto add_arc = [&](int from, int to, int cap) {
        arcs[from].push_back({to, cap, static_cast<int>(arcs[to].size())});
        arcs[to].push_back({from, 0, static_cast<int>(arcs[from].size()) - 1});
    };
    const int inf = 1 << 20;
    for (int v = 0; v < n; ++v) add_arc(2 * v, 2 * v + 1, v == s || v == t ? inf : 1);
    for (const Edge& e : g.edges()) {
        add_arc(2 * e.u + 1, 2 * e.v, 1);
        add_arc(2 * e.v + 1, 2 * e.u, 1);
    }
    int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    while (true) {
        std::vector<std::pair<int, int>> parent(2 * n, {-1, -1});
        std::queue<int> queue;
        queue.push(source);
        parent[source] = {source, -1};
        while (!queue.empty() && parent[sink].first < 0) {
            int x = queue.front();
            queue.pop();
            for (size_t i = 0; i < arcs[x].size(); ++i) {
                const Arc& a = arcs[x][i];
                if (a.cap > 0 && parent[a.to].first < 0) {
                    parent[a.to] = {x, static_cast<int>(i)};
                    queue.push(a.to);
                }
            }
        }
        if (parent[sink].first < 0) break;
        for (int x = sink; x != source;) {
            auto [px, pi] = parent[x];
            arcs[px][pi].cap--;
            arcs[x][arcs[px][pi].rev].cap++;
            x = px;
        }
        flow++;
    }
    return flow;
}

}  // namespace detail

// Vertex connectivity kappa(G): minimum vertex cut over all non-adjacent
// pairs; K_p yields p - 1.
inline int connectivity(const Graph& g) {
    if (!g.is_simple()) throw std::invalid_argument("connectivity requires a simple graph");
    int n = g.vertex_count();
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;
    int best = n - 1;
    bool found_pair = false;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            found_pair = true;
            best = std::min(best, detail::vertex_disjoint_paths(g, u, v));
        }
    }
    return found_pair ? best : n - 1;  // complete graph
}

struct IndependenceNumbers {
    int alpha = 0;  // maximum independent set
    int beta = 0;   // minimum vertex cover, |G| - alpha
};

namespace detail {

inline int mis_search(const std::vector<uint64_t>& neighbors, uint64_t mask) {
    if (mask == 0) return 0;
    // Strip vertices with at most one neighbor inside the mask.
    uint64_t scan = mask;
    while (scan) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        uint64_t nv = neighbors[v] & mask;
        if (std::popcount(nv) <= 1)
            return 1 + mis_search(neighbors, mask & ~((uint64_t{1} << v) | nv));
    }
    // Branch on a maximum-degree vertex.
    int pick = -1, pick_deg = -1;
    scan = mask;
    while (scan) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        int d = std::popcount(neighbors[v] & mask);
        if (d > pick_deg) {
            pick = v;
            pick_deg = d;
        }
    }
    uint64_t bit = uint64_t{1} << pick;
    int with = 1 + mis_search(neighbors, mask & ~(bit | neighbors[pick]));
    int without = mis_search(neighbors, mask & ~bit);
    return std::max(with, without);
}

}  // namespace detail

// Exact independence number alpha (branch search) and covering number
// beta = |G| - alpha.  Refuses graphs above the exact limit.
inline IndependenceNumbers independence_and_covering(const Graph& g, int exact_limit = 40) {
    if (!g.is_simple())
        throw std::invalid_argument("independence_and_covering requires a simple graph");
    int n = g.vertex_count();
    if (n > exact_limit || n > 63)
        throw std::invalid_argument("graph exceeds the exact independence-number limit");
    std::vector<uint64_t> neighbors(n, 0);
    for (const Edge& e : g.edges()) {
        neighbors[e.u] |= uint64_t{1} << e.v;
        neighbors[e.v] |= uint64_t{1} << e.u;
    }
    uint64_t all = n == 0 ? 0 : (~uint64_t{0} >> (64 - n));
    int alpha = detail::mis_search(neighbors, all);
    return {alpha, n - alpha};
}

}  // namespace decycle

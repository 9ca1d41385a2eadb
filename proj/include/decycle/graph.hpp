#pragma once

// Undirected multigraph and the structural queries every other module
// consumes.  Loops and parallel edges are allowed internally (degree-two
// smoothing creates them); all cycle logic treats a loop and a parallel
// pair as cycles.  Graph values are immutable after construction by
// convention: every operation here is a pure function.

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace decycle {

struct Edge {
    int u = 0, v = 0;  // normalized u <= v

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.u == b.u && a.v == b.v;
    }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

inline Edge make_edge(int u, int v) {
    if (u > v) std::swap(u, v);
    return Edge{u, v};
}

// Sorted, duplicate-free vertex ids.
using VertexSet = std::vector<int>;

inline VertexSet make_vertex_set(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count) : n_(vertex_count) {
        if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        edges_.push_back(make_edge(u, v));
    }

    bool has_edge(int u, int v) const {
        Edge e = make_edge(u, v);
        return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
    }

    bool has_label(int v) const {
        return v < static_cast<int>(labels_.size()) && !labels_[v].empty();
    }
    const std::string& label(int v) const {
        static const std::string empty;
        return has_label(v) ? labels_[v] : empty;
    }
    void set_label(int v, std::string label) {
        check_vertex(v);
        if (static_cast<int>(labels_.size()) < n_) labels_.resize(n_);
        labels_[v] = std::move(label);
    }

    // Loops contribute 2 to the degree of their vertex.
    std::vector<int> degrees() const {
        std::vector<int> deg(n_, 0);
        for (const Edge& e : edges_) {
            deg[e.u]++;
            deg[e.v]++;
        }
        return deg;
    }

    // Neighbor lists; a loop puts the vertex twice in its own list.
    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(n_);
        for (const Edge& e : edges_) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        return adj;
    }

    bool is_simple() const {
        std::vector<Edge> sorted = edges_;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i].u == sorted[i].v) return false;
            if (i > 0 && sorted[i] == sorted[i - 1]) return false;
        }
        return true;
    }

    // Equality is vertex count plus edge multiset; labels are not compared.
    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
        std::vector<Edge> ea = a.edges_, eb = b.edges_;
        std::sort(ea.begin(), ea.end());
        std::sort(eb.begin(), eb.end());
        return ea == eb;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
};

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    // Returns false if x and y were already in the same set.
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent_[x] = y;
        return true;
    }

private:
    std::vector<int> parent_;
};

inline int components(const Graph& g) {
    DisjointSets ds(g.vertex_count());
    int count = g.vertex_count();
    for (const Edge& e : g.edges())
        if (e.u != e.v && ds.unite(e.u, e.v)) count--;
    return count;
}

inline bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || components(g) == 1;
}

inline bool is_acyclic(const Graph& g) {
    DisjointSets ds(g.vertex_count());
    for (const Edge& e : g.edges()) {
        if (e.u == e.v) return false;           // loop
        if (!ds.unite(e.u, e.v)) return false;  // closes a cycle (parallel pair included)
    }
    return true;
}

// Cycle rank (Betti number) b(G) = q - p + omega.
inline int cycle_rank(const Graph& g) {
    return g.edge_count() - g.vertex_count() + components(g);
}

inline void check_vertex_set(const Graph& g, const VertexSet& s) {
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.vertex_count())
            throw std::out_of_range("vertex id out of range");
        if (i > 0 && s[i] <= s[i - 1])
            throw std::invalid_argument("vertex set not in canonical sorted form");
    }
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> original_ids;  // new id -> original id
};

// Induced subgraph on V \ s, with a stable reindexing map.
inline InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s) {
    check_vertex_set(g, s);
    std::vector<int> new_id(g.vertex_count(), -1);
    InducedSubgraph result;
    size_t si = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (si < s.size() && s[si] == v) {
            si++;
            continue;
        }
        new_id[v] = static_cast<int>(result.original_ids.size());
        result.original_ids.push_back(v);
    }
    result.graph = Graph(static_cast<int>(result.original_ids.size()));
    for (const Edge& e : g.edges())
        if (new_id[e.u] >= 0 && new_id[e.v] >= 0)
            result.graph.add_edge(new_id[e.u], new_id[e.v]);
    for (int v = 0; v < result.graph.vertex_count(); ++v)
        if (g.has_label(result.original_ids[v]))
            result.graph.set_label(v, g.label(result.original_ids[v]));
    return result;
}

inline bool is_decycling_set(const Graph& g, const VertexSet& s) {
    return is_acyclic(delete_vertices(g, s).graph);
}

// Outlay theta(S) = sigma(S) - |S| - eps(S) - omega(G - S) + 1, where sigma is
// the degree sum over S and eps the number of edges inside S.  Defined for
// connected graphs only.
inline int outlay(const Graph& g, const VertexSet& s) {
    check_vertex_set(g, s);
    if (!is_connected(g)) throw std::invalid_argument("outlay requires a connected graph");
    std::vector<char> in_s(g.vertex_count(), 0);
    for (int v : s) in_s[v] = 1;
    int sigma = 0;
    std::vector<int> deg = g.degrees();
    for (int v : s) sigma += deg[v];
    int eps = 0;
    for (const Edge& e : g.edges())
        if (in_s[e.u] && in_s[e.v]) eps++;
    int omega = components(delete_vertices(g, s).graph);
    return sigma - static_cast<int>(s.size()) - eps - omega + 1;
}

// BFS distance; nullopt when v is unreachable from u.
inline std::optional<int> distance(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        throw std::out_of_range("vertex id out of range");
    if (u == v) return 0;
    std::vector<int> dist(g.vertex_count(), -1);
    auto adj = g.adjacency();
    std::queue<int> queue;
    dist[u] = 0;
    queue.push(u);
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop();
        for (int y : adj[x]) {
            if (dist[y] >= 0) continue;
            dist[y] = dist[x] + 1;
            if (y == v) return dist[y];
            queue.push(y);
        }
    }
    return std::nullopt;
}

// Number of distinct 4-cycles of a simple graph.  Each 4-cycle is counted at
// both of its diagonal pairs, giving sum C(codeg(u,w), 2) / 2.
inline long long count_4cycles(const Graph& g) {
    if (!g.is_simple()) throw std::invalid_argument("count_4cycles requires a simple graph");
    int n = g.vertex_count();
    auto adj = g.adjacency();
    std::vector<char> mark(n, 0);
    long long total = 0;
    for (int u = 0; u < n; ++u) {
        for (int x : adj[u]) mark[x] = 1;
        for (int w = u + 1; w < n; ++w) {
            long long codeg = 0;
            for (int x : adj[w])
                if (x != u && x != w && mark[x]) codeg++;
            total += codeg * (codeg - 1) / 2;
        }
        for (int x : adj[u]) mark[x] = 0;
    }
    return total / 2;
}

// 2-coloring; nullopt when the graph is not bipartite.  Loops make a graph
// non-bipartite; parallel edges do not.
inline std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n, -1);
    auto adj = g.adjacency();
    for (int start = 0; start < n; ++start) {
        if (color[start] >= 0) continue;
        color[start] = 0;
        std::queue<int> queue;
        queue.push(start);
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop();
            for (int y : adj[x]) {
                if (y == x) return std::nullopt;
                if (color[y] < 0) {
                    color[y] = 1 - color[x];
                    queue.push(y);
                } else if (color[y] == color[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::pair<VertexSet, VertexSet> parts;
    for (int v = 0; v < n; ++v) (color[v] == 0 ? parts.first : parts.second).push_back(v);
    return parts;
}

}  // namespace decycle

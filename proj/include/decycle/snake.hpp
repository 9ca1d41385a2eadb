#pragma once

// Snakes: chains of cells (chordless cycles), each new cell glued along a
// free edge of the tail.  Implements the constructive builder, the greedy
// decycling procedure, the name/nickname classification and the segment
// sequence formula for square-celled snakes.

#include <map>

#include "decycle/graph.hpp"

namespace decycle {

struct SnakeSpec {
    // Cell lengths (each >= 3, at least two cells).  attachments[i] picks,
    // for cell i+2, an index into the current tail's free edges in traversal
    // order; attachments.size() == cells.size() - 1.
    std::vector<int> cells;
    std::vector<int> attachments;
};

// Square-celled convenience encoding: one turn per junction from the third
// cell on.  'S' continues opposite the shared edge, 'R' and 'L' take the
// side edges.
inline SnakeSpec square_snake_from_turns(int cell_count, const std::string& turns) {
    if (cell_count < 2) throw std::invalid_argument("a snake has at least two cells");
    if (static_cast<int>(turns.size()) != cell_count - 2)
        throw std::invalid_argument("expected one turn per junction after the second cell");
    SnakeSpec spec;
    spec.cells.assign(cell_count, 4);
    spec.attachments.push_back(0);
    for (char t : turns) {
        switch (t) {
            case 'R': spec.attachments.push_back(0); break;
            case 'S': spec.attachments.push_back(1); break;
            case 'L': spec.attachments.push_back(2); break;
            default: throw std::invalid_argument("turns must be S, L or R");
        }
    }
    return spec;
}

struct SnakeName {
    std::vector<int> entries;  // 2 minor pair, 3 major pair, >= 4 major vertex degree
};

struct Snake {
    Graph graph;
    std::vector<std::vector<int>> cell_vertices;  // traversal order per cell
    SnakeName name;
};

namespace detail {

struct FeatureKey {
    int type;  // 0 major vertex, 1 major pair, 2 minor pair
    int a, b;
    auto operator<=>(const FeatureKey&) const = default;
};

struct SnakeBuilder {
    std::vector<std::vector<int>> cells;              // vertex lists, traversal order
    std::vector<std::pair<int, int>> edges;           // traversal-directed
    std::map<Edge, int> edge_cells;                   // how many cells an edge lies on
    int vertex_count = 0;
    std::map<FeatureKey, int> birth;                  // first step a feature existed
    std::map<FeatureKey, std::pair<int, int>> minor_flanks;  // minor pair -> its majors

    void add_cell_edge(int a, int b) {
        edges.emplace_back(a, b);
        edge_cells[make_edge(a, b)]++;
    }

    std::vector<std::pair<int, int>> free_edges_of_tail() const {
        const std::vector<int>& tail = cells.back();
        std::vector<std::pair<int, int>> result;
        for (size_t i = 0; i < tail.size(); ++i) {
            int a = tail[i], b = tail[(i + 1) % tail.size()];
            if (edge_cells.at(make_edge(a, b)) == 1) result.emplace_back(a, b);
        }
        return result;
    }

    void start(int length) {
        std::vector<int> cell(length);
        std::iota(cell.begin(), cell.end(), 0);
        vertex_count = length;
        for (int i = 0; i < length; ++i) add_cell_edge(cell[i], cell[(i + 1) % length]);
        cells.push_back(std::move(cell));
    }

    void glue(int length, int attachment) {
        auto free = free_edges_of_tail();
        if (attachment < 0 || attachment >= static_cast<int>(free.size()))
            throw std::invalid_argument("attachment index out of range for tail's free edges");
        auto [a, b] = free[attachment];
        // New cell traversal starts with the reversed shared edge, keeping a
        // consistent chirality for the S/L/R encoding.
        std::vector<int> cell{b, a};
        edge_cells[make_edge(a, b)]++;
        int prev = a;
        for (int i = 0; i < length - 2; ++i) {
            int fresh = vertex_count++;
            add_cell_edge(prev, fresh);
            prev = fresh;
            cell.push_back(fresh);
        }
        add_cell_edge(prev, b);
        cells.push_back(std::move(cell));
    }

    std::vector<int> degrees() const {
        std::vector<int> deg(vertex_count, 0);
        for (auto [a, b] : edges) {
            deg[a]++;
            deg[b]++;
        }
        return deg;
    }

    // Current junction features: major vertices (degree >= 4), major pairs
    // (two-cell edges with both endpoints of degree 3) and minor pairs (the
    // two degree-3 vertices of a cell holding exactly two major vertices).
    std::vector<FeatureKey> features() {
        std::vector<int> deg = degrees();
        std::vector<FeatureKey> found;
        for (int v = 0; v < vertex_count; ++v)
            if (deg[v] >= 4) found.push_back({0, v, 0});
        for (auto& [edge, count] : edge_cells)
            if (count == 2 && deg[edge.u] == 3 && deg[edge.v] == 3)
                found.push_back({1, edge.u, edge.v});
        for (const auto& cell : cells) {
            std::vector<int> majors, threes;
            for (int v : cell) {
                if (deg[v] >= 4) majors.push_back(v);
                if (deg[v] == 3) threes.push_back(v);
            }
            if (majors.size() != 2 || threes.size() != 2) continue;
            Edge between = make_edge(threes[0], threes[1]);
            auto it = edge_cells.find(between);
            if (it != edge_cells.end() && it->second == 2) continue;  // that's a major pair
            FeatureKey key{2, between.u, between.v};
            found.push_back(key);
            minor_flanks[key] = {std::min(majors[0], majors[1]), std::max(majors[0], majors[1])};
        }
        return found;
    }

    void record_births(int step) {
        for (const FeatureKey& key : features())
            birth.try_emplace(key, step);
    }
};

}  // namespace detail

inline void validate_spec(const SnakeSpec& spec) {
    if (spec.cells.size() < 2) throw std::invalid_argument("a snake has at least two cells");
    for (int c : spec.cells)
        if (c < 3) throw std::invalid_argument("cell lengths must be at least 3");
    if (spec.attachments.size() != spec.cells.size() - 1)
        throw std::invalid_argument("expected one attachment per cell after the first");
}

inline Snake build_snake(const SnakeSpec& spec) {
    validate_spec(spec);
    detail::SnakeBuilder builder;
    builder.start(spec.cells[0]);
    for (size_t i = 1; i < spec.cells.size(); ++i) {
        builder.glue(spec.cells[i], spec.attachments[i - 1]);
        builder.record_births(static_cast<int>(i));
    }

    Snake snake;
    snake.graph = Graph(builder.vertex_count);
    for (auto [a, b] : builder.edges) snake.graph.add_edge(a, b);
    snake.cell_vertices = builder.cells;

    // Order the final features head to tail: creation order, with each minor
    // pair slotted in just before the later-born of the two major vertices
    // it lies between.
    std::vector<int> deg = builder.degrees();
    struct Ordered {
        long long key;
        int tie;
        detail::FeatureKey feature;
    };
    std::vector<Ordered> ordered;
    for (const detail::FeatureKey& f : builder.features()) {
        int b = builder.birth.at(f);
        if (f.type == 2) {
            auto [m1, m2] = builder.minor_flanks.at(f);
            int later = std::max(builder.birth.at({0, m1, 0}), builder.birth.at({0, m2, 0}));
            ordered.push_back({2LL * later, f.a, f});
        } else {
            ordered.push_back({2LL * b + 1, f.a, f});
        }
    }
    std::sort(ordered.begin(), ordered.end(), [](const Ordered& x, const Ordered& y) {
        return x.key != y.key ? x.key < y.key : x.tie < y.tie;
    });
    for (const Ordered& o : ordered) {
        if (o.feature.type == 0)
            snake.name.entries.push_back(deg[o.feature.a]);
        else
            snake.name.entries.push_back(o.feature.type == 1 ? 3 : 2);
    }
    return snake;
}

inline SnakeName name_sequence(const SnakeSpec& spec) { return build_snake(spec).name; }

// Nickname: the 1-based index subset whose cardinality is the decycling
// number.  Each name entry stands for a feature whose best vertex lies on a
// contiguous run of cells: a major vertex of degree d lies on d - 1 cells, a
// major pair on 2, and a minor pair only on cells already reachable from its
// flanking majors.  The cell intervals are reconstructed from the name alone
// (consecutive major vertices overlap by two cells, every other adjacency by
// one) and the nickname is a minimum interval cover, found by the standard
// furthest-reach scan.  The indices 1 and s are always chosen because only
// the first and last features reach the head and tail cells.
inline std::vector<int> nickname(const SnakeName& name) {
    int s = static_cast<int>(name.entries.size());
    if (s == 0) throw std::invalid_argument("empty snake name");
    struct Interval {
        int index, lo, hi;
    };
    std::vector<Interval> intervals;
    int p = 0;       // rightmost cell of the last major feature
    int prev = 0;    // previous entry value (0 before the first)
    for (int i = 1; i <= s; ++i) {
        int n = name.entries[i - 1];
        if (n < 2) throw std::invalid_argument("snake name entries must be at least 2");
        if (n == 2) {  // minor pair: dominated by its flanking majors, but it
            prev = n;  // marks them as separated by a straight junction
            continue;
        }
        int lo, hi;
        if (p == 0) {
            lo = 1;
            hi = n - 1;  // n == 3 gives the two head cells
        } else if (n == 3) {
            lo = p;
            hi = p + 1;
        } else {
            lo = prev >= 4 ? p - 1 : p;  // adjacent turn groups reach one cell back
            hi = lo + n - 2;
        }
        intervals.push_back({i, lo, hi});
        p = hi;
        prev = n;
    }
    std::vector<int> result;
    int covered = 0;  // cells 1..covered are handled
    size_t next = 0;
    while (covered < p) {
        int best = -1, best_hi = covered;
        for (size_t j = next; j < intervals.size() && intervals[j].lo <= covered + 1; ++j)
            if (intervals[j].hi > best_hi) {
                best_hi = intervals[j].hi;
                best = static_cast<int>(j);
            }
        if (best < 0) throw std::invalid_argument("snake name leaves a cell uncoverable");
        result.push_back(intervals[best].index);
        covered = best_hi;
        next = best + 1;
    }
    return result;
}

inline long long nabla_snake(const SnakeSpec& spec) {
    return static_cast<long long>(nickname(name_sequence(spec)).size());
}

// The head-first greedy procedure: take a maximum-degree vertex of the head
// cell, delete it together with every vertex that lies only on cells
// containing it, and continue on the shorter snake (or pick any vertex of a
// final single cell).  Produces a minimum decycling set.
inline VertexSet greedy_decycle(const SnakeSpec& spec) {
    Snake snake = build_snake(spec);
    int k = static_cast<int>(snake.cell_vertices.size());
    int n = snake.graph.vertex_count();
    std::vector<char> cell_alive(k, 1), vertex_alive(n, 1);
    std::vector<std::vector<int>> cells_of(n);
    for (int c = 0; c < k; ++c)
        for (int v : snake.cell_vertices[c]) cells_of[v].push_back(c);

    std::vector<int> chosen;
    while (true) {
        int head = -1, alive_cells = 0;
        for (int c = 0; c < k; ++c)
            if (cell_alive[c]) {
                if (head < 0) head = c;
                alive_cells++;
            }
        if (alive_cells == 0) break;
        int pick = -1;
        if (alive_cells == 1) {
            pick = *std::min_element(snake.cell_vertices[head].begin(),
                                     snake.cell_vertices[head].end());
        } else {
            std::vector<int> deg(n, 0);
            for (const Edge& e : snake.graph.edges())
                if (vertex_alive[e.u] && vertex_alive[e.v]) {
                    deg[e.u]++;
                    deg[e.v]++;
                }
            for (int v : snake.cell_vertices[head])
                if (vertex_alive[v] && (pick < 0 || deg[v] > deg[pick] ||
                                        (deg[v] == deg[pick] && v < pick)))
                    pick = v;
        }
        chosen.push_back(pick);
        std::vector<char> dying(k, 0);
        for (int c : cells_of[pick])
            if (cell_alive[c]) dying[c] = 1;
        for (int v = 0; v < n; ++v) {
            if (!vertex_alive[v]) continue;
            bool only_dying = true, any = false;
            for (int c : cells_of[v])
                if (cell_alive[c]) {
                    any = true;
                    if (!dying[c]) only_dying = false;
                }
            if (any && only_dying) vertex_alive[v] = 0;
        }
        for (int c = 0; c < k; ++c)
            if (dying[c]) cell_alive[c] = 0;
    }
    return make_vertex_set(chosen);
}

// Lengths of maximal straight segments of a square-celled snake, head to
// tail.  A junction is straight when its shared edge is a major pair.
inline std::vector<int> segment_sequence(const SnakeSpec& spec) {
    validate_spec(spec);
    for (int c : spec.cells)
        if (c != 4) throw std::invalid_argument("segment_sequence requires square cells");
    // A maximal straight segment runs from one turn junction to the next,
    // and consecutive segments share the cell at the turn: straightness of
    // a shared edge is judged inside the subsnake, where the turn vertex
    // loses the edges of the cell beyond the turn and drops back to degree
    // three.  Junction j sits between cells j and j+1; attachment index 1
    // is the straight (opposite-edge) gluing for a square cell.
    int m = static_cast<int>(spec.cells.size());
    std::vector<int> lengths;
    int start = 1;
    for (int j = 2; j < m; ++j) {
        if (spec.attachments[j - 1] != 1) {
            lengths.push_back(j - start + 1);
            start = j;
        }
    }
    lengths.push_back(m - start + 1);
    return lengths;
}

inline bool is_nonsingular(const SnakeSpec& spec) {
    for (int d : segment_sequence(spec))
        if (d < 3) return false;
    return true;
}

// sum ceil(d_i / 2) - k + 1 over the segment sequence; nonsingular
// square-celled snakes only.
inline long long segment_formula(const SnakeSpec& spec) {
    std::vector<int> segments = segment_sequence(spec);
    for (int d : segments)
        if (d < 3) throw std::invalid_argument("segment_formula requires a nonsingular snake");
    long long total = 0;
    for (int d : segments) total += (d + 1) / 2;
    return total - static_cast<long long>(segments.size()) + 1;
}

}  // namespace decycle

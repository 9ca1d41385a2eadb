#pragma once

// Exact minimum decycling set computation.  Two engines are kept strictly
// separate: a transparent subset-enumeration oracle that serves as ground
// truth, and a faster certified branch-and-bound with multigraph
// preprocessing, cycle branching and packing/rank lower bounds.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <thread>

#include "decycle/graph.hpp"

namespace decycle {

enum class SolveStatus { optimal, bounded, timeout };

struct DecyclingResult {
    VertexSet witness;
    int value = 0;
    SolveStatus status = SolveStatus::optimal;
    int lower = 0;  // strongest lower bound proved (== value when optimal)
    int upper = 0;
    long long nodes_explored = 0;
    double elapsed_seconds = 0.0;
};

namespace detail {

// Lexicographically first decycling set of exactly k vertices, if any.
inline std::optional<VertexSet> find_decycling_of_size(const Graph& g, int k,
                                                       long long* tested = nullptr) {
    int n = g.vertex_count();
    if (k > n) return std::nullopt;
    const std::vector<Edge>& edges = g.edges();
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    std::vector<int> parent(n);
    std::vector<char> removed(n, 0);
    while (true) {
        if (tested) (*tested)++;
        for (int v : pick) removed[v] = 1;
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool acyclic = true;
        for (const Edge& e : edges) {
            if (removed[e.u] || removed[e.v]) continue;
            int ru = find(e.u), rv = find(e.v);
            if (ru == rv) {  // loop or cycle-closing edge
                acyclic = false;
                break;
            }
            parent[ru] = rv;
        }
        for (int v : pick) removed[v] = 0;
        if (acyclic) return VertexSet(pick.begin(), pick.end());
        // next combination
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) i--;
        if (i < 0) return std::nullopt;
        pick[i]++;
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace detail

// Ground-truth solver: enumerates vertex subsets in increasing cardinality
// (lexicographic within each cardinality) and returns the first decycling
// set found.  Deliberately simple; refuses graphs over the cap.
inline DecyclingResult oracle(const Graph& g, int max_vertices = 26) {
    if (g.vertex_count() > max_vertices)
        throw std::invalid_argument("graph exceeds the oracle enumeration cap");
    auto t0 = std::chrono::steady_clock::now();
    DecyclingResult result;
    for (int k = 0; k <= g.vertex_count(); ++k) {
        auto witness = detail::find_decycling_of_size(g, k, &result.nodes_explored);
        if (witness) {
            result.witness = *witness;
            result.value = k;
            result.lower = result.upper = k;
            result.status = SolveStatus::optimal;
            break;
        }
    }
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

namespace detail {

// Mutable multigraph used by preprocessing and branch-and-bound.  A loop
// puts its vertex twice in its own adjacency list; degree == list size.
struct WorkGraph {
    std::vector<std::vector<int>> adj;
    std::vector<char> alive;
    std::vector<char> excluded;  // committed to stay out of the solution
    std::vector<int> orig;       // original vertex id (contracted merges keep one)
    int alive_count = 0;

    explicit WorkGraph(const Graph& g)
        : adj(g.vertex_count()),
          alive(g.vertex_count(), 1),
          excluded(g.vertex_count(), 0),
          orig(g.vertex_count()),
          alive_count(g.vertex_count()) {
        std::iota(orig.begin(), orig.end(), 0);
        for (const Edge& e : g.edges()) add_edge(e.u, e.v);
    }

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    void add_edge(int u, int v) {
        adj[u].push_back(v);
        if (u != v) adj[v].push_back(u);
        else adj[u].push_back(u);  // loop counts twice
    }

    void erase_one(std::vector<int>& list, int value) {
        auto it = std::find(list.begin(), list.end(), value);
        list.erase(it);
    }

    void remove_edge(int u, int v) {
        erase_one(adj[u], v);
        erase_one(adj[v], u);  // for a loop this erases the second copy
    }

    void remove_vertex(int v) {
        for (int u : adj[v])
            if (u != v) erase_one(adj[u], v);
        adj[v].clear();
        alive[v] = 0;
        alive_count--;
    }

    bool has_loop(int v) const {
        return std::find(adj[v].begin(), adj[v].end(), v) != adj[v].end();
    }

    // Merge u into v (both excluded, exactly one u-v edge).
    void contract_into(int v, int u) {
        remove_edge(u, v);
        for (int w : adj[u]) {
            erase_one(adj[w], u);
            add_edge(v, w);
        }
        adj[u].clear();
        alive[u] = 0;
        alive_count--;
    }
};

// Exhaustive reduction to a fixpoint.  Returns false when the exclusion
// constraints are infeasible (a cycle consists of excluded vertices only).
// Rules: drop degree <= 1; force loop vertices; cap parallel multiplicity
// at 2 and force across excluded parallel pairs; smooth degree-2 vertices;
// contract adjacent excluded pairs.
inline bool reduce(WorkGraph& g, int& offset, std::vector<int>& forced) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < static_cast<int>(g.adj.size()); ++v) {
            if (!g.alive[v]) continue;
            if (g.degree(v) <= 1) {
                g.remove_vertex(v);
                changed = true;
                continue;
            }
            if (g.has_loop(v)) {
                if (g.excluded[v]) return false;
                offset++;
                forced.push_back(g.orig[v]);
                g.remove_vertex(v);
                changed = true;
                continue;
            }
            // parallel multiplicities
            bool removed_v = false;
            bool touched = false;
            std::vector<int> nbrs = g.adj[v];
            std::sort(nbrs.begin(), nbrs.end());
            for (size_t i = 0; i + 1 < nbrs.size(); ++i) {
                if (nbrs[i] != nbrs[i + 1]) continue;
                int u = nbrs[i];
                if (g.excluded[v] && g.excluded[u]) return false;
                if (g.excluded[u]) {  // v must break the 2-cycle
                    offset++;
                    forced.push_back(g.orig[v]);
                    g.remove_vertex(v);
                    removed_v = true;
                } else if (g.excluded[v]) {
                    offset++;
                    forced.push_back(g.orig[u]);
                    g.remove_vertex(u);
                } else if (i + 2 < nbrs.size() && nbrs[i + 2] == u) {
                    g.remove_edge(v, u);  // cap multiplicity at 2
                } else {
                    continue;  // plain double edge between deletable vertices
                }
                touched = true;
                break;  // adjacency changed; rescan on the next pass
            }
            if (touched) {
                changed = true;
                if (removed_v) continue;
            }
            if (g.degree(v) == 2) {
                int a = g.adj[v][0], b = g.adj[v][1];
                // Smoothing is sound when v is excluded anyway, or when the
                // solution containing v could be shifted onto a deletable
                // neighbor; skip the one case where both neighbors are pinned.
                if (g.excluded[v] || !g.excluded[a] || !g.excluded[b]) {
                    g.remove_vertex(v);
                    g.add_edge(a, b);
                    changed = true;
                    continue;
                }
            }
            if (g.excluded[v]) {
                for (int u : std::vector<int>(g.adj[v])) {
                    if (u != v && g.alive[u] && g.excluded[u]) {
                        g.contract_into(v, u);
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    return true;
}

// Some cycle of the reduced graph, found by BFS from a maximum-degree
// vertex; near-shortest in practice.  Assumes the graph has a cycle.
inline std::vector<int> find_cycle(const WorkGraph& g) {
    int start = -1, best_deg = -1;
    for (int v = 0; v < static_cast<int>(g.adj.size()); ++v)
        if (g.alive[v] && g.degree(v) > best_deg) {
            start = v;
            best_deg = g.degree(v);
        }
    std::vector<int> parent(g.adj.size(), -2);
    std::queue<int> queue;
    for (int round = 0; round < 2; ++round) {
        // Round 0 starts from the chosen vertex; round 1 sweeps remaining
        // components (the cycle may live elsewhere).
        std::vector<int> starts;
        if (round == 0)
            starts.push_back(start);
        else
            for (int v = 0; v < static_cast<int>(g.adj.size()); ++v)
                if (g.alive[v] && parent[v] == -2) starts.push_back(v);
        for (int s : starts) {
            if (parent[s] != -2) continue;
            parent[s] = -1;
            queue.push(s);
            while (!queue.empty()) {
                int x = queue.front();
                queue.pop();
                bool skipped_parent = false;
                for (int y : g.adj[x]) {
                    if (y == parent[x] && !skipped_parent) {
                        skipped_parent = true;  // the tree edge itself
                        continue;
                    }
                    if (parent[y] == -2) {
                        parent[y] = x;
                        queue.push(y);
                    } else {
                        // non-tree edge (x, y): reconstruct the cycle
                        std::vector<char> on_x_path(g.adj.size(), 0);
                        for (int t = x; t != -1; t = parent[t]) on_x_path[t] = 1;
                        int meet = y;
                        while (!on_x_path[meet]) meet = parent[meet];
                        std::vector<int> cyc;
                        for (int t = x; t != meet; t = parent[t]) cyc.push_back(t);
                        for (int t = y; t != meet; t = parent[t]) cyc.push_back(t);
                        cyc.push_back(meet);
                        return cyc;
                    }
                }
            }
        }
    }
    return {};
}

// Per-component rank/degree lower bound: ceil((q - p + 1) / (Delta - 1)),
// summed over components.  Valid on loop-free multigraphs.
inline int rank_degree_bound(const WorkGraph& g) {
    int n = static_cast<int>(g.adj.size());
    std::vector<int> comp(n, -1);
    int bound = 0;
    for (int s = 0; s < n; ++s) {
        if (!g.alive[s] || comp[s] >= 0) continue;
        comp[s] = s;
        std::vector<int> stack{s};
        long long deg_sum = 0;
        int p = 0, max_deg = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            p++;
            deg_sum += g.degree(x);
            max_deg = std::max(max_deg, g.degree(x));
            for (int y : g.adj[x])
                if (comp[y] < 0) {
                    comp[y] = s;
                    stack.push_back(y);
                }
        }
        long long q = deg_sum / 2;
        long long rank = q - p + 1;
        if (rank > 0 && max_deg >= 2) bound += static_cast<int>((rank + max_deg - 2) / (max_deg - 1));
    }
    return bound;
}

// Greedy vertex-disjoint cycle packing on a copy of the work graph.
inline int greedy_cycle_packing(WorkGraph g) {
    int count = 0;
    while (true) {
        // strip acyclic fringe so find_cycle sees a cycle if one exists
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < static_cast<int>(g.adj.size()); ++v)
                if (g.alive[v] && g.degree(v) <= 1) {
                    g.remove_vertex(v);
                    changed = true;
                }
        }
        if (g.alive_count == 0) break;
        std::vector<int> cyc = find_cycle(g);
        if (cyc.empty()) break;
        for (int v : cyc) g.remove_vertex(v);
        count++;
    }
    return count;
}

struct SearchShared {
    std::atomic<int> best_value;
    std::mutex witness_mutex;
    std::vector<int> best_witness;
    std::atomic<long long> nodes{0};
    std::chrono::steady_clock::time_point deadline;
    std::atomic<bool> out_of_time{false};

    void offer(int value, const std::vector<int>& witness) {
        int current = best_value.load();
        while (value < current && !best_value.compare_exchange_weak(current, value)) {
        }
        if (value <= best_value.load()) {
            std::lock_guard<std::mutex> lock(witness_mutex);
            if (value <= best_value.load()) best_witness = witness;
        }
    }
};

struct SearchNode {
    WorkGraph graph;
    int offset;
    std::vector<int> forced;
};

inline void dfs(WorkGraph graph, int offset, std::vector<int> forced, SearchShared& shared) {
    if (shared.out_of_time.load(std::memory_order_relaxed)) return;
    long long n = shared.nodes.fetch_add(1, std::memory_order_relaxed);
    if ((n & 511) == 0 && std::chrono::steady_clock::now() > shared.deadline) {
        shared.out_of_time = true;
        return;
    }
    if (!reduce(graph, offset, forced)) return;
    if (offset >= shared.best_value.load(std::memory_order_relaxed)) return;
    if (graph.alive_count == 0) {
        shared.offer(offset, forced);
        return;
    }
    int lb = offset + rank_degree_bound(graph);
    if (lb >= shared.best_value.load(std::memory_order_relaxed)) return;
    if (offset + greedy_cycle_packing(graph) >= shared.best_value.load(std::memory_order_relaxed))
        return;

    std::vector<int> cyc = find_cycle(graph);
    std::vector<int> branchable;
    for (int v : cyc)
        if (!graph.excluded[v]) branchable.push_back(v);
    std::sort(branchable.begin(), branchable.end(), [&](int a, int b) {
        if (graph.degree(a) != graph.degree(b)) return graph.degree(a) > graph.degree(b);
        return graph.orig[a] < graph.orig[b];
    });
    // Some deletable vertex of this cycle is in any feasible solution.
    for (size_t i = 0; i < branchable.size(); ++i) {
        int v = branchable[i];
        WorkGraph child = graph;
        std::vector<int> child_forced = forced;
        child_forced.push_back(child.orig[v]);
        child.remove_vertex(v);
        dfs(std::move(child), offset + 1, std::move(child_forced), shared);
        if (shared.out_of_time.load(std::memory_order_relaxed)) return;
        graph.excluded[v] = 1;
    }
}

inline std::pair<int, std::vector<int>> greedy_decycling(WorkGraph g) {
    int offset = 0;
    std::vector<int> forced;
    while (true) {
        if (!reduce(g, offset, forced)) break;  // cannot happen without exclusions
        if (g.alive_count == 0) break;
        int pick = -1;
        for (int v = 0; v < static_cast<int>(g.adj.size()); ++v)
            if (g.alive[v] && (pick < 0 || g.degree(v) > g.degree(pick) ||
                               (g.degree(v) == g.degree(pick) && g.orig[v] < g.orig[pick])))
                pick = v;
        offset++;
        forced.push_back(g.orig[pick]);
        g.remove_vertex(pick);
    }
    return {offset, forced};
}

}  // namespace detail

struct PreprocessResult {
    Graph reduced;
    std::vector<int> original_ids;  // reduced vertex id -> id in the input graph
    VertexSet forced;
    int removed_value_offset = 0;
};

// Kernelization preserving the decycling number: delete degree <= 1
// vertices, force loop vertices into the solution, cap parallel
// multiplicities at 2 and smooth degree-2 vertices.  Guarantees
// nabla(g) = offset + nabla(reduced), with witnesses recoverable as
// forced + a decycling set of the reduced graph.
inline PreprocessResult preprocess(const Graph& g) {
    detail::WorkGraph work(g);
    PreprocessResult result;
    std::vector<int> forced;
    detail::reduce(work, result.removed_value_offset, forced);
    result.forced = make_vertex_set(forced);
    std::vector<int> new_id(g.vertex_count(), -1);
    for (int v = 0; v < static_cast<int>(work.adj.size()); ++v) {
        if (!work.alive[v]) continue;
        new_id[v] = static_cast<int>(result.original_ids.size());
        result.original_ids.push_back(work.orig[v]);
    }
    result.reduced = Graph(static_cast<int>(result.original_ids.size()));
    for (int v = 0; v < static_cast<int>(work.adj.size()); ++v) {
        if (!work.alive[v]) continue;
        for (int u : work.adj[v])
            if (u >= v) result.reduced.add_edge(new_id[v], new_id[u]);
        // a loop appears twice in its own list, but reductions remove loops,
        // so every u >= v entry is a distinct edge
    }
    return result;
}

// Size of a greedily constructed vertex-disjoint cycle packing: repeatedly
// take a shortest cycle and delete its vertices.  Always a valid lower
// bound on the decycling number.
inline int cycle_packing_lower_bound(const Graph& g) {
    return detail::greedy_cycle_packing(detail::WorkGraph(g));
}

// Certified exact search.  Status is optimal when the tree is exhausted
// within budget, else bounded(lower proved, incumbent).
inline DecyclingResult branch_and_bound(const Graph& g, double budget_seconds = 60.0,
                                        int threads = 1) {
    auto t0 = std::chrono::steady_clock::now();
    detail::SearchShared shared;
    shared.deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                               std::chrono::duration<double>(budget_seconds));

    detail::WorkGraph root(g);
    int offset = 0;
    std::vector<int> forced;
    detail::reduce(root, offset, forced);

    auto [greedy_value, greedy_witness] = detail::greedy_decycling(root);
    shared.best_value = offset + greedy_value;
    {
        std::vector<int> w = forced;
        w.insert(w.end(), greedy_witness.begin(), greedy_witness.end());
        shared.best_witness = w;
    }
    int root_lower = offset;
    if (root.alive_count > 0)
        root_lower += std::max(detail::rank_degree_bound(root), detail::greedy_cycle_packing(root));

    if (root.alive_count == 0) {
        shared.offer(offset, forced);
    } else if (threads <= 1) {
        detail::dfs(std::move(root), offset, std::move(forced), shared);
    } else {
        // Expand a frontier of subproblems, then drain it with a worker pool
        // sharing the atomic incumbent.  The value found is scheduling
        // independent; the witness is only reproducible single-threaded.
        std::vector<detail::SearchNode> frontier;
        frontier.push_back({std::move(root), offset, std::move(forced)});
        size_t target = static_cast<size_t>(threads) * 16;
        size_t cursor = 0;
        while (frontier.size() - cursor < target && cursor < frontier.size()) {
            detail::SearchNode node = std::move(frontier[cursor++]);
            if (!detail::reduce(node.graph, node.offset, node.forced)) continue;
            if (node.graph.alive_count == 0) {
                shared.offer(node.offset, node.forced);
                continue;
            }
            std::vector<int> cyc = detail::find_cycle(node.graph);
            std::vector<int> branchable;
            for (int v : cyc)
                if (!node.graph.excluded[v]) branchable.push_back(v);
            for (int v : branchable) {
                detail::SearchNode child{node.graph, node.offset + 1, node.forced};
                child.forced.push_back(child.graph.orig[v]);
                child.graph.remove_vertex(v);
                frontier.push_back(std::move(child));
                node.graph.excluded[v] = 1;
            }
        }
        std::atomic<size_t> next{cursor};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&]() {
                while (true) {
                    size_t i = next.fetch_add(1);
                    if (i >= frontier.size()) break;
                    detail::dfs(std::move(frontier[i].graph), frontier[i].offset,
                                std::move(frontier[i].forced), shared);
                }
            });
        }
        for (auto& worker : pool) worker.join();
    }

    DecyclingResult result;
    result.value = shared.best_value.load();
    result.witness = make_vertex_set(shared.best_witness);
    result.nodes_explored = shared.nodes.load();
    result.upper = result.value;
    if (shared.out_of_time.load()) {
        result.status = SolveStatus::bounded;
        result.lower = std::min(root_lower, result.value);
    } else {
        result.status = SolveStatus::optimal;
        result.lower = result.value;
    }
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

// Witness decycles the graph; an optimal claim is rechecked by enumeration
// when the graph is small enough, otherwise against the strongest bound.
inline bool verify_certificate(const Graph& g, const DecyclingResult& r, int recheck_cap = 26) {
    if (!is_decycling_set(g, r.witness)) return false;
    if (r.status == SolveStatus::optimal) {
        if (static_cast<int>(r.witness.size()) != r.value) return false;
        if (r.value == 0) return true;
        if (g.vertex_count() <= recheck_cap)
            return !detail::find_decycling_of_size(g, r.value - 1).has_value();
        detail::WorkGraph work(g);
        int lower = std::max(detail::rank_degree_bound(work), detail::greedy_cycle_packing(work));
        return r.value >= lower;
    }
    return r.value >= static_cast<int>(r.witness.size());
}

}  // namespace decycle

#include "hgpred/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace hgpred {

namespace {

constexpr std::int64_t kNoEdge = -1;

struct Solver {
    std::size_t n;
    std::vector<std::vector<std::size_t>> adj;        // neighbor lists, insertion order
    std::vector<std::vector<std::int64_t>> weight;    // dense pair weights
    std::vector<std::vector<char>> allowed;

    std::vector<std::size_t> mate;
    std::vector<int> label;                            // 0 free, 1 S, 2 T, 5 marked-S
    std::vector<std::size_t> label_from;               // labeledge source (kUnmatched = root)
    std::vector<char> has_label_edge;
    std::vector<std::size_t> best_u, best_v;           // bestedge per node
    std::vector<char> has_best;
    std::vector<std::int64_t> dual;
    std::vector<std::size_t> queue;

    explicit Solver(std::size_t num_nodes, const std::vector<WeightedEdge>& edges)
        : n(num_nodes), adj(n), weight(n, std::vector<std::int64_t>(n, kNoEdge)),
          allowed(n, std::vector<char>(n, 0)), mate(n, kUnmatched), label(n, 0),
          label_from(n, kUnmatched), has_label_edge(n, 0), best_u(n, 0), best_v(n, 0),
          has_best(n, 0), dual(n, 0) {
        std::int64_t maxweight = 0;
        for (const auto& e : edges) {
            if (e.u == e.v || e.u >= n || e.v >= n)
                throw std::invalid_argument("matching: bad edge");
            if (weight[e.u][e.v] == kNoEdge) {
                adj[e.u].push_back(e.v);
                adj[e.v].push_back(e.u);
            }
            weight[e.u][e.v] = weight[e.v][e.u] = e.weight;
            maxweight = std::max(maxweight, e.weight);
        }
        dual.assign(n, maxweight);
    }

    std::int64_t slack(std::size_t v, std::size_t w) const {
        return dual[v] + dual[w] - 2 * weight[v][w];
    }

    void assign_label(std::size_t w, int t, std::size_t v, bool has_src) {
        label[w] = t;
        label_from[w] = v;
        has_label_edge[w] = has_src;
        has_best[w] = 0;
        if (t == 1) {
            queue.push_back(w);
        } else {
            // Immediately extend through the matched edge.
            std::size_t m = mate[w];
            if (m == kUnmatched) throw std::logic_error("matching: T-label on a free vertex");
            assign_label(m, 1, w, true);
        }
    }

    // Common-S-ancestor test; in a bipartite graph two S-vertices joined by an
    // edge always lie in different trees, so this must come back false.
    bool same_tree(std::size_t v, std::size_t w) const {
        std::vector<char> seen(n, 0);
        for (std::size_t s = v;;) {
            seen[s] = 1;
            if (!has_label_edge[s]) break;
            s = label_from[label_from[s]];   // through the T vertex to the previous S
        }
        for (std::size_t s = w;;) {
            if (seen[s]) return true;
            if (!has_label_edge[s]) return false;
            s = label_from[label_from[s]];
        }
    }

    // Flip matched/unmatched along both alternating paths from the bridge (v, w).
    void augment(std::size_t v, std::size_t w) {
        for (auto [s, j] : {std::pair{v, w}, std::pair{w, v}}) {
            while (true) {
                mate[s] = j;
                if (!has_label_edge[s]) break;
                std::size_t t = label_from[s];
                j = t;
                s = label_from[t];
                mate[j] = s;
            }
        }
    }

    void run() {
        for (std::size_t stage = 0; stage < n; ++stage) {
            std::fill(label.begin(), label.end(), 0);
            std::fill(has_label_edge.begin(), has_label_edge.end(), 0);
            std::fill(has_best.begin(), has_best.end(), 0);
            for (auto& row : allowed) std::fill(row.begin(), row.end(), 0);
            queue.clear();
            for (std::size_t v = 0; v < n; ++v)
                if (mate[v] == kUnmatched && label[v] == 0) assign_label(v, 1, kUnmatched, false);

            bool augmented = false;
            while (true) {
                while (!queue.empty() && !augmented) {
                    std::size_t v = queue.back();
                    queue.pop_back();
                    for (std::size_t w : adj[v]) {
                        if (w == v) continue;
                        std::int64_t kslack = 0;
                        if (!allowed[v][w]) {
                            kslack = slack(v, w);
                            if (kslack <= 0) allowed[v][w] = allowed[w][v] = 1;
                        }
                        if (allowed[v][w]) {
                            if (label[w] == 0) {
                                assign_label(w, 2, v, true);
                            } else if (label[w] == 1) {
                                if (same_tree(v, w))
                                    throw std::logic_error("matching: odd cycle in bipartite graph");
                                augment(v, w);
                                augmented = true;
                                break;
                            }
                        } else if (label[w] == 1) {
                            if (!has_best[v] || kslack < slack(best_u[v], best_v[v])) {
                                best_u[v] = v;
                                best_v[v] = w;
                                has_best[v] = 1;
                            }
                        } else if (label[w] == 0) {
                            if (!has_best[w] || kslack < slack(v, w)) {
                                best_u[w] = v;
                                best_v[w] = w;
                                has_best[w] = 1;
                            }
                        }
                    }
                }
                if (augmented) break;

                // Dual adjustment: delta 1 = free duals, 2 = tree-to-free edge,
                // 3 = tree-to-tree edge (half slack).
                int deltatype = 1;
                std::int64_t delta =
                    std::max<std::int64_t>(0, *std::min_element(dual.begin(), dual.end()));
                std::size_t edge_v = 0, edge_w = 0;
                for (std::size_t v = 0; v < n; ++v) {
                    if (label[v] == 0 && has_best[v]) {
                        std::int64_t d = slack(best_u[v], best_v[v]);
                        if (d < delta) {
                            delta = d;
                            deltatype = 2;
                            edge_v = best_u[v];
                            edge_w = best_v[v];
                        }
                    }
                }
                for (std::size_t v = 0; v < n; ++v) {
                    if (label[v] == 1 && has_best[v]) {
                        std::int64_t kslack = slack(best_u[v], best_v[v]);
                        if (kslack % 2 != 0)
                            throw std::logic_error("matching: odd tree-tree slack");
                        std::int64_t d = kslack / 2;
                        if (d < delta) {
                            delta = d;
                            deltatype = 3;
                            edge_v = best_u[v];
                            edge_w = best_v[v];
                        }
                    }
                }
                for (std::size_t v = 0; v < n; ++v) {
                    if (label[v] == 1) dual[v] -= delta;
                    else if (label[v] == 2) dual[v] += delta;
                }
                if (deltatype == 1) break;
                allowed[edge_v][edge_w] = allowed[edge_w][edge_v] = 1;
                queue.push_back(edge_v);
            }
            if (!augmented) break;
        }
    }
};

}  // namespace

std::vector<std::size_t> max_weight_matching_bipartite(std::size_t num_nodes,
                                                       const std::vector<WeightedEdge>& edges) {
    Solver solver(num_nodes, edges);
    solver.run();
    return solver.mate;
}

}  // namespace hgpred

#include "hgpred/graphs.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace hgpred {

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_) throw std::invalid_argument("add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("add_edge: loops not allowed");
    if (has_edge(u, v)) return;
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
}

bool SimpleGraph::has_edge(std::size_t u, std::size_t v) const {
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    std::size_t other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::find(a.begin(), a.end(), other) != a.end();
}

bool SimpleGraph::is_connected() const {
    if (n_ == 0) return true;
    std::vector<bool> seen(n_, false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t count = 1;
    while (!q.empty()) {
        std::size_t v = q.front();
        q.pop();
        for (std::size_t u : adj_[v]) {
            if (!seen[u]) {
                seen[u] = true;
                ++count;
                q.push(u);
            }
        }
    }
    return count == n_;
}

bool SimpleGraph::is_regular() const {
    if (n_ == 0) return true;
    std::size_t d = degree(0);
    for (std::size_t v = 1; v < n_; ++v)
        if (degree(v) != d) return false;
    return true;
}

std::vector<std::size_t> SimpleGraph::degrees() const {
    std::vector<std::size_t> out(n_);
    for (std::size_t v = 0; v < n_; ++v) out[v] = degree(v);
    return out;
}

std::size_t SimpleGraph::girth() const {
    // BFS from each vertex; a cross or back edge closes a shortest cycle through the root.
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t root = 0; root < n_; ++root) {
        std::vector<std::size_t> dist(n_, std::numeric_limits<std::size_t>::max());
        std::vector<std::size_t> parent(n_, n_);
        std::queue<std::size_t> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop();
            for (std::size_t u : adj_[v]) {
                if (dist[u] == std::numeric_limits<std::size_t>::max()) {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    q.push(u);
                } else if (u != parent[v]) {
                    best = std::min(best, dist[v] + dist[u] + 1);
                }
            }
        }
    }
    return best == std::numeric_limits<std::size_t>::max() ? 0 : best;
}

SimpleGraph complete_graph(std::size_t n) {
    SimpleGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

SimpleGraph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    SimpleGraph g(n);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

SimpleGraph complete_bipartite_graph(std::size_t a, std::size_t b) {
    SimpleGraph g(a + b);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

SimpleGraph lcf_graph(std::size_t n, const std::vector<int>& pattern) {
    if (pattern.empty() || n % pattern.size() != 0)
        throw std::invalid_argument("lcf_graph: pattern length must divide n");
    SimpleGraph g(n);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    for (std::size_t i = 0; i < n; ++i) {
        long long target = static_cast<long long>(i) + pattern[i % pattern.size()];
        target %= static_cast<long long>(n);
        if (target < 0) target += n;
        g.add_edge(i, static_cast<std::size_t>(target));
    }
    return g;
}

SimpleGraph heawood_graph() { return lcf_graph(14, {5, -5}); }

SimpleGraph tutte_coxeter_graph() { return lcf_graph(30, {-13, -9, 7, -7, 9, 13}); }

SimpleGraph bipartite_double_cover(const SimpleGraph& g) {
    std::size_t n = g.num_vertices();
    SimpleGraph out(2 * n);
    for (const auto& [u, v] : g.edges()) {
        out.add_edge(u, n + v);
        out.add_edge(v, n + u);
    }
    return out;
}

}  // namespace hgpred

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace hgpred {

/// Simple undirected graph: no loops, no multi-edges.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t num_vertices) : n_(num_vertices), adj_(num_vertices) {}

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }
    std::size_t degree(std::size_t v) const { return adj_[v].size(); }

    void add_edge(std::size_t u, std::size_t v);
    bool has_edge(std::size_t u, std::size_t v) const;

    bool is_connected() const;
    bool is_regular() const;
    std::vector<std::size_t> degrees() const;
    /// Length of a shortest cycle; 0 if the graph is acyclic.
    std::size_t girth() const;

private:
    std::size_t n_ = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> adj_;
};

SimpleGraph complete_graph(std::size_t n);
SimpleGraph cycle_graph(std::size_t n);
/// Parts {0..a-1} and {a..a+b-1}, fully connected across.
SimpleGraph complete_bipartite_graph(std::size_t a, std::size_t b);
/// Hamiltonian cycle on n vertices plus chords i -> i + pattern[i mod |pattern|] (mod n).
SimpleGraph lcf_graph(std::size_t n, const std::vector<int>& pattern);
SimpleGraph heawood_graph();        // [5,-5]^7
SimpleGraph tutte_coxeter_graph();  // [-13,-9,7,-7,9,13]^5

/// 2|V| vertices; edge (u,v) lifts to (u_A, v_B) and (u_B, v_A).
SimpleGraph bipartite_double_cover(const SimpleGraph& g);

}  // namespace hgpred

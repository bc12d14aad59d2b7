#pragma once

#include <cstdint>
#include <vector>

#include "hgpred/classical_code.hpp"
#include "hgpred/graphs.hpp"
#include "hgpred/hgp.hpp"

namespace hgpred {

/// Vertex coloring of a check-adjacency graph: same-colored checks never share a bit.
struct CheckColoring {
    std::vector<std::size_t> color_of;   // per check
    std::size_t num_colors = 0;

    std::vector<std::vector<std::size_t>> groups() const;
    std::vector<std::size_t> class_sizes() const;
};

/// Vertex per check; edge between two checks iff their supports intersect.
SimpleGraph check_adjacency_graph(const ClassicalCode& code);

/// Repeated extraction of maximal independent sets, largest-degree-first with
/// index tie-break; a nonzero seed shuffles the tie-break order.
CheckColoring greedy_color(const SimpleGraph& g, std::uint64_t order_seed = 0);

bool is_valid_coloring(const SimpleGraph& g, const CheckColoring& coloring);

/// Product coloring of the check-type qubits: group (i, j) holds the grid
/// qubits whose two check coordinates carry colors i and j.
struct ProductColoring {
    std::size_t chi1 = 0, chi2 = 0;
    QubitLayout layout;
    std::vector<std::vector<std::size_t>> groups;   // chi1*chi2 lists of grid qubit ids

    std::size_t group_index(std::size_t i, std::size_t j) const { return i * chi2 + j; }
    const std::vector<std::size_t>& group(std::size_t i, std::size_t j) const {
        return groups[group_index(i, j)];
    }
    std::size_t group_size(std::size_t i, std::size_t j) const { return group(i, j).size(); }
    std::size_t total_qubits() const;
};

ProductColoring product_coloring(const CheckColoring& col1, const CheckColoring& col2,
                                 const QubitLayout& layout);

/// Checks that no two same-group check-type qubits share an X- or Z-check of the
/// product code; equivalent to both input colorings being valid.
bool verify_product_coloring(const ProductColoring& pc, const ClassicalCode& c1,
                             const ClassicalCode& c2);

/// Lift a proto-matrix check coloring to the full type-I QC code: each proto
/// check's copies inherit its color. Validated against the lifted code.
CheckColoring lifted_coloring(const CheckColoring& proto_coloring, std::size_t lift,
                              const ClassicalCode& lifted);

}  // namespace hgpred

#pragma once

#include <cstdint>
#include <vector>

namespace hgpred {

struct WeightedEdge {
    std::size_t u = 0, v = 0;
    std::int64_t weight = 0;
};

inline constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

/// Maximum-weight matching via the primal-dual alternating-tree algorithm
/// (Galil's formulation), specialized to graphs without odd cycles; throws if
/// a blossom would form. Deterministic: vertices are seeded in index order,
/// neighbors scanned in edge-insertion order, and the growth queue is LIFO.
std::vector<std::size_t> max_weight_matching_bipartite(std::size_t num_nodes,
                                                       const std::vector<WeightedEdge>& edges);

}  // namespace hgpred

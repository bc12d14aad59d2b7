#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hgpred/coloring.hpp"

namespace hgpred {

/// Which product-color groups get X-combined vs Z-combined. At most one
/// x_group per row index, one z_group per column index, and the two sets are
/// disjoint.
struct CombinationSchedule {
    std::vector<std::pair<std::size_t, std::size_t>> x_groups;   // (i, j), sorted
    std::vector<std::pair<std::size_t, std::size_t>> z_groups;

    bool feasible(std::size_t chi1, std::size_t chi2) const;
};

/// Bipartite matching instance: left nodes X_1..X_chi1 then Z_1..Z_chi2,
/// right nodes the chi1*chi2 color groups, edge weights = group sizes.
struct MatchingGraph {
    std::size_t chi1 = 0, chi2 = 0;
    struct Edge {
        std::size_t left;     // [0, chi1) = X_i rows; [chi1, chi1+chi2) = Z_j columns
        std::size_t right;    // i*chi2 + j
        std::int64_t weight;
    };
    std::vector<Edge> edges;

    std::size_t num_left() const { return chi1 + chi2; }
    std::size_t num_right() const { return chi1 * chi2; }
};

MatchingGraph build_matching_graph(const ProductColoring& pc);

struct Matching {
    std::vector<std::pair<std::size_t, std::size_t>> edges;   // (left, right)
    std::int64_t weight = 0;
};

/// Maximum-weight bipartite matching (Hungarian on the square-padded weight
/// matrix), refined to the lexicographically-first optimal edge set.
Matching max_weight_matching(const MatchingGraph& g);

/// Maximum-weight matching with some (left, right) pairs forced; used by the
/// lexicographic refinement and by brute-force cross-checks.
std::int64_t max_matching_weight(const MatchingGraph& g,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& forced = {});

CombinationSchedule choose_schedule(const ProductColoring& pc);

std::size_t removed_count(const ProductColoring& pc, const CombinationSchedule& schedule);

/// Fold-symmetric variant for symmetric products (same coloring on both axes):
/// no diagonal group is used and X on (i,j) pairs with Z on (j,i). Optimal
/// among fold-symmetric schedules via matching over mirror pairs.
CombinationSchedule fold_symmetric_schedule(const ProductColoring& pc);

struct ReductionPlan;   // reducer.hpp

/// Permutations given as images: perm[i] = image of i.
using Permutation = std::vector<std::size_t>;

/// True iff the classical Tanner automorphisms (tau_i H_i = H_i sigma_i)
/// push through the reduction: the removed set is orbit-invariant and the
/// induced permutations on reduced checks/qubits satisfy the intertwining
/// relations exactly.
bool verify_equivariance(const ClassicalCode& c1, const ClassicalCode& c2,
                         const ReductionPlan& plan, const Permutation& sigma1,
                         const Permutation& tau1, const Permutation& sigma2,
                         const Permutation& tau2);

}  // namespace hgpred

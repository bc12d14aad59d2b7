#pragma once

#include <cstdint>
#include <vector>

#include "hgpred/coloring.hpp"
#include "hgpred/hgp.hpp"
#include "hgpred/planner.hpp"

namespace hgpred {

/// (Delta-1) x Delta parity-check matrix of the length-Delta repetition code;
/// Delta = 1 gives the 0 x 1 matrix (the last check is simply dropped).
BitMatrix local_repetition_transform(std::size_t delta);

/// One stabilizer-combination star: the checks adjacent to one removed
/// check-type qubit, ordered by ascending check index.
struct CombinationStar {
    std::size_t qubit = 0;                 // grid id of the removed check-type qubit
    std::vector<std::size_t> checks;       // original check indices, ascending
};

/// The assembled (W_X, W_Z, V) triple plus the bookkeeping needed by the
/// syndrome scheduler and the chain-map builders.
struct ReductionPlan {
    BitMatrix wx;                          // m~_X x m_X
    BitMatrix wz;                          // m~_Z x m_Z
    BitMatrix v;                           // n x n~, distinct unit columns on kept qubits
    std::vector<std::size_t> removed;      // grid qubit ids, sorted
    std::vector<std::size_t> kept;         // grid qubit ids, sorted
    CombinationSchedule schedule;
    QubitLayout layout;

    std::vector<CombinationStar> x_stars;
    std::vector<CombinationStar> z_stars;
    // Row r of wx combines old checks new_x_rows[r] (size 1 = passthrough, 2 = pair).
    std::vector<std::vector<std::size_t>> new_x_rows;
    std::vector<std::vector<std::size_t>> new_z_rows;

    std::uint64_t fingerprint() const;
};

/// Assemble the reduction triple for a feasible schedule. Throws if scheduled
/// stars overlap (which would signal an invalid coloring).
ReductionPlan build_reduction(const CssCode& code, const ProductColoring& pc,
                              const CombinationSchedule& schedule);

/// h~x = wx hx v, h~z = wz hz v, layout restricted to kept qubits; canonical
/// logicals (if present) are restricted alongside.
CssCode apply_reduction(const CssCode& code, const ReductionPlan& plan);

struct WeightReport {
    std::size_t wq_before = 0, wc_before = 0;
    std::size_t wq_after = 0, wc_after = 0;
    std::size_t n2q_before = 0, n2q_after = 0;
};

/// Degree maxima and two-qubit gate counts; throws if the doubling bounds
/// (wq <= 2 wq, wc <= 2(wc - 1)) are violated.
WeightReport weight_report(const CssCode& before, const CssCode& after);

/// Net two-qubit gate savings Delta (4 - Delta) (2v - 1)^2 for the cycle code
/// of a biregular bipartite graph with side size v and degree Delta.
std::int64_t cycle_savings_formula(std::int64_t v, std::int64_t delta);

}  // namespace hgpred

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hgpred/reducer.hpp"
#include "hgpred/verifier.hpp"

namespace hgpred {

/// CNOT rounds for single-ancilla syndrome extraction. Within a round no
/// check or qubit appears twice; the union over rounds is the exact support
/// of the corresponding parity-check matrix.
struct CnotSchedule {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> x_rounds;   // (check, qubit)
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> z_rounds;

    /// Coupling order of one check, flattened across rounds.
    std::vector<std::size_t> coupling_order(Pauli basis, std::size_t check) const;
};

bool schedule_valid(const CssCode& code, const CnotSchedule& schedule);

/// Independent edge colorings of the X and Z Tanner graphs (exact max-degree
/// palette via alternating-path recoloring); the seed shuffles edge order.
CnotSchedule random_schedule(const CssCode& code, std::uint64_t seed);

/// Three-phase X schedule for a reduced code: first one bit-type column of
/// every combined check together with all uncombined-check couplings, then the
/// check-type leftovers, then the second column.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> split_x_schedule(
    const CssCode& reduced, const ReductionPlan& plan);

/// Row-based mirror of split_x_schedule for the Z basis.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> split_z_schedule(
    const CssCode& reduced, const ReductionPlan& plan);

CnotSchedule split_schedule(const CssCode& reduced, const ReductionPlan& plan);

/// Residual data error from a single ancilla fault at cut position t: the
/// suffix of the coupling order after t.
struct HookFault {
    std::size_t check = 0;
    std::size_t cut = 0;
    BitVector residual;
};

std::vector<HookFault> enumerate_hooks(const CssCode& code, const CnotSchedule& schedule,
                                       Pauli basis);

/// Greedy stabilizer reduction of a residual, descending on
/// (bit-type line count, weight); lines are columns for X, rows for Z.
BitVector reduce_residual(const CssCode& code, const BitVector& residual, Pauli basis);

std::size_t bit_line_count(const CssCode& code, const BitVector& v, Pauli basis);

/// Exact decision "is some stabilizer-equivalent representative supported on
/// at most one bit-type line": one rowspace query per candidate line.
class BitLineOracle {
public:
    BitLineOracle(const CssCode& code, Pauli basis);
    bool at_most_one_line(const BitVector& residual) const;

private:
    const CssCode& code_;
    Pauli basis_;
    std::size_t num_lines_;
    std::vector<RowSpace> line_spaces_;    // rowspace of (H|_B stacked with one line's units)
    std::vector<std::size_t> bit_cols_;    // local indices of bit-type qubits
};

struct ProbeResult {
    bool violation_found = false;
    std::size_t weight = 0;                       // number of faults in the violation
    std::vector<std::size_t> fault_ids;           // indices into the candidate list
};

/// Searches combinations of at most cap single faults (ancilla hooks and data
/// errors of the given basis) whose combined residual is a nontrivial logical.
ProbeResult effective_distance_probe(const CssCode& code, const CnotSchedule& schedule,
                                     std::size_t cap, Pauli basis);

}  // namespace hgpred

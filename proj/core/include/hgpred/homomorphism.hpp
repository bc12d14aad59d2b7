#pragma once

#include <optional>
#include <vector>

#include "hgpred/classical_code.hpp"
#include "hgpred/hgp.hpp"
#include "hgpred/reducer.hpp"

namespace hgpred {

/// Triple of maps between two CSS 3-term complexes (source -> target):
/// gamma_q H_X(src)^T = H_X(tgt)^T gamma_x and gamma_z H_Z(src) = H_Z(tgt) gamma_q.
struct ChainMap {
    BitMatrix gamma_x;   // S_X(src) -> S_X(tgt)
    BitMatrix gamma_q;   // Q(src)   -> Q(tgt)
    BitMatrix gamma_z;   // S_Z(src) -> S_Z(tgt)
};

bool verify_chain_map(const ChainMap& map, const CssCode& source, const CssCode& target);

/// Add parity checks supported only on informational bits; k drops by the rank
/// of the new rows.
ClassicalCode augment(const ClassicalCode& code, const BitMatrix& new_checks);

/// Delete informational bits; the parity-check rank is unchanged.
ClassicalCode puncture(const ClassicalCode& code, const std::vector<std::size_t>& bits);

/// Everything the homomorphism builders need about one modified pair: the
/// reduced base code, the reduced modified code, and their plans (built from
/// the same colorings and schedule).
/// Both builders orient the map from the modified code into the base code
/// (Q~' -> Q~): inclusion-style maps make every square commute exactly in
/// that direction, for augmentation and puncturing alike.
struct ReducedPair {
    CssCode base;            // reduced Q~
    ReductionPlan base_plan;
    CssCode modified;        // reduced Q~' (augmented or punctured input)
    ReductionPlan modified_plan;
    ChainMap map;
};

/// Augment the second input code by new_checks (supported on its informational
/// bits), reduce both products with the same coloring/schedule, and build the
/// commuting chain map from the augmented reduced code to the base reduced code.
/// A schedule override replaces the matcher's choice (an empty schedule leaves
/// both codes unreduced).
ReducedPair build_aug_chain_map(const ClassicalCode& c1, const ClassicalCode& c2,
                                const BitMatrix& new_checks,
                                std::optional<CombinationSchedule> schedule = std::nullopt);

/// Puncture informational bits of the second input code, reduce both products
/// with the same coloring (stars shortened per removed X-check), and build the
/// commuting chain map from the punctured reduced code into the base one.
ReducedPair build_punc_chain_map(const ClassicalCode& c1, const ClassicalCode& c2,
                                 const std::vector<std::size_t>& bits,
                                 std::optional<CombinationSchedule> schedule = std::nullopt);

}  // namespace hgpred

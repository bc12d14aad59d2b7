#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgpred/hgp.hpp"
#include "hgpred/reducer.hpp"

namespace hgpred {

struct CssReport {
    bool ok = true;
    std::vector<std::pair<std::size_t, std::size_t>> violations;   // (x_row, z_row)
};

CssReport verify_css(const CssCode& code);

struct DimensionReport {
    bool ok = false;
    std::size_t k_before = 0, k_after = 0;
};

DimensionReport verify_k(const CssCode& before, const CssCode& after);

struct BasisReport {
    bool kernel_ok = false;       // logical_x rows in ker hz, logical_z rows in ker hx
    bool nonstabilizer_ok = false;  // no row falls into the opposite stabilizer rowspace
    bool pairing_ok = false;      // logical_x * logical_z^T = I_k
    bool ok() const { return kernel_ok && nonstabilizer_ok && pairing_ok; }
};

BasisReport verify_logical_basis(const CssCode& code);

enum class Pauli { X, Z };

enum class DistanceVerdict {
    ConfirmedMin,        // no logical below d_claim and a weight-d_claim representative exists
    NoLogicalBelowCap,   // search clean up to the cap, upper bound not matched at d_claim
    Counterexample       // a nontrivial logical lighter than d_claim was found
};

struct DistanceReport {
    DistanceVerdict verdict = DistanceVerdict::NoLogicalBelowCap;
    std::size_t searched_cap = 0;
    std::size_t upper_bound = 0;            // lightest canonical-basis row
    std::optional<BitVector> counterexample;
};

/// Exhaustive search over supports of weight <= cap for a vector in
/// ker(H_other) minus rowspace(H_same); side X searches X-type logicals.
DistanceReport certify_distance(const CssCode& code, std::size_t d_claim, std::size_t cap,
                                Pauli side);

/// True iff mapping every X-check support through the mirror permutation of
/// grid positions yields exactly the set of Z-check supports.
bool verify_zx_fold(const CssCode& code, const std::vector<std::size_t>& grid_mirror);

/// Diagonal mirror (i,j) <-> (j,i) on both sectors; needs n1 = n2.
std::vector<std::size_t> diagonal_mirror(const QubitLayout& layout);

struct SectorBoundReport {
    bool ok = true;
    std::size_t checked = 0;
    std::size_t min_x_cols = 0;   // over logical_x rows and their deformations
    std::size_t min_z_rows = 0;
};

/// Prop-1 style bound: every logical_x row (plus seeded stabilizer
/// deformations) touches >= d2 bit-type columns; dually >= d1 rows for Z.
SectorBoundReport verify_sector_bounds(const CssCode& code, std::size_t d1, std::size_t d2,
                                       std::size_t deformations_per_row, std::uint64_t seed);

}  // namespace hgpred

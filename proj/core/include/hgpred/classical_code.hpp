#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgpred/bit_matrix.hpp"
#include "hgpred/graphs.hpp"

namespace hgpred {

/// Classical linear code presented by a parity-check matrix.
class ClassicalCode {
public:
    ClassicalCode() = default;
    explicit ClassicalCode(BitMatrix h, std::string name = "");

    const BitMatrix& h() const { return h_; }
    const std::string& name() const { return name_; }

    std::size_t n() const { return h_.cols(); }
    std::size_t num_checks() const { return h_.rows(); }
    std::size_t rank() const;
    std::size_t k() const { return n() - rank(); }
    bool full_rank() const { return rank() == num_checks(); }

    std::optional<std::size_t> distance;   // cached when known

private:
    BitMatrix h_;
    std::string name_;
    mutable std::optional<std::size_t> rank_;
};

/// Tanner graph view: check c is adjacent to the bits in row c of h.
struct TannerGraph {
    std::size_t num_bits = 0;
    std::size_t num_checks = 0;
    std::vector<std::vector<std::size_t>> check_support;   // per check, ascending bit list

    explicit TannerGraph(const BitMatrix& h);
};

struct DistanceResult {
    bool exact = false;          // true: value is the minimum distance
    std::size_t value = 0;       // exact distance, or cap+1 lower bound when !exact
};

/// Exact minimum codeword weight when k <= enumeration_limit (message enumeration
/// through a generator); otherwise a weight-capped support search certifying
/// d >= cap+1 or returning an exact value found at or below the cap.
DistanceResult min_distance(const ClassicalCode& code,
                            std::optional<std::size_t> weight_cap = std::nullopt,
                            std::size_t enumeration_limit = 24);

struct CanonicalGenerator {
    BitMatrix g;                              // k x n, h g^T = 0
    std::vector<std::size_t> info_cols;       // ascending; row j of g hits exactly info_cols[j]
    std::vector<std::size_t> pivot_cols;
    /// info_cols followed by pivot_cols: permuting columns this way puts g in (I_k | A^T) form.
    std::vector<std::size_t> info_first_permutation() const;
};

CanonicalGenerator canonical_generator(const ClassicalCode& code);

/// Configuration-model (d_v, d_c)-regular LDPC code. Multi-edge pairings are
/// rejected and resampled wholesale; deterministic given the seed.
ClassicalCode random_ldpc(std::size_t n, std::size_t d_v, std::size_t d_c, std::uint64_t seed);

/// Type-I quasi-cyclic lift: each nonzero proto cell carries one circulant power.
/// exponents maps (row, col) -> power in [0, lift).
ClassicalCode qc_lift(const BitMatrix& proto,
                      const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& exponents,
                      std::size_t lift);

/// Cycle code of a connected graph: bits on edges (lexicographic order), a parity
/// check per vertex, with drop_vertex's row removed (default: last vertex).
ClassicalCode cycle_code(const SimpleGraph& g,
                         std::optional<std::size_t> drop_vertex = std::nullopt);

/// (max column weight, max row weight) of the parity-check matrix.
std::pair<std::size_t, std::size_t> check_degrees(const ClassicalCode& code);

}  // namespace hgpred

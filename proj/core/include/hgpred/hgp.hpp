#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgpred/bit_matrix.hpp"
#include "hgpred/classical_code.hpp"

namespace hgpred {

/// 2D grid addressing for hypergraph-product qubits. Bit-type qubits come
/// first: (i, j) -> i*n2 + j; check-type (a, b) -> n1*n2 + a*m2 + b.
struct QubitLayout {
    std::size_t n1 = 0, n2 = 0, m1 = 0, m2 = 0;

    std::size_t num_qubits() const { return n1 * n2 + m1 * m2; }
    std::size_t num_bit_type() const { return n1 * n2; }
    bool is_bit_type(std::size_t grid) const { return grid < n1 * n2; }
    std::size_t bit_index(std::size_t i, std::size_t j) const { return i * n2 + j; }
    std::size_t check_index(std::size_t a, std::size_t b) const { return n1 * n2 + a * m2 + b; }
    std::size_t grid_row(std::size_t grid) const {
        return is_bit_type(grid) ? grid / n2 : (grid - n1 * n2) / m2;
    }
    std::size_t grid_col(std::size_t grid) const {
        return is_bit_type(grid) ? grid % n2 : (grid - n1 * n2) % m2;
    }
    std::size_t num_x_checks() const { return m1 * n2; }
    std::size_t num_z_checks() const { return n1 * m2; }
    // X-check (a in [m1], j in [n2]) -> a*n2 + j; Z-check (i in [n1], b in [m2]) -> i*m2 + b.
    std::size_t x_check_index(std::size_t a, std::size_t j) const { return a * n2 + j; }
    std::size_t z_check_index(std::size_t i, std::size_t b) const { return i * m2 + b; }
};

/// CSS code with hypergraph-product grid metadata. For reduced codes,
/// qubit_grid maps local qubit indices to surviving grid positions.
struct CssCode {
    BitMatrix hx;
    BitMatrix hz;
    QubitLayout layout;
    std::vector<std::size_t> qubit_grid;     // local qubit -> grid id
    std::optional<BitMatrix> logical_x;      // canonical bit-type basis rows
    std::optional<BitMatrix> logical_z;
    std::optional<std::size_t> dx, dz;       // carried distances
    std::string name;

    std::size_t n() const { return hx.cols(); }
    std::size_t k_from_rank() const { return n() - rank(hx) - rank(hz); }
    bool is_bit_type(std::size_t q) const { return layout.is_bit_type(qubit_grid[q]); }
};

/// hx = (H1 x I_n2 | I_m1 x H2^T), hz = (I_n1 x H2 | H1^T x I_m2).
CssCode build_hgp(const ClassicalCode& c1, const ClassicalCode& c2);

/// k1 k2 + k1^T k2^T; throws if it disagrees with the rank formula on the built code.
std::size_t hgp_k(const ClassicalCode& c1, const ClassicalCode& c2);

/// (d_X, d_Z) carried per the product rule, given known classical distances.
/// Full-rank inputs make the transpose distances vacuous.
std::pair<std::size_t, std::size_t> hgp_distances(const ClassicalCode& c1, const ClassicalCode& c2);

/// Canonical bit-type logical basis G_X = (E1 x G2 | 0), G_Z = (G1 x E2 | 0);
/// stores the pair into code and returns it. Requires full-rank inputs.
std::pair<BitMatrix, BitMatrix> canonical_logicals(CssCode& code, const ClassicalCode& c1,
                                                   const ClassicalCode& c2);

/// Total two-qubit gate count for one full round of syndrome extraction.
std::size_t count_two_qubit_gates(const CssCode& code);

struct SectorWeights {
    std::size_t rows_bit = 0, cols_bit = 0;
    std::size_t rows_check = 0, cols_check = 0;
};

/// Distinct grid rows/columns intersected by a Pauli support, per sector.
SectorWeights sector_weights(const CssCode& code, const BitVector& support);

/// (w_q, w_c): max qubit degree and max check weight over both bases.
std::pair<std::size_t, std::size_t> css_weights(const CssCode& code);

}  // namespace hgpred

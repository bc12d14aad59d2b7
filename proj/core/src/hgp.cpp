#include "hgpred/hgp.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace hgpred {

CssCode build_hgp(const ClassicalCode& c1, const ClassicalCode& c2) {
    const BitMatrix& h1 = c1.h();
    const BitMatrix& h2 = c2.h();
    std::size_t n1 = h1.cols(), m1 = h1.rows();
    std::size_t n2 = h2.cols(), m2 = h2.rows();

    CssCode code;
    code.layout = {n1, n2, m1, m2};
    code.hx = hstack(kron(h1, BitMatrix::identity(n2)), kron(BitMatrix::identity(m1), transpose(h2)));
    code.hz = hstack(kron(BitMatrix::identity(n1), h2), kron(transpose(h1), BitMatrix::identity(m2)));
    code.qubit_grid.resize(code.layout.num_qubits());
    std::iota(code.qubit_grid.begin(), code.qubit_grid.end(), std::size_t{0});
    code.name = "hgp(" + c1.name() + "," + c2.name() + ")";

    if (!matmul(code.hx, transpose(code.hz)).is_zero())
        throw std::logic_error("build_hgp: CSS condition violated");
    return code;
}

std::size_t hgp_k(const ClassicalCode& c1, const ClassicalCode& c2) {
    std::size_t k1 = c1.k(), k2 = c2.k();
    std::size_t k1t = c1.num_checks() - c1.rank();
    std::size_t k2t = c2.num_checks() - c2.rank();
    std::size_t k = k1 * k2 + k1t * k2t;

    CssCode code = build_hgp(c1, c2);
    if (k != code.k_from_rank())
        throw std::logic_error("hgp_k: product formula disagrees with the rank formula");
    return k;
}

std::pair<std::size_t, std::size_t> hgp_distances(const ClassicalCode& c1, const ClassicalCode& c2) {
    if (!c1.distance || !c2.distance)
        throw std::invalid_argument("hgp_distances: classical distances must be known");
    std::size_t d1 = *c1.distance, d2 = *c2.distance;
    // Transpose-code distances: undefined (infinite) for full-rank inputs.
    auto transpose_distance = [](const ClassicalCode& c) -> std::optional<std::size_t> {
        if (c.full_rank()) return std::nullopt;
        ClassicalCode t(transpose(c.h()));
        return min_distance(t).value;
    };
    std::optional<std::size_t> d1t = transpose_distance(c1);
    std::optional<std::size_t> d2t = transpose_distance(c2);

    std::size_t dx = d1t ? std::min(*d1t, d2) : d2;
    std::size_t dz = d2t ? std::min(d1, *d2t) : d1;
    return {dx, dz};
}

std::pair<BitMatrix, BitMatrix> canonical_logicals(CssCode& code, const ClassicalCode& c1,
                                                   const ClassicalCode& c2) {
    if (!c1.full_rank() || !c2.full_rank())
        throw std::invalid_argument(
            "canonical_logicals: inputs must be full rank (check-type logicals unsupported)");

    CanonicalGenerator g1 = canonical_generator(c1);
    CanonicalGenerator g2 = canonical_generator(c2);

    auto unit_rows = [](const CanonicalGenerator& g, std::size_t n) {
        BitMatrix e(g.info_cols.size(), n);
        for (std::size_t j = 0; j < g.info_cols.size(); ++j) e.set(j, g.info_cols[j], true);
        return e;
    };
    BitMatrix e1 = unit_rows(g1, c1.n());
    BitMatrix e2 = unit_rows(g2, c2.n());

    std::size_t k = g1.info_cols.size() * g2.info_cols.size();
    std::size_t mm = code.layout.m1 * code.layout.m2;
    BitMatrix gx = hstack(kron(e1, g2.g), BitMatrix::zeros(k, mm));
    BitMatrix gz = hstack(kron(g1.g, e2), BitMatrix::zeros(k, mm));

    if (!(matmul(gx, transpose(gz)) == BitMatrix::identity(k)))
        throw std::logic_error("canonical_logicals: pairing is not the identity");

    code.logical_x = gx;
    code.logical_z = gz;
    return {gx, gz};
}

std::size_t count_two_qubit_gates(const CssCode& code) {
    return code.hx.count_ones() + code.hz.count_ones();
}

SectorWeights sector_weights(const CssCode& code, const BitVector& support) {
    if (support.size() != code.n())
        throw std::invalid_argument("sector_weights: support length mismatch");
    std::set<std::size_t> rb, cb, rc, cc;
    for (std::size_t q : support.support()) {
        std::size_t grid = code.qubit_grid[q];
        if (code.layout.is_bit_type(grid)) {
            rb.insert(code.layout.grid_row(grid));
            cb.insert(code.layout.grid_col(grid));
        } else {
            rc.insert(code.layout.grid_row(grid));
            cc.insert(code.layout.grid_col(grid));
        }
    }
    return {rb.size(), cb.size(), rc.size(), cc.size()};
}

std::pair<std::size_t, std::size_t> css_weights(const CssCode& code) {
    std::size_t wq = std::max(code.hx.max_col_weight(), code.hz.max_col_weight());
    std::size_t wc = std::max(code.hx.max_row_weight(), code.hz.max_row_weight());
    return {wq, wc};
}

}  // namespace hgpred

#include <doctest.h>

#include <map>
#include <stdexcept>

#include "hgpred/hgp.hpp"
#include "hgpred/graphs.hpp"

using namespace hgpred;

namespace {

ClassicalCode k33_code() { return cycle_code(complete_bipartite_graph(3, 3)); }

ClassicalCode qc_20_5_9() {
    static const std::map<std::pair<std::size_t, std::size_t>, std::size_t> exps = {
        {{0, 0}, 4}, {{0, 2}, 4}, {{0, 3}, 3},
        {{1, 1}, 3}, {{1, 2}, 3}, {{1, 3}, 4},
        {{2, 0}, 3}, {{2, 1}, 4}, {{2, 3}, 3}};
    return qc_lift(BitMatrix::parse("1011;0111;1101"), exps, 5);
}

}  // namespace

TEST_CASE("hgp of [3,1,2] x [3,1,3] gives the 13-qubit code with one logical") {
    ClassicalCode c1(BitMatrix::parse("111;001"), "c1");
    ClassicalCode c2(BitMatrix::parse("110;011"), "c2");
    c1.distance = min_distance(c1).value;
    c2.distance = min_distance(c2).value;
    CHECK(*c1.distance == 2);
    CHECK(*c2.distance == 3);

    CssCode code = build_hgp(c1, c2);
    CHECK(code.n() == 13);
    CHECK(code.layout.num_bit_type() == 9);
    CHECK(hgp_k(c1, c2) == 1);
    CHECK(code.k_from_rank() == 1);
    CHECK(hgp_distances(c1, c2) == std::pair<std::size_t, std::size_t>{3, 2});

    auto [gx, gz] = canonical_logicals(code, c1, c2);
    REQUIRE(gx.rows() == 1);
    CHECK(gx.row(0).weight() == 3);
    CHECK(gz.row(0).weight() == 2);
    // Logical X lives on one bit-type grid row, logical Z on one column.
    SectorWeights wx = sector_weights(code, gx.row(0));
    CHECK(wx.rows_bit == 1);
    CHECK(wx.cols_bit == 3);
    CHECK(wx.rows_check == 0);
    SectorWeights wz = sector_weights(code, gz.row(0));
    CHECK(wz.cols_bit == 1);
    CHECK(wz.rows_bit == 2);
}

TEST_CASE("hgp of two repetition codes is the 13-qubit surface code") {
    ClassicalCode rep(BitMatrix::parse("110;011"), "rep3");
    CssCode code = build_hgp(rep, rep);
    CHECK(code.n() == 13);   // L^2 + (L-1)^2 for L = 3
    CHECK(code.k_from_rank() == 1);
    CHECK(matmul(code.hx, transpose(code.hz)).is_zero());
}

TEST_CASE("K3,3 cycle code squared gives the [[106,16,4]] code") {
    ClassicalCode c = k33_code();
    c.distance = 4;
    CssCode code = build_hgp(c, c);
    CHECK(code.n() == 106);
    CHECK(hgp_k(c, c) == 16);
    CHECK(hgp_distances(c, c) == std::pair<std::size_t, std::size_t>{4, 4});
    CHECK(count_two_qubit_gates(code) == 420);
    CHECK(css_weights(code) == std::pair<std::size_t, std::size_t>{3, 5});

    auto [gx, gz] = canonical_logicals(code, c, c);
    CHECK(matmul(gx, transpose(gz)) == BitMatrix::identity(16));
    // Every canonical X row is a classical codeword laid on one grid row.
    CanonicalGenerator gen = canonical_generator(c);
    for (std::size_t r = 0; r < gx.rows(); ++r) {
        bool matches = false;
        for (std::uint64_t msg = 1; msg < (1u << 4); ++msg) {
            BitVector word(c.n());
            for (std::size_t b = 0; b < 4; ++b)
                if ((msg >> b) & 1) {
                    const std::uint64_t* src = gen.g.row_words(b);
                    for (std::size_t w = 0; w < word.words().size(); ++w)
                        word.words()[w] ^= src[w];
                }
            if (word.weight() == gx.row_weight(r)) matches = true;
        }
        CHECK(matches);
    }
}

TEST_CASE("Heawood cycle code squared gives the [[610,64,6]] code") {
    ClassicalCode c = cycle_code(heawood_graph());
    c.distance = 6;
    CssCode code = build_hgp(c, c);
    CHECK(code.n() == 610);
    CHECK(code.k_from_rank() == 64);
    CHECK(count_two_qubit_gates(code) == 2652);
    CHECK(css_weights(code) == std::pair<std::size_t, std::size_t>{3, 5});
}

TEST_CASE("QC [20,5,9] squared gives the [[625,25,9]] code") {
    ClassicalCode c = qc_20_5_9();
    c.distance = 9;
    CssCode code = build_hgp(c, c);
    CHECK(code.n() == 625);
    CHECK(code.k_from_rank() == 25);
    CHECK(count_two_qubit_gates(code) == 3150);
    CHECK(css_weights(code) == std::pair<std::size_t, std::size_t>{3, 6});
    CHECK(hgp_distances(c, c) == std::pair<std::size_t, std::size_t>{9, 9});
}

TEST_CASE("stabilizer rows touch at most one bit-type column (X) or row (Z)") {
    ClassicalCode c = k33_code();
    CssCode code = build_hgp(c, c);
    for (std::size_t r = 0; r < code.hx.rows(); ++r) {
        SectorWeights w = sector_weights(code, code.hx.row(r));
        CHECK(w.cols_bit <= 1);
        CHECK(w.rows_check <= 1);
    }
    for (std::size_t r = 0; r < code.hz.rows(); ++r) {
        SectorWeights w = sector_weights(code, code.hz.row(r));
        CHECK(w.rows_bit <= 1);
        CHECK(w.cols_check <= 1);
    }
    CHECK(sector_weights(code, BitVector(code.n())).cols_bit == 0);
}

TEST_CASE("canonical logicals refuse rank-deficient inputs") {
    // Full incidence matrix of K3,3 (no dropped vertex) is rank deficient.
    SimpleGraph g = complete_bipartite_graph(3, 3);
    BitMatrix h(6, 9);
    std::size_t e = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 3; j < 6; ++j) {
            h.set(i, e, true);
            h.set(j, e, true);
            ++e;
        }
    ClassicalCode redundant(h, "k33_full");
    CHECK_FALSE(redundant.full_rank());
    ClassicalCode good = k33_code();
    CssCode code = build_hgp(redundant, good);
    CHECK_THROWS_AS(canonical_logicals(code, redundant, good), std::invalid_argument);
}

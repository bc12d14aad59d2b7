#include <doctest.h>

#include <set>
#include <stdexcept>

#include "hgpred/coloring.hpp"
#include "hgpred/homomorphism.hpp"
#include "hgpred/hgp.hpp"

using namespace hgpred;

namespace {

// [6,3] full-rank code whose square has a 3x3 grid of logical qubits.
ClassicalCode base6() {
    return ClassicalCode(BitMatrix::parse("110100;011010;101001"), "base6");
}

BitMatrix fuse_row(const ClassicalCode& c) {
    CanonicalGenerator gen = canonical_generator(c);
    BitMatrix row(1, c.n());
    row.set(0, gen.info_cols[0], true);
    row.set(0, gen.info_cols[1], true);
    return row;
}

}  // namespace

TEST_CASE("augment: fuses logicals, guards non-informational support") {
    ClassicalCode c = base6();
    REQUIRE(c.k() == 3);
    ClassicalCode aug = augment(c, fuse_row(c));
    CHECK(aug.num_checks() == 4);
    CHECK(aug.k() == 2);
    CHECK(aug.rank() == 4);

    // Distance is preserved by fusing informational rows.
    CHECK(min_distance(aug).value >= min_distance(c).value);

    CHECK(augment(c, BitMatrix::zeros(0, 6)).h() == c.h());

    CanonicalGenerator gen = canonical_generator(c);
    BitMatrix bad(1, 6);
    bad.set(0, gen.pivot_cols[0], true);
    CHECK_THROWS_AS(augment(c, bad), std::invalid_argument);
}

TEST_CASE("augmented HGP fuses 9 logicals down to 6") {
    ClassicalCode c = base6();
    ClassicalCode aug = augment(c, fuse_row(c));
    CHECK(hgp_k(c, c) == 9);
    CHECK(hgp_k(c, aug) == 6);
}

TEST_CASE("lemma: augmentation keeps the original check adjacency intact") {
    ClassicalCode c = base6();
    ClassicalCode aug = augment(c, fuse_row(c));
    SimpleGraph before = check_adjacency_graph(c);
    SimpleGraph after = check_adjacency_graph(aug);
    for (std::size_t a = 0; a < c.num_checks(); ++a)
        for (std::size_t b = a + 1; b < c.num_checks(); ++b)
            CHECK(before.has_edge(a, b) == after.has_edge(a, b));
}

TEST_CASE("puncture: rank is preserved, non-informational bits rejected") {
    ClassicalCode c = base6();
    CanonicalGenerator gen = canonical_generator(c);
    ClassicalCode punc = puncture(c, {gen.info_cols[0]});
    CHECK(punc.n() == 5);
    CHECK(punc.rank() == c.rank());
    CHECK(punc.k() == 2);

    CHECK(puncture(c, {}).h() == c.h());
    CHECK_THROWS_AS(puncture(c, {gen.pivot_cols[0]}), std::invalid_argument);

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        ClassicalCode r = random_ldpc(12, 3, 4, seed);
        CanonicalGenerator g = canonical_generator(r);
        ClassicalCode p = puncture(r, {g.info_cols[0]});
        CHECK(p.rank() == r.rank());
    }
}

TEST_CASE("augmentation chain map: squares commute before and after reduction") {
    ClassicalCode c = base6();
    ReducedPair pair = build_aug_chain_map(c, c, fuse_row(c));
    CHECK(verify_chain_map(pair.map, pair.modified, pair.base));
    CHECK(pair.base.k_from_rank() == 9);
    CHECK(pair.modified.k_from_rank() == 6);

    // Sparsity: the qubit map is a projection, every column weight <= 1.
    for (std::size_t col = 0; col < pair.map.gamma_q.cols(); ++col)
        CHECK(pair.map.gamma_q.col_weight(col) <= 1);
    CHECK(pair.map.gamma_x == BitMatrix::identity(pair.base.hx.rows()));

    // Degenerate augmentation: identity maps all around.
    ReducedPair same = build_aug_chain_map(c, c, BitMatrix::zeros(0, 6));
    CHECK(same.map.gamma_q == BitMatrix::identity(same.base.n()));
    CHECK(same.map.gamma_z == BitMatrix::identity(same.base.hz.rows()));
}

TEST_CASE("puncturing chain map: squares commute, stars shorten, V-relation holds") {
    ClassicalCode c = base6();
    CanonicalGenerator gen = canonical_generator(c);
    ReducedPair pair = build_punc_chain_map(c, c, {gen.info_cols[0]});
    CHECK(verify_chain_map(pair.map, pair.modified, pair.base));
    CHECK(pair.base.k_from_rank() == 9);
    CHECK(pair.modified.k_from_rank() == 6);
    CHECK(pair.map.gamma_z == BitMatrix::identity(pair.base.hz.rows()));

    // Some X-star lost a check yet every star keeps at least one neighbor.
    std::set<std::size_t> base_sizes, punc_sizes;
    for (const auto& s : pair.base_plan.x_stars) base_sizes.insert(s.checks.size());
    for (const auto& s : pair.modified_plan.x_stars) {
        punc_sizes.insert(s.checks.size());
        CHECK(s.checks.size() >= 1);
    }
    CHECK(*punc_sizes.begin() < *base_sizes.begin());

    ReducedPair same = build_punc_chain_map(c, c, {});
    CHECK(same.map.gamma_q == BitMatrix::identity(same.base.n()));
    CHECK(same.map.gamma_x == BitMatrix::identity(same.base.hx.rows()));
}

TEST_CASE("verify_chain_map catches a single perturbed bit") {
    ClassicalCode c = base6();
    ReducedPair pair = build_aug_chain_map(c, c, fuse_row(c));
    ChainMap broken = pair.map;
    broken.gamma_q.flip(0, 0);
    CHECK_FALSE(verify_chain_map(broken, pair.modified, pair.base));
}

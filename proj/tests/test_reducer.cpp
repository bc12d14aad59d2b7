#include <doctest.h>

#include <map>
#include <stdexcept>

#include "hgpred/coloring.hpp"
#include "hgpred/graphs.hpp"
#include "hgpred/hgp.hpp"
#include "hgpred/planner.hpp"
#include "hgpred/reducer.hpp"
#include "hgpred/verifier.hpp"

using namespace hgpred;

namespace {

struct Reduced {
    CssCode code;
    ReductionPlan plan;
    CssCode reduced;
};

Reduced reduce_square(ClassicalCode c) {
    Reduced out;
    out.code = build_hgp(c, c);
    canonical_logicals(out.code, c, c);
    CheckColoring col = greedy_color(check_adjacency_graph(c));
    ProductColoring pc = product_coloring(col, col, out.code.layout);
    out.plan = build_reduction(out.code, pc, choose_schedule(pc));
    out.reduced = apply_reduction(out.code, out.plan);
    return out;
}

ClassicalCode qc_code(std::size_t lift) {
    static const std::map<std::size_t, std::map<std::pair<std::size_t, std::size_t>, std::size_t>>
        tables = {
            {5, {{{0, 0}, 4}, {{0, 2}, 4}, {{0, 3}, 3}, {{1, 1}, 3}, {{1, 2}, 3},
                 {{1, 3}, 4}, {{2, 0}, 3}, {{2, 1}, 4}, {{2, 3}, 3}}},
            {6, {{{0, 0}, 5}, {{0, 2}, 3}, {{0, 3}, 3}, {{1, 1}, 4}, {{1, 2}, 2},
                 {{1, 3}, 1}, {{2, 0}, 2}, {{2, 1}, 1}, {{2, 3}, 1}}},
            {7, {{{0, 0}, 1}, {{0, 2}, 2}, {{0, 3}, 3}, {{1, 1}, 5}, {{1, 2}, 6},
                 {{1, 3}, 1}, {{2, 0}, 4}, {{2, 1}, 5}, {{2, 3}, 5}}}};
    return qc_lift(BitMatrix::parse("1011;0111;1101"), tables.at(lift), lift);
}

}  // namespace

TEST_CASE("local repetition transform shapes") {
    CHECK(local_repetition_transform(3) == BitMatrix::parse("110;011"));
    BitMatrix w1 = local_repetition_transform(1);
    CHECK(w1.rows() == 0);
    CHECK(w1.cols() == 1);
    BitMatrix w4 = local_repetition_transform(4);
    CHECK(w4.rows() == 3);
    BitMatrix k = kernel_basis(w4);
    REQUIRE(k.rows() == 1);
    CHECK(k.row(0).weight() == 4);   // all-ones kernel
    CHECK_THROWS_AS(local_repetition_transform(0), std::logic_error);
}

TEST_CASE("minimal example: combining the two Z-checks around one qubit removes it") {
    // Repetition-pair product: small enough to see the mechanism directly.
    ClassicalCode rep(BitMatrix::parse("110;011"), "rep3");
    CssCode code = build_hgp(rep, rep);
    CheckColoring col = greedy_color(check_adjacency_graph(rep));
    ProductColoring pc = product_coloring(col, col, code.layout);

    CombinationSchedule one;
    one.z_groups = {{0, 0}};
    REQUIRE(pc.group_size(0, 0) >= 1);
    ReductionPlan plan = build_reduction(code, pc, one);
    CssCode red = apply_reduction(code, plan);
    CHECK(red.n() == code.n() - pc.group_size(0, 0));
    CHECK(matmul(red.hx, transpose(red.hz)).is_zero());
    // Each scheduled qubit consumed one Z-check.
    CHECK(red.hz.rows() == code.hz.rows() - pc.group_size(0, 0));
    CHECK(red.hx.rows() == code.hx.rows());
}

TEST_CASE("empty schedule reduces nothing") {
    ClassicalCode c = cycle_code(complete_bipartite_graph(3, 3));
    CssCode code = build_hgp(c, c);
    CheckColoring col = greedy_color(check_adjacency_graph(c));
    ProductColoring pc = product_coloring(col, col, code.layout);
    ReductionPlan plan = build_reduction(code, pc, CombinationSchedule{});
    CHECK(plan.wx == BitMatrix::identity(code.hx.rows()));
    CHECK(plan.wz == BitMatrix::identity(code.hz.rows()));
    CHECK(plan.v == BitMatrix::identity(code.n()));
    CssCode red = apply_reduction(code, plan);
    CHECK(red.hx == code.hx);
    CHECK(red.hz == code.hz);
}

TEST_CASE("golden: K3,3 [[106,16,4]] -> [[81,16,4]] with N2q 420 -> 345") {
    auto r = reduce_square(cycle_code(complete_bipartite_graph(3, 3)));
    CHECK(r.reduced.n() == 81);
    CHECK(r.reduced.k_from_rank() == 16);
    WeightReport rep = weight_report(r.code, r.reduced);
    CHECK(rep.n2q_before == 420);
    CHECK(rep.n2q_after == 345);
    CHECK(rep.wq_before == 3);
    CHECK(rep.wc_before == 5);
    CHECK(rep.wq_after == 4);
    CHECK(rep.wc_after == 6);
    CHECK(cycle_savings_formula(3, 3) == 75);
    CHECK(rep.n2q_before - rep.n2q_after == 75);
}

TEST_CASE("golden: Heawood [[610,64,6]] -> [[441,64,6]] with N2q 2652 -> 2145") {
    auto r = reduce_square(cycle_code(heawood_graph()));
    CHECK(r.plan.removed.size() == 169);     // every check-type qubit
    CHECK(r.reduced.n() == 441);
    CHECK(r.reduced.k_from_rank() == 64);
    WeightReport rep = weight_report(r.code, r.reduced);
    CHECK(rep.n2q_before == 2652);
    CHECK(rep.n2q_after == 2145);
    CHECK(rep.wq_after == 4);
    CHECK(rep.wc_after == 6);
    CHECK(cycle_savings_formula(7, 3) == 507);
}

TEST_CASE("golden: QC [20,5,9] HGP [[625,25,9]] -> [[475,25,9]]") {
    auto r = reduce_square(qc_code(5));
    CHECK(r.reduced.n() == 475);
    CHECK(r.reduced.k_from_rank() == 25);
    WeightReport rep = weight_report(r.code, r.reduced);
    CHECK(rep.n2q_before == 3150);
    CHECK(rep.n2q_after == 2775);
    CHECK(rep.wq_after == 5);
    CHECK(rep.wc_after == 9);
}

TEST_CASE("repetition-code square reduces to the 9-qubit rotated-style code") {
    ClassicalCode rep(BitMatrix::parse("110;011"), "rep3");
    rep.distance = 3;
    auto r = reduce_square(rep);
    CHECK(r.code.n() == 13);
    CHECK(r.reduced.n() == 9);                    // all check-type qubits gone
    CHECK(r.reduced.k_from_rank() == 1);
    CHECK(r.reduced.hx.max_row_weight() == 4);    // weight-4 bulk checks
    CHECK(verify_css(r.reduced).ok);
    DistanceReport d = certify_distance(r.reduced, 3, 2, Pauli::X);
    CHECK(d.verdict == DistanceVerdict::ConfirmedMin);
}

TEST_CASE("cycle savings formula: zero at degree four") {
    CHECK(cycle_savings_formula(6, 4) == 0);
    CHECK(cycle_savings_formula(15, 3) == 2523);
    CHECK(cycle_savings_formula(5, 5) < 0);
}

TEST_CASE("reduction invariants: CSS, full W ranks, k formula, rowspace containment") {
    for (auto r : {reduce_square(cycle_code(complete_bipartite_graph(3, 3))),
                   reduce_square(qc_code(5))}) {
        CHECK(matmul(r.reduced.hx, transpose(r.reduced.hz)).is_zero());
        CHECK(rank(r.reduced.hx) == r.reduced.hx.rows());
        CHECK(rank(r.reduced.hz) == r.reduced.hz.rows());
        CHECK(r.reduced.n() - r.reduced.hx.rows() - r.reduced.hz.rows() ==
              r.code.k_from_rank());

        // rs(h~x)|B subset of rs(hx)|B, and dually.
        std::vector<std::size_t> bit_cols_old, bit_cols_new;
        for (std::size_t q = 0; q < r.code.layout.num_bit_type(); ++q) bit_cols_old.push_back(q);
        for (std::size_t q = 0; q < r.reduced.n(); ++q)
            if (r.reduced.is_bit_type(q)) bit_cols_new.push_back(q);
        RowSpace x_old(col_select(r.code.hx, bit_cols_old));
        BitMatrix x_new = col_select(r.reduced.hx, bit_cols_new);
        for (std::size_t row = 0; row < x_new.rows(); ++row) CHECK(x_old.contains(x_new.row(row)));
        RowSpace z_old(col_select(r.code.hz, bit_cols_old));
        BitMatrix z_new = col_select(r.reduced.hz, bit_cols_new);
        for (std::size_t row = 0; row < z_new.rows(); ++row) CHECK(z_old.contains(z_new.row(row)));
    }
}

TEST_CASE("restricted canonical logicals stay a valid basis (unit-scale check)") {
    auto r = reduce_square(cycle_code(complete_bipartite_graph(3, 3)));
    REQUIRE(r.reduced.logical_x.has_value());
    const BitMatrix& gx = *r.reduced.logical_x;
    const BitMatrix& gz = *r.reduced.logical_z;
    CHECK(matmul(r.reduced.hz, transpose(gx)).is_zero());
    CHECK(matmul(r.reduced.hx, transpose(gz)).is_zero());
    CHECK(matmul(gx, transpose(gz)) == BitMatrix::identity(16));
    RowSpace xs(r.reduced.hx);
    for (std::size_t row = 0; row < gx.rows(); ++row) CHECK_FALSE(xs.contains(gx.row(row)));
}

TEST_CASE("asymmetric product: full pipeline on distinct inputs") {
    ClassicalCode c1 = cycle_code(complete_bipartite_graph(3, 3));
    ClassicalCode c2(BitMatrix::parse("110;011"), "rep3");
    CssCode code = build_hgp(c1, c2);
    canonical_logicals(code, c1, c2);
    CHECK(code.n() == 37);
    CHECK(code.k_from_rank() == 4);

    CheckColoring col1 = greedy_color(check_adjacency_graph(c1));
    CheckColoring col2 = greedy_color(check_adjacency_graph(c2));
    ProductColoring pc = product_coloring(col1, col2, code.layout);
    CHECK(verify_product_coloring(pc, c1, c2));
    ReductionPlan plan = build_reduction(code, pc, choose_schedule(pc));
    CssCode red = apply_reduction(code, plan);
    CHECK(red.n() == 27);   // all 10 check-type qubits removed
    CHECK(red.k_from_rank() == 4);
    CHECK(matmul(red.hx, transpose(red.hz)).is_zero());
    CHECK(matmul(*red.logical_x, transpose(*red.logical_z)) == BitMatrix::identity(4));

    DistanceReport rx = certify_distance(red, 3, 2, Pauli::X);
    DistanceReport rz = certify_distance(red, 4, 3, Pauli::Z);
    CHECK(rx.verdict == DistanceVerdict::ConfirmedMin);
    CHECK(rz.verdict == DistanceVerdict::ConfirmedMin);
}

TEST_CASE("infeasible schedules are rejected") {
    ClassicalCode c = cycle_code(complete_bipartite_graph(3, 3));
    CssCode code = build_hgp(c, c);
    CheckColoring col = greedy_color(check_adjacency_graph(c));
    ProductColoring pc = product_coloring(col, col, code.layout);
    CombinationSchedule bad;
    bad.x_groups = {{0, 0}, {0, 1}};
    CHECK_THROWS_AS(build_reduction(code, pc, bad), std::invalid_argument);
}

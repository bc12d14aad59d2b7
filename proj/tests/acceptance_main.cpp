// Acceptance suite: every release gate, one pass/fail line each.
// Golden integers are frozen reference parameters for the cycle-code and
// quasi-cyclic families; everything else is property-based at fixed seeds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "hgpred/classical_code.hpp"
#include "hgpred/coloring.hpp"
#include "hgpred/graphs.hpp"
#include "hgpred/hgp.hpp"
#include "hgpred/homomorphism.hpp"
#include "hgpred/memsim.hpp"
#include "hgpred/planner.hpp"
#include "hgpred/reducer.hpp"
#include "hgpred/sescheduler.hpp"
#include "hgpred/verifier.hpp"

using namespace hgpred;

namespace {

int failures = 0;

void report(int criterion, const char* name, bool ok, double seconds) {
    std::printf("%s  criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", criterion, name, seconds);
    if (!ok) ++failures;
}

template <typename F>
void run(int criterion, const char* name, F&& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::printf("      exception: %s\n", e.what());
        ok = false;
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(criterion, name, ok, seconds);
}

struct Pipeline {
    ClassicalCode input;
    CssCode code;
    ReductionPlan plan;
    CssCode reduced;
};

Pipeline reduce_square(ClassicalCode c) {
    Pipeline p;
    p.input = std::move(c);
    p.code = build_hgp(p.input, p.input);
    if (p.input.full_rank()) canonical_logicals(p.code, p.input, p.input);
    CheckColoring col = greedy_color(check_adjacency_graph(p.input));
    ProductColoring pc = product_coloring(col, col, p.code.layout);
    p.plan = build_reduction(p.code, pc, choose_schedule(pc));
    p.reduced = apply_reduction(p.code, p.plan);
    return p;
}

ClassicalCode qc_input(std::size_t lift) {
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

struct GoldenRow {
    const char* name;
    std::function<ClassicalCode()> make;
    std::size_t cn, ck, cd;                       // classical parameters
    std::size_t n, k, d, n2q, wq, wc;             // product code
    std::size_t rn, rn2q, rwq, rwc;               // reduced code
};

const std::vector<GoldenRow>& golden_rows() {
    static const std::vector<GoldenRow> rows = {
        {"K3,3", [] { return cycle_code(complete_bipartite_graph(3, 3)); },
         9, 4, 4, 106, 16, 4, 420, 3, 5, 81, 345, 4, 6},
        {"Heawood", [] { return cycle_code(heawood_graph()); },
         21, 8, 6, 610, 64, 6, 2652, 3, 5, 441, 2145, 4, 6},
        {"Tutte-Coxeter", [] { return cycle_code(tutte_coxeter_graph()); },
         45, 16, 8, 2866, 256, 8, 12876, 3, 5, 2025, 10353, 4, 6},
        {"QC lift 5", [] { return qc_input(5); },
         20, 5, 9, 625, 25, 9, 3150, 3, 6, 475, 2775, 5, 9},
        {"QC lift 6", [] { return qc_input(6); },
         24, 6, 10, 900, 36, 10, 4536, 3, 6, 684, 3996, 5, 9},
        {"QC lift 7", [] { return qc_input(7); },
         28, 7, 11, 1225, 49, 11, 6174, 3, 6, 931, 5439, 5, 9}};
    return rows;
}

std::map<const char*, Pipeline>& pipeline_cache() {
    static std::map<const char*, Pipeline> cache;
    return cache;
}

const Pipeline& pipeline_for(const GoldenRow& row) {
    auto& cache = pipeline_cache();
    auto it = cache.find(row.name);
    if (it == cache.end()) it = cache.emplace(row.name, reduce_square(row.make())).first;
    return it->second;
}

bool criterion_golden_tables() {
    bool ok = true;
    for (const auto& row : golden_rows()) {
        const Pipeline& p = pipeline_for(row);

        // Classical parameters with the distance enumerated exactly (k <= 16).
        DistanceResult cd = min_distance(p.input);
        bool classical_ok = p.input.n() == row.cn && p.input.k() == row.ck && cd.exact &&
                            cd.value == row.cd && p.input.full_rank();

        auto [dx, dz] = hgp_distances([&] {
            ClassicalCode c = p.input;
            c.distance = cd.value;
            return c;
        }(), [&] {
            ClassicalCode c = p.input;
            c.distance = cd.value;
            return c;
        }());
        auto [wq, wc] = css_weights(p.code);
        bool product_ok = p.code.n() == row.n && p.code.k_from_rank() == row.k && dx == row.d &&
                          dz == row.d && count_two_qubit_gates(p.code) == row.n2q &&
                          wq == row.wq && wc == row.wc;

        auto [rwq, rwc] = css_weights(p.reduced);
        bool reduced_ok = p.reduced.n() == row.rn && p.reduced.k_from_rank() == row.k &&
                          count_two_qubit_gates(p.reduced) == row.rn2q && rwq == row.rwq &&
                          rwc == row.rwc;

        if (!(classical_ok && product_ok && reduced_ok)) {
            std::printf("      %s: classical=%d product=%d reduced=%d\n", row.name, classical_ok,
                        product_ok, reduced_ok);
            ok = false;
        }
    }
    return ok;
}

bool criterion_distance_certification() {
    const Pipeline& k33 = pipeline_for(golden_rows()[0]);
    bool ok = true;
    for (Pauli side : {Pauli::X, Pauli::Z}) {
        DistanceReport r = certify_distance(k33.reduced, 4, 3, side);
        if (r.verdict != DistanceVerdict::ConfirmedMin || r.upper_bound != 4) {
            std::printf("      [[81,16,4]] side %c not confirmed\n", side == Pauli::X ? 'X' : 'Z');
            ok = false;
        }
    }

    // [[441,64,6]]: upper bound, rowspace containment, deformation floor.
    const Pipeline& hea = pipeline_for(golden_rows()[1]);
    const CssCode& red = hea.reduced;
    std::size_t ub = red.n();
    for (std::size_t r = 0; r < red.logical_x->rows(); ++r)
        ub = std::min(ub, red.logical_x->row_weight(r));
    for (std::size_t r = 0; r < red.logical_z->rows(); ++r)
        ub = std::min(ub, red.logical_z->row_weight(r));
    if (ub != 6) {
        std::printf("      [[441,64,6]] canonical upper bound %zu != 6\n", ub);
        ok = false;
    }

    std::vector<std::size_t> bit_old, bit_new;
    for (std::size_t q = 0; q < hea.code.layout.num_bit_type(); ++q) bit_old.push_back(q);
    for (std::size_t q = 0; q < red.n(); ++q)
        if (red.is_bit_type(q)) bit_new.push_back(q);
    RowSpace x_old(col_select(hea.code.hx, bit_old));
    RowSpace z_old(col_select(hea.code.hz, bit_old));
    BitMatrix x_new = col_select(red.hx, bit_new);
    BitMatrix z_new = col_select(red.hz, bit_new);
    for (std::size_t r = 0; r < x_new.rows(); ++r)
        if (!x_old.contains(x_new.row(r))) ok = false;
    for (std::size_t r = 0; r < z_new.rows(); ++r)
        if (!z_old.contains(z_new.row(r))) ok = false;

    std::mt19937_64 rng(2026);
    std::size_t trials_per_row = 10000 / red.logical_x->rows() + 1;
    auto deform_floor = [&](const BitMatrix& logicals, const BitMatrix& stabilizers) {
        std::size_t floor_w = red.n();
        for (std::size_t r = 0; r < logicals.rows(); ++r) {
            for (std::size_t t = 0; t < trials_per_row; ++t) {
                BitVector v = logicals.row(r);
                for (std::size_t s = 0; s < stabilizers.rows(); ++s)
                    if (rng() & 1) {
                        const std::uint64_t* w = stabilizers.row_words(s);
                        for (std::size_t wi = 0; wi < v.words().size(); ++wi) v.words()[wi] ^= w[wi];
                    }
                floor_w = std::min(floor_w, v.weight());
            }
        }
        return floor_w;
    };
    if (deform_floor(*red.logical_x, red.hx) < 6) ok = false;
    if (deform_floor(*red.logical_z, red.hz) < 6) ok = false;
    return ok;
}

bool criterion_matching_optimality() {
    // 3x3 fixture with class sizes (1,1,1) x (5,1,1).
    CheckColoring col1{{0, 1, 2}, 3};
    CheckColoring col2{{0, 0, 0, 0, 0, 1, 2}, 3};
    QubitLayout layout{1, 1, 3, 7};
    ProductColoring pc = product_coloring(col1, col2, layout);

    CombinationSchedule diagonal;
    diagonal.x_groups = {{0, 0}, {1, 1}, {2, 2}};
    diagonal.z_groups = {{0, 1}, {1, 0}};
    if (removed_count(pc, diagonal) != 13) return false;

    CombinationSchedule best = choose_schedule(pc);
    if (removed_count(pc, best) != 18) return false;

    // Brute force over every feasible schedule.
    std::size_t brute = 0;
    for (int xm = 0; xm < 64; ++xm) {
        for (int zm = 0; zm < 64; ++zm) {
            CombinationSchedule s;
            for (std::size_t i = 0; i < 3; ++i) {
                int c = (xm >> (2 * i)) & 3;
                if (c < 3) s.x_groups.emplace_back(i, c);
            }
            for (std::size_t j = 0; j < 3; ++j) {
                int r = (zm >> (2 * j)) & 3;
                if (r < 3) s.z_groups.emplace_back(r, j);
            }
            if (!s.feasible(3, 3)) continue;
            brute = std::max(brute, removed_count(pc, s));
        }
    }
    return brute == 18;
}

bool criterion_theorem_suite() {
    bool ok = true;
    std::size_t instances = 0;
    std::uint64_t seed = 0;
    struct Shape {
        std::size_t n, dv, dc, want;
    };
    for (Shape shape : {Shape{12, 3, 4, 25}, Shape{20, 3, 5, 25}}) {
        std::size_t done = 0;
        while (done < shape.want) {
            ClassicalCode c = random_ldpc(shape.n, shape.dv, shape.dc, ++seed);
            if (!c.full_rank()) continue;   // bit-type sector assumption
            ++done;
            ++instances;
            CssCode code = build_hgp(c, c);
            canonical_logicals(code, c, c);
            CheckColoring col = greedy_color(check_adjacency_graph(c));
            ProductColoring pc = product_coloring(col, col, code.layout);
            if (!verify_product_coloring(pc, c, c)) ok = false;
            ReductionPlan plan = build_reduction(code, pc, choose_schedule(pc));
            CssCode red = apply_reduction(code, plan);

            if (!verify_css(red).ok) ok = false;
            if (!verify_k(code, red).ok) ok = false;
            if (!verify_logical_basis(red).ok()) ok = false;
            auto [wq, wc] = css_weights(code);
            auto [rwq, rwc] = css_weights(red);
            if (rwq > 2 * wq || rwc > 2 * (wc - 1)) ok = false;
        }
    }
    return ok && instances == 50;
}

bool criterion_hook_containment() {
    bool ok = true;
    for (int which : {0, 1}) {   // K3,3 and Heawood
        const Pipeline& p = pipeline_for(golden_rows()[which]);
        CnotSchedule split = split_schedule(p.reduced, p.plan);
        for (Pauli basis : {Pauli::X, Pauli::Z}) {
            BitLineOracle oracle(p.reduced, basis);
            for (const auto& hook : enumerate_hooks(p.reduced, split, basis)) {
                if (!oracle.at_most_one_line(hook.residual)) {
                    std::printf("      split schedule leaked on %s\n", golden_rows()[which].name);
                    ok = false;
                }
            }
            // A random schedule must exhibit at least one spreading hook.
            bool found = false;
            for (std::uint64_t seed = 1; seed <= 16 && !found; ++seed) {
                CnotSchedule rnd = random_schedule(p.reduced, seed);
                for (const auto& hook : enumerate_hooks(p.reduced, rnd, basis)) {
                    if (!oracle.at_most_one_line(hook.residual)) {
                        found = true;
                        break;
                    }
                }
            }
            if (!found) {
                std::printf("      no spreading hook under random schedules on %s\n",
                            golden_rows()[which].name);
                ok = false;
            }
        }
    }
    return ok;
}

bool criterion_chain_maps() {
    ClassicalCode base(BitMatrix::parse("110100;011010;101001"), "base6");
    CanonicalGenerator gen = canonical_generator(base);
    BitMatrix fuse(1, base.n());
    fuse.set(0, gen.info_cols[0], true);
    fuse.set(0, gen.info_cols[1], true);

    bool ok = true;
    CombinationSchedule empty;
    // Before reduction (empty schedule) and after reduction.
    for (auto schedule : {std::optional<CombinationSchedule>(empty),
                          std::optional<CombinationSchedule>(std::nullopt)}) {
        ReducedPair aug = build_aug_chain_map(base, base, fuse, schedule);
        if (!verify_chain_map(aug.map, aug.modified, aug.base)) ok = false;
        if (aug.base.k_from_rank() != 9 || aug.modified.k_from_rank() != 6) ok = false;

        ReducedPair punc = build_punc_chain_map(base, base, {gen.info_cols[0]}, schedule);
        if (!verify_chain_map(punc.map, punc.modified, punc.base)) ok = false;
        if (punc.base.k_from_rank() != 9 || punc.modified.k_from_rank() != 6) ok = false;
    }
    return ok;
}

bool criterion_fold_symmetry() {
    ClassicalCode c = cycle_code(complete_bipartite_graph(3, 3));
    CssCode code = build_hgp(c, c);
    canonical_logicals(code, c, c);
    CheckColoring col = greedy_color(check_adjacency_graph(c));
    ProductColoring pc = product_coloring(col, col, code.layout);
    std::vector<std::size_t> mirror = diagonal_mirror(code.layout);

    CombinationSchedule fold = fold_symmetric_schedule(pc);
    CssCode red_fold = apply_reduction(code, build_reduction(code, pc, fold));
    if (!verify_zx_fold(red_fold, mirror)) return false;

    CssCode red_opt = apply_reduction(code, build_reduction(code, pc, choose_schedule(pc)));
    if (verify_zx_fold(red_opt, mirror)) {
        // The optimum happened to be symmetric; a diagonal-touching schedule
        // must still break the fold.
        CombinationSchedule diag;
        diag.x_groups = {{0, 0}};
        CssCode red_diag = apply_reduction(code, build_reduction(code, pc, diag));
        if (verify_zx_fold(red_diag, mirror)) return false;
    }
    return true;
}

bool criterion_memory_simulation() {
    const Pipeline& k33 = pipeline_for(golden_rows()[0]);
    const CssCode& red = k33.reduced;

    NoiseModel quiet{0.0, 0.0, 5};
    TrialResult silent = run_memory(red, quiet, 10000, 7);
    if (silent.failures != 0) return false;

    std::vector<TrialResult> sweep;
    for (double p : {1e-2, 3e-3, 1e-3}) {
        NoiseModel noise{p, p, 5};
        sweep.push_back(run_memory(red, noise, 10000, 2024));
    }
    bool monotone = sweep[0].bler >= sweep[1].bler && sweep[1].bler >= sweep[2].bler;
    bool separated = sweep[0].ci_low > sweep[2].ci_high;   // endpoints do not overlap
    if (!monotone || !separated) {
        std::printf("      sweep: %.4f %.4f %.4f\n", sweep[0].bler, sweep[1].bler, sweep[2].bler);
        return false;
    }

    // Exhaustive single data-error sweep through the decoder.
    DecodingGraph graph = build_decoding_graph(red, 5);
    attach_priors(graph, NoiseModel{1e-3, 1e-3, 5});
    for (std::size_t v = 0; v < graph.num_data_vars(); ++v) {
        BitVector e(graph.num_vars());
        e.set(v, true);
        BpResult res = bp_decode(graph, matvec(graph.detector, e));
        if (!res.converged) return false;
        BitVector flips = matvec(graph.logical_action, res.correction);
        flips.xor_with(matvec(graph.logical_action, e));
        if (!flips.is_zero()) return false;
    }
    return true;
}

bool criterion_savings_formula() {
    struct Case {
        int row;
        std::int64_t v, delta, expected;
    };
    for (Case c : {Case{0, 3, 3, 75}, Case{1, 7, 3, 507}, Case{2, 15, 3, 2523}}) {
        if (cycle_savings_formula(c.v, c.delta) != c.expected) return false;
        const Pipeline& p = pipeline_for(golden_rows()[c.row]);
        std::int64_t measured =
            static_cast<std::int64_t>(count_two_qubit_gates(p.code)) -
            static_cast<std::int64_t>(count_two_qubit_gates(p.reduced));
        if (measured != c.expected) return false;
    }
    return true;
}

}  // namespace

int main() {
    run(1, "golden-table reproduction (cycle + quasi-cyclic families)", criterion_golden_tables);
    run(2, "distance certification at desk scale", criterion_distance_certification);
    run(3, "matching optimality on the 3x3 fixture", criterion_matching_optimality);
    run(4, "theorem suite on 50 random product codes", criterion_theorem_suite);
    run(5, "split-schedule hook containment", criterion_hook_containment);
    run(6, "chain-map exactness with 9 -> 6 fusion", criterion_chain_maps);
    run(7, "fold symmetry of the mirrored schedule", criterion_fold_symmetry);
    run(8, "phenomenological memory simulation", criterion_memory_simulation);
    run(9, "two-qubit gate savings formula", criterion_savings_formula);
    if (failures == 0) std::printf("all acceptance criteria passed\n");
    else std::printf("%d acceptance criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}

#include "hgpred/homomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "hgpred/coloring.hpp"
#include "hgpred/planner.hpp"

namespace hgpred {

bool verify_chain_map(const ChainMap& map, const CssCode& source, const CssCode& target) {
    // gamma_q H_X(src)^T = H_X(tgt)^T gamma_x
    BitMatrix lhs1 = matmul(map.gamma_q, transpose(source.hx));
    BitMatrix rhs1 = matmul(transpose(target.hx), map.gamma_x);
    // gamma_z H_Z(src) = H_Z(tgt) gamma_q
    BitMatrix lhs2 = matmul(map.gamma_z, source.hz);
    BitMatrix rhs2 = matmul(target.hz, map.gamma_q);
    return lhs1 == rhs1 && lhs2 == rhs2;
}

ClassicalCode augment(const ClassicalCode& code, const BitMatrix& new_checks) {
    if (new_checks.cols() != code.n() && new_checks.rows() > 0)
        throw std::invalid_argument("augment: new checks have the wrong length");
    if (new_checks.rows() == 0) return code;

    CanonicalGenerator gen = canonical_generator(code);
    std::set<std::size_t> info(gen.info_cols.begin(), gen.info_cols.end());
    for (std::size_t r = 0; r < new_checks.rows(); ++r)
        for (std::size_t c : new_checks.row_support(r))
            if (!info.count(c))
                throw std::invalid_argument("augment: new check touches a non-informational bit");

    return ClassicalCode(vstack(code.h(), new_checks), code.name() + "+aug");
}

ClassicalCode puncture(const ClassicalCode& code, const std::vector<std::size_t>& bits) {
    if (bits.empty()) return code;
    CanonicalGenerator gen = canonical_generator(code);
    std::set<std::size_t> info(gen.info_cols.begin(), gen.info_cols.end());
    std::set<std::size_t> drop(bits.begin(), bits.end());
    if (drop.size() > code.k())
        throw std::invalid_argument("puncture: more bits than logical dimension");
    for (std::size_t b : drop)
        if (!info.count(b)) throw std::invalid_argument("puncture: bit is not informational");

    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < code.n(); ++c)
        if (!drop.count(c)) keep.push_back(c);
    ClassicalCode out(col_select(code.h(), keep), code.name() + "-punc");
    if (out.rank() != code.rank())
        throw std::logic_error("puncture: rank changed, informational-bit contract broken");
    return out;
}

namespace {

// Solve X basis = targets for full-row-rank basis; each target must lie in the
// rowspace. Row operations are tracked through an appended identity block.
BitMatrix solve_rows(const BitMatrix& basis, const BitMatrix& targets) {
    std::size_t r = basis.rows();
    RrefResult tracked = rref(hstack(basis, BitMatrix::identity(r)));
    if (tracked.pivots.size() != r || (r > 0 && tracked.pivots.back() >= basis.cols()))
        throw std::invalid_argument("solve_rows: basis does not have full row rank");

    BitMatrix solution(targets.rows(), r);
    for (std::size_t t = 0; t < targets.rows(); ++t) {
        BitVector residual = targets.row(t);
        BitVector combo(r);
        for (std::size_t pi = 0; pi < tracked.pivots.size(); ++pi) {
            if (residual.get(tracked.pivots[pi])) {
                for (std::size_t c = 0; c < basis.cols(); ++c)
                    if (tracked.matrix.get(pi, c)) residual.flip(c);
                for (std::size_t c = 0; c < r; ++c)
                    if (tracked.matrix.get(pi, basis.cols() + c)) combo.flip(c);
            }
        }
        if (!residual.is_zero())
            throw std::logic_error("solve_rows: target outside the rowspace");
        solution.set_row(t, combo);
    }
    return solution;
}

struct Pipeline {
    CssCode code;
    ProductColoring pc;
    ReductionPlan plan;
    CssCode reduced;
};

Pipeline reduce_with(const ClassicalCode& c1, const ClassicalCode& c2, const CheckColoring& col1,
                     const CheckColoring& col2, const CombinationSchedule& schedule) {
    Pipeline p;
    p.code = build_hgp(c1, c2);
    if (c1.full_rank() && c2.full_rank()) canonical_logicals(p.code, c1, c2);
    p.pc = product_coloring(col1, col2, p.code.layout);
    if (!verify_product_coloring(p.pc, c1, c2))
        throw std::logic_error("reduce_with: product coloring failed verification");
    p.plan = build_reduction(p.code, p.pc, schedule);
    p.reduced = apply_reduction(p.code, p.plan);
    return p;
}

// Positions of a star's combined rows inside the assembled W (consecutive by
// construction; keyed by the star's check set).
std::vector<std::size_t> star_rows(const std::vector<std::vector<std::size_t>>& new_rows,
                                   const std::vector<std::size_t>& checks) {
    std::set<std::size_t> members(checks.begin(), checks.end());
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < new_rows.size(); ++r) {
        if (new_rows[r].size() == 2 && members.count(new_rows[r][0]) &&
            members.count(new_rows[r][1]))
            rows.push_back(r);
    }
    return rows;
}

std::map<std::vector<std::size_t>, std::size_t> row_lookup(
    const std::vector<std::vector<std::size_t>>& new_rows) {
    std::map<std::vector<std::size_t>, std::size_t> out;
    for (std::size_t r = 0; r < new_rows.size(); ++r) out[new_rows[r]] = r;
    return out;
}

}  // namespace

ReducedPair build_aug_chain_map(const ClassicalCode& c1, const ClassicalCode& c2,
                                const BitMatrix& new_checks,
                                std::optional<CombinationSchedule> schedule_override) {
    CheckColoring col1 = greedy_color(check_adjacency_graph(c1));
    CheckColoring col2 = greedy_color(check_adjacency_graph(c2));

    ClassicalCode c2p = augment(c2, new_checks);
    // New checks keep the original coloring intact and take fresh colors.
    CheckColoring col2p = col2;
    col2p.color_of.resize(c2p.num_checks());
    for (std::size_t r = 0; r < new_checks.rows(); ++r)
        col2p.color_of[c2.num_checks() + r] = col2p.num_colors++;

    ReducedPair pair;
    {
        CssCode base = build_hgp(c1, c2);
        ProductColoring pc = product_coloring(col1, col2, base.layout);
        CombinationSchedule schedule =
            schedule_override ? *schedule_override : choose_schedule(pc);
        Pipeline p = reduce_with(c1, c2, col1, col2, schedule);
        Pipeline q = reduce_with(c1, c2p, col1, col2p, schedule);
        pair.base = std::move(p.reduced);
        pair.base_plan = std::move(p.plan);
        pair.modified = std::move(q.reduced);
        pair.modified_plan = std::move(q.plan);
    }

    const QubitLayout& lay = pair.base_plan.layout;     // m2 columns of check qubits
    const QubitLayout& layp = pair.modified_plan.layout;

    // Grid inclusion Q -> Q': bit-type ids coincide, check-type shifts with m2'.
    auto grid_to_aug = [&](std::size_t g) {
        if (lay.is_bit_type(g)) return g;
        std::size_t a = lay.grid_row(g), b = lay.grid_col(g);
        return layp.check_index(a, b);
    };

    // gamma_q: Q~' -> Q~, transpose of the kept-qubit inclusion.
    std::map<std::size_t, std::size_t> kept_aug_pos;
    for (std::size_t t = 0; t < pair.modified_plan.kept.size(); ++t)
        kept_aug_pos[pair.modified_plan.kept[t]] = t;
    BitMatrix gamma_q(pair.base_plan.kept.size(), pair.modified_plan.kept.size());
    for (std::size_t t = 0; t < pair.base_plan.kept.size(); ++t) {
        auto it = kept_aug_pos.find(grid_to_aug(pair.base_plan.kept[t]));
        if (it == kept_aug_pos.end())
            throw std::logic_error("build_aug_chain_map: kept qubit missing in augmented code");
        gamma_q.set(t, it->second, true);
    }

    // X-checks and their combinations are untouched by augmentation.
    if (pair.base_plan.new_x_rows != pair.modified_plan.new_x_rows)
        throw std::logic_error("build_aug_chain_map: X combination rows diverged");
    BitMatrix gamma_x = BitMatrix::identity(pair.base.hx.rows());

    // gamma_z: S~_Z(aug) -> S~_Z(base): match combination rows through the
    // Z-check index shift (i, b) -> i*m2' + b.
    auto z_to_aug = [&](std::size_t z) {
        std::size_t i = z / lay.m2, b = z % lay.m2;
        return i * layp.m2 + b;
    };
    auto lookup = row_lookup(pair.modified_plan.new_z_rows);
    BitMatrix gamma_z(pair.base.hz.rows(), pair.modified.hz.rows());
    for (std::size_t r = 0; r < pair.base_plan.new_z_rows.size(); ++r) {
        std::vector<std::size_t> image;
        for (std::size_t z : pair.base_plan.new_z_rows[r]) image.push_back(z_to_aug(z));
        auto it = lookup.find(image);
        if (it == lookup.end())
            throw std::logic_error("build_aug_chain_map: Z combination row missing");
        gamma_z.set(r, it->second, true);
    }

    pair.map = {std::move(gamma_x), std::move(gamma_q), std::move(gamma_z)};
    if (!verify_chain_map(pair.map, pair.modified, pair.base))
        throw std::logic_error("build_aug_chain_map: commuting squares violated");
    return pair;
}

ReducedPair build_punc_chain_map(const ClassicalCode& c1, const ClassicalCode& c2,
                                 const std::vector<std::size_t>& bits,
                                 std::optional<CombinationSchedule> schedule_override) {
    CheckColoring col1 = greedy_color(check_adjacency_graph(c1));
    CheckColoring col2 = greedy_color(check_adjacency_graph(c2));
    ClassicalCode c2p = puncture(c2, bits);

    ReducedPair pair;
    {
        CssCode base = build_hgp(c1, c2);
        ProductColoring pc = product_coloring(col1, col2, base.layout);
        CombinationSchedule schedule =
            schedule_override ? *schedule_override : choose_schedule(pc);
        Pipeline p = reduce_with(c1, c2, col1, col2, schedule);
        Pipeline q = reduce_with(c1, c2p, col1, col2, schedule);
        pair.base = std::move(p.reduced);
        pair.base_plan = std::move(p.plan);
        pair.modified = std::move(q.reduced);
        pair.modified_plan = std::move(q.plan);
    }

    const QubitLayout& lay = pair.base_plan.layout;
    const QubitLayout& layp = pair.modified_plan.layout;

    std::set<std::size_t> dropped(bits.begin(), bits.end());
    std::vector<std::size_t> surviving_cols;       // old bit-column -> position among survivors
    std::vector<long> new_col_of(lay.n2, -1);
    for (std::size_t j = 0; j < lay.n2; ++j) {
        if (!dropped.count(j)) {
            new_col_of[j] = static_cast<long>(surviving_cols.size());
            surviving_cols.push_back(j);
        }
    }

    // Grid inclusion Q' -> Q.
    auto grid_from_punc = [&](std::size_t gp) {
        if (layp.is_bit_type(gp)) {
            std::size_t i = layp.grid_row(gp), jp = layp.grid_col(gp);
            return lay.bit_index(i, surviving_cols[jp]);
        }
        return lay.check_index(layp.grid_row(gp), layp.grid_col(gp));
    };

    // gamma_q: Q~' -> Q~, inclusion of the punctured kept qubits into the base.
    std::map<std::size_t, std::size_t> kept_base_pos;
    for (std::size_t t = 0; t < pair.base_plan.kept.size(); ++t)
        kept_base_pos[pair.base_plan.kept[t]] = t;
    BitMatrix gamma_q(pair.base_plan.kept.size(), pair.modified_plan.kept.size());
    for (std::size_t tp = 0; tp < pair.modified_plan.kept.size(); ++tp) {
        auto it = kept_base_pos.find(grid_from_punc(pair.modified_plan.kept[tp]));
        if (it == kept_base_pos.end())
            throw std::logic_error("build_punc_chain_map: punctured kept qubit missing in base");
        gamma_q.set(it->second, tp, true);
    }

    // gamma_x: S~_X(punc) -> S~_X(base). Surviving passthrough checks embed by
    // index; each shortened star expresses its rows (zero-padded back to the
    // full star positions) inside the rowspace of the base star's transform.
    auto x_check_survives = [&](std::size_t x) { return new_col_of[x % lay.n2] >= 0; };
    auto x_to_punc = [&](std::size_t x) {
        std::size_t a = x / lay.n2, j = x % lay.n2;
        return a * layp.n2 + static_cast<std::size_t>(new_col_of[j]);
    };

    BitMatrix gamma_x(pair.base.hx.rows(), pair.modified.hx.rows());
    auto punc_lookup = row_lookup(pair.modified_plan.new_x_rows);
    for (std::size_t r = 0; r < pair.base_plan.new_x_rows.size(); ++r) {
        const auto& combo = pair.base_plan.new_x_rows[r];
        if (combo.size() != 1) continue;   // star rows handled per star below
        if (!x_check_survives(combo[0])) continue;
        auto it = punc_lookup.find({x_to_punc(combo[0])});
        if (it == punc_lookup.end())
            throw std::logic_error("build_punc_chain_map: passthrough X check missing");
        gamma_x.set(r, it->second, true);
    }

    std::map<std::size_t, const CombinationStar*> punc_star_of_qubit;
    for (const auto& star : pair.modified_plan.x_stars) {
        std::size_t g = grid_from_punc(star.qubit);
        punc_star_of_qubit[g] = &star;
    }
    for (const auto& star : pair.base_plan.x_stars) {
        auto rows = star_rows(pair.base_plan.new_x_rows, star.checks);
        auto itq = punc_star_of_qubit.find(star.qubit);
        if (itq == punc_star_of_qubit.end())
            throw std::logic_error("build_punc_chain_map: star lost its qubit");
        const CombinationStar& pstar = *itq->second;
        auto prows = star_rows(pair.modified_plan.new_x_rows, pstar.checks);

        std::size_t delta = star.checks.size();
        std::size_t delta_p = pstar.checks.size();
        if (delta_p == 0)
            throw std::logic_error("build_punc_chain_map: star emptied, rank lemma violated");
        if (delta_p <= 1) continue;   // w' is empty, nothing to map

        // Surviving positions of the punctured star inside the base star.
        std::vector<std::size_t> positions;
        {
            std::map<std::size_t, std::size_t> base_pos;
            for (std::size_t u = 0; u < delta; ++u) base_pos[star.checks[u]] = u;
            for (std::size_t c : pstar.checks) {
                // Invert the index shift to find the base check.
                std::size_t a = c / layp.n2, jp = c % layp.n2;
                std::size_t base_check = a * lay.n2 + surviving_cols[jp];
                positions.push_back(base_pos.at(base_check));
            }
        }

        BitMatrix w = local_repetition_transform(delta);
        BitMatrix w_padded(delta_p - 1, delta);
        for (std::size_t t = 0; t + 1 < delta_p; ++t) {
            w_padded.set(t, positions[t], true);
            w_padded.set(t, positions[t + 1], true);
        }
        BitMatrix local = solve_rows(w, w_padded);   // (delta_p - 1) x (delta - 1)
        for (std::size_t t = 0; t < prows.size(); ++t)
            for (std::size_t u = 0; u < rows.size(); ++u)
                if (local.get(t, u)) gamma_x.set(rows[u], prows[t], true);
    }

    // Z-checks and their combinations are untouched by a second-code puncture.
    if (pair.base_plan.new_z_rows != pair.modified_plan.new_z_rows)
        throw std::logic_error("build_punc_chain_map: Z combination rows diverged");
    BitMatrix gamma_z = BitMatrix::identity(pair.base.hz.rows());

    // Selection matrices agree through the maps: V' = P V gamma_q with P the
    // unreduced projection Q -> Q'.
    BitMatrix projection(layp.num_qubits(), lay.num_qubits());
    for (std::size_t gp = 0; gp < layp.num_qubits(); ++gp)
        projection.set(gp, grid_from_punc(gp), true);
    BitMatrix expected = matmul(matmul(projection, pair.base_plan.v), gamma_q);
    if (!(expected == pair.modified_plan.v))
        throw std::logic_error("build_punc_chain_map: qubit-selection relation violated");

    pair.map = {std::move(gamma_x), std::move(gamma_q), std::move(gamma_z)};
    if (!verify_chain_map(pair.map, pair.modified, pair.base))
        throw std::logic_error("build_punc_chain_map: commuting squares violated");
    return pair;
}

}  // namespace hgpred

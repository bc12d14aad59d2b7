#include "hgpred/reducer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hgpred {

BitMatrix local_repetition_transform(std::size_t delta) {
    if (delta == 0)
        throw std::logic_error("local_repetition_transform: empty star cannot occur");
    BitMatrix w(delta - 1, delta);
    for (std::size_t t = 0; t + 1 < delta; ++t) {
        w.set(t, t, true);
        w.set(t, t + 1, true);
    }
    return w;
}

std::uint64_t ReductionPlan::fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t x : {wx.fingerprint(), wz.fingerprint(), v.fingerprint()}) {
        h ^= x;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

// Neighboring X-checks of check-type qubit (a, b): (a, j) for j in supp(H2 row b).
// Neighboring Z-checks: (i, b) for i in supp(H1 row a). Supports are recovered
// from the product matrices so the reducer needs no access to the input codes.
std::vector<std::size_t> x_star_checks(const CssCode& code, std::size_t grid_qubit) {
    std::vector<std::size_t> checks;
    for (std::size_t r = 0; r < code.hx.rows(); ++r)
        if (code.hx.get(r, grid_qubit)) checks.push_back(r);
    return checks;
}

std::vector<std::size_t> z_star_checks(const CssCode& code, std::size_t grid_qubit) {
    std::vector<std::size_t> checks;
    for (std::size_t r = 0; r < code.hz.rows(); ++r)
        if (code.hz.get(r, grid_qubit)) checks.push_back(r);
    return checks;
}

// W rows: walk the original checks in order; the first member of a star emits
// that star's repetition rows, later members are skipped, untouched checks
// pass through as identity rows.
BitMatrix assemble_w(std::size_t num_checks, const std::vector<CombinationStar>& stars,
                     std::vector<std::vector<std::size_t>>& new_rows) {
    std::vector<long> star_of_check(num_checks, -1);
    for (std::size_t s = 0; s < stars.size(); ++s) {
        for (std::size_t c : stars[s].checks) {
            if (star_of_check[c] != -1)
                throw std::logic_error("build_reduction: a check belongs to two stars");
            star_of_check[c] = static_cast<long>(s);
        }
    }

    new_rows.clear();
    std::vector<bool> star_emitted(stars.size(), false);
    for (std::size_t c = 0; c < num_checks; ++c) {
        long s = star_of_check[c];
        if (s < 0) {
            new_rows.push_back({c});
        } else if (!star_emitted[s]) {
            star_emitted[s] = true;
            const auto& checks = stars[s].checks;
            for (std::size_t t = 0; t + 1 < checks.size(); ++t)
                new_rows.push_back({checks[t], checks[t + 1]});
        }
    }

    BitMatrix w(new_rows.size(), num_checks);
    for (std::size_t r = 0; r < new_rows.size(); ++r)
        for (std::size_t c : new_rows[r]) w.set(r, c, true);
    return w;
}

}  // namespace

ReductionPlan build_reduction(const CssCode& code, const ProductColoring& pc,
                              const CombinationSchedule& schedule) {
    if (!schedule.feasible(pc.chi1, pc.chi2))
        throw std::invalid_argument("build_reduction: schedule violates the matching constraints");
    if (code.qubit_grid.size() != code.layout.num_qubits())
        throw std::invalid_argument("build_reduction: expected an unreduced product code");

    ReductionPlan plan;
    plan.schedule = schedule;
    plan.layout = code.layout;

    std::set<std::size_t> removed;
    for (const auto& [i, j] : schedule.x_groups) {
        for (std::size_t q : pc.group(i, j)) {
            auto checks = x_star_checks(code, q);
            if (checks.empty()) throw std::logic_error("build_reduction: empty X star");
            plan.x_stars.push_back({q, std::move(checks)});
            removed.insert(q);
        }
    }
    for (const auto& [i, j] : schedule.z_groups) {
        for (std::size_t q : pc.group(i, j)) {
            auto checks = z_star_checks(code, q);
            if (checks.empty()) throw std::logic_error("build_reduction: empty Z star");
            plan.z_stars.push_back({q, std::move(checks)});
            if (!removed.insert(q).second)
                throw std::logic_error("build_reduction: qubit scheduled on both sides");
        }
    }

    plan.removed.assign(removed.begin(), removed.end());
    for (std::size_t q = 0; q < code.layout.num_qubits(); ++q)
        if (!removed.count(q)) plan.kept.push_back(q);

    plan.wx = assemble_w(code.hx.rows(), plan.x_stars, plan.new_x_rows);
    plan.wz = assemble_w(code.hz.rows(), plan.z_stars, plan.new_z_rows);

    plan.v = BitMatrix(code.layout.num_qubits(), plan.kept.size());
    for (std::size_t t = 0; t < plan.kept.size(); ++t) plan.v.set(plan.kept[t], t, true);

    // Combined checks must have no support left on the qubits they clean.
    BitMatrix wx_hx = matmul(plan.wx, code.hx);
    for (const auto& star : plan.x_stars)
        for (std::size_t r = 0; r < wx_hx.rows(); ++r)
            if (wx_hx.get(r, star.qubit))
                throw std::logic_error("build_reduction: X support not cleaned off a removed qubit");
    BitMatrix wz_hz = matmul(plan.wz, code.hz);
    for (const auto& star : plan.z_stars)
        for (std::size_t r = 0; r < wz_hz.rows(); ++r)
            if (wz_hz.get(r, star.qubit))
                throw std::logic_error("build_reduction: Z support not cleaned off a removed qubit");

    return plan;
}

CssCode apply_reduction(const CssCode& code, const ReductionPlan& plan) {
    if (plan.v.rows() != code.n())
        throw std::invalid_argument("apply_reduction: plan does not match the code");

    CssCode reduced;
    reduced.hx = matmul(matmul(plan.wx, code.hx), plan.v);
    reduced.hz = matmul(matmul(plan.wz, code.hz), plan.v);
    reduced.layout = plan.layout;
    reduced.qubit_grid = plan.kept;
    reduced.name = code.name + "/reduced";
    reduced.dx = code.dx;
    reduced.dz = code.dz;

    if (!matmul(reduced.hx, transpose(reduced.hz)).is_zero())
        throw std::logic_error("apply_reduction: CSS condition broken by the reduction");

    if (code.logical_x && code.logical_z) {
        reduced.logical_x = col_select(*code.logical_x, plan.kept);
        reduced.logical_z = col_select(*code.logical_z, plan.kept);
    }
    return reduced;
}

WeightReport weight_report(const CssCode& before, const CssCode& after) {
    WeightReport report;
    auto [wq_b, wc_b] = css_weights(before);
    auto [wq_a, wc_a] = css_weights(after);
    report.wq_before = wq_b;
    report.wc_before = wc_b;
    report.wq_after = wq_a;
    report.wc_after = wc_a;
    report.n2q_before = count_two_qubit_gates(before);
    report.n2q_after = count_two_qubit_gates(after);
    if (report.wq_after > 2 * report.wq_before)
        throw std::logic_error("weight_report: qubit-degree doubling bound violated");
    if (report.wc_after > 2 * (report.wc_before - 1))
        throw std::logic_error("weight_report: check-weight doubling bound violated");
    return report;
}

std::int64_t cycle_savings_formula(std::int64_t v, std::int64_t delta) {
    return delta * (4 - delta) * (2 * v - 1) * (2 * v - 1);
}

}  // namespace hgpred

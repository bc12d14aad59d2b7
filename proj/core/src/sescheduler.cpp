#include "hgpred/sescheduler.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace hgpred {

namespace {

// Proper edge coloring of a bipartite graph with exactly max-degree colors:
// first-fit with alternating-path recoloring when the free palettes at the
// two endpoints are disjoint.
std::vector<std::size_t> bipartite_edge_coloring(
    std::size_t num_checks, std::size_t num_qubits,
    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::size_t> degree(num_checks + num_qubits, 0);
    for (const auto& [c, q] : edges) {
        ++degree[c];
        ++degree[num_checks + q];
    }
    std::size_t palette = 0;
    for (auto d : degree) palette = std::max(palette, d);

    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    // at[v][color] = edge currently holding this color at vertex v
    std::vector<std::vector<std::size_t>> at(num_checks + num_qubits,
                                             std::vector<std::size_t>(palette, kNone));
    std::vector<std::size_t> color(edges.size(), kNone);

    auto free_color = [&](std::size_t v) {
        for (std::size_t c = 0; c < palette; ++c)
            if (at[v][c] == kNone) return c;
        throw std::logic_error("edge coloring: no free color (degree bound broken)");
    };

    auto other_endpoint = [&](std::size_t f, std::size_t from) {
        std::size_t a = edges[f].first;
        std::size_t b = num_checks + edges[f].second;
        if (from == a) return b;
        if (from == b) return a;
        throw std::logic_error("edge coloring: path corrupted");
    };

    for (std::size_t e = 0; e < edges.size(); ++e) {
        std::size_t u = edges[e].first;
        std::size_t v = num_checks + edges[e].second;
        std::size_t alpha = free_color(u);
        std::size_t beta = free_color(v);
        if (alpha != beta && at[v][alpha] != kNone) {
            // Flip the alpha/beta alternating path starting at v; in a
            // bipartite graph it cannot reach u, so alpha frees up at v.
            std::vector<std::size_t> path;
            std::size_t walk = v;
            std::size_t want = alpha;
            while (at[walk][want] != kNone) {
                std::size_t f = at[walk][want];
                path.push_back(f);
                walk = other_endpoint(f, walk);
                want = want == alpha ? beta : alpha;
            }
            for (std::size_t f : path) {
                at[edges[f].first][color[f]] = kNone;
                at[num_checks + edges[f].second][color[f]] = kNone;
            }
            for (std::size_t f : path) {
                color[f] = color[f] == alpha ? beta : alpha;
                at[edges[f].first][color[f]] = f;
                at[num_checks + edges[f].second][color[f]] = f;
            }
        }
        color[e] = alpha;
        at[u][alpha] = e;
        at[v][alpha] = e;
    }
    return color;
}

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> rounds_from_coloring(
    const std::vector<std::pair<std::size_t, std::size_t>>& edges,
    const std::vector<std::size_t>& colors) {
    std::size_t num_colors = 0;
    for (auto c : colors) num_colors = std::max(num_colors, c + 1);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> rounds(num_colors);
    for (std::size_t e = 0; e < edges.size(); ++e) rounds[colors[e]].push_back(edges[e]);
    for (auto& round : rounds) std::sort(round.begin(), round.end());
    return rounds;
}

std::vector<std::pair<std::size_t, std::size_t>> matrix_edges(const BitMatrix& h) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t q : h.row_support(r)) edges.emplace_back(r, q);
    return edges;
}

}  // namespace

std::vector<std::size_t> CnotSchedule::coupling_order(Pauli basis, std::size_t check) const {
    const auto& rounds = basis == Pauli::X ? x_rounds : z_rounds;
    std::vector<std::size_t> order;
    for (const auto& round : rounds)
        for (const auto& [c, q] : round)
            if (c == check) order.push_back(q);
    return order;
}

bool schedule_valid(const CssCode& code, const CnotSchedule& schedule) {
    auto check_side = [](const BitMatrix& h, const auto& rounds) {
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (const auto& round : rounds) {
            std::set<std::size_t> checks, qubits;
            for (const auto& [c, q] : round) {
                if (!checks.insert(c).second || !qubits.insert(q).second) return false;
                if (c >= h.rows() || q >= h.cols() || !h.get(c, q)) return false;
                if (!seen.insert({c, q}).second) return false;
            }
        }
        return seen.size() == h.count_ones();
    };
    return check_side(code.hx, schedule.x_rounds) && check_side(code.hz, schedule.z_rounds);
}

CnotSchedule random_schedule(const CssCode& code, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CnotSchedule schedule;
    for (Pauli basis : {Pauli::X, Pauli::Z}) {
        const BitMatrix& h = basis == Pauli::X ? code.hx : code.hz;
        auto edges = matrix_edges(h);
        std::shuffle(edges.begin(), edges.end(), rng);
        auto colors = bipartite_edge_coloring(h.rows(), h.cols(), edges);
        auto rounds = rounds_from_coloring(edges, colors);
        (basis == Pauli::X ? schedule.x_rounds : schedule.z_rounds) = std::move(rounds);
    }
    return schedule;
}

namespace {

// Combined checks split their couplings into (first grid line, check-type
// rest, second grid line); lines are columns for X checks and rows for Z.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> split_side(
    const CssCode& reduced, const ReductionPlan& plan, Pauli basis) {
    const BitMatrix& h = basis == Pauli::X ? reduced.hx : reduced.hz;
    const auto& new_rows = basis == Pauli::X ? plan.new_x_rows : plan.new_z_rows;
    if (new_rows.size() != h.rows())
        throw std::invalid_argument("split schedule: plan does not match the reduced code");
    const QubitLayout& layout = plan.layout;
    std::size_t n2 = layout.n2;
    std::size_t m2 = layout.m2;

    auto line_of_old_check = [&](std::size_t old_check) {
        // X-check (a, j) sits in bit-type column j; Z-check (i, b) in row i.
        return basis == Pauli::X ? old_check % n2 : old_check / m2;
    };
    auto line_of_qubit = [&](std::size_t local) {
        std::size_t grid = reduced.qubit_grid[local];
        return basis == Pauli::X ? layout.grid_col(grid) : layout.grid_row(grid);
    };

    std::vector<std::pair<std::size_t, std::size_t>> phase1, phase2, phase3;
    for (std::size_t c = 0; c < h.rows(); ++c) {
        auto support = h.row_support(c);
        if (new_rows[c].size() == 1) {
            for (std::size_t q : support) phase1.emplace_back(c, q);
            continue;
        }
        std::size_t line1 = line_of_old_check(new_rows[c][0]);
        std::size_t line2 = line_of_old_check(new_rows[c][1]);
        if (line1 > line2) std::swap(line1, line2);
        std::size_t n_line1 = 0, n_line2 = 0;
        for (std::size_t q : support) {
            if (reduced.is_bit_type(q)) {
                std::size_t line = line_of_qubit(q);
                if (line == line1) {
                    phase1.emplace_back(c, q);
                    ++n_line1;
                } else if (line == line2) {
                    phase3.emplace_back(c, q);
                    ++n_line2;
                } else {
                    throw std::logic_error(
                        "split schedule: combined check spans more than two bit-type lines");
                }
            } else {
                phase2.emplace_back(c, q);
            }
        }
        if (n_line1 != n_line2)
            throw std::logic_error("split schedule: unbalanced combined-check lines");
    }

    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> rounds;
    for (auto* phase : {&phase1, &phase2, &phase3}) {
        if (phase->empty()) continue;
        auto colors = bipartite_edge_coloring(h.rows(), h.cols(), *phase);
        for (auto& round : rounds_from_coloring(*phase, colors)) rounds.push_back(std::move(round));
    }
    return rounds;
}

}  // namespace

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> split_x_schedule(
    const CssCode& reduced, const ReductionPlan& plan) {
    return split_side(reduced, plan, Pauli::X);
}

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> split_z_schedule(
    const CssCode& reduced, const ReductionPlan& plan) {
    return split_side(reduced, plan, Pauli::Z);
}

CnotSchedule split_schedule(const CssCode& reduced, const ReductionPlan& plan) {
    CnotSchedule schedule;
    schedule.x_rounds = split_x_schedule(reduced, plan);
    schedule.z_rounds = split_z_schedule(reduced, plan);
    return schedule;
}

std::vector<HookFault> enumerate_hooks(const CssCode& code, const CnotSchedule& schedule,
                                       Pauli basis) {
    const BitMatrix& h = basis == Pauli::X ? code.hx : code.hz;
    std::vector<HookFault> hooks;
    for (std::size_t c = 0; c < h.rows(); ++c) {
        auto order = schedule.coupling_order(basis, c);
        if (order.size() != h.row_weight(c))
            throw std::invalid_argument("enumerate_hooks: schedule does not cover the check");
        // Suffix sums: cut after position t leaves couplings t..end flipped.
        for (std::size_t t = 0; t <= order.size(); ++t) {
            BitVector residual(code.n());
            for (std::size_t s = t; s < order.size(); ++s) residual.flip(order[s]);
            hooks.push_back({c, t, std::move(residual)});
        }
    }
    return hooks;
}

std::size_t bit_line_count(const CssCode& code, const BitVector& v, Pauli basis) {
    SectorWeights w = sector_weights(code, v);
    return basis == Pauli::X ? w.cols_bit : w.rows_bit;
}

BitVector reduce_residual(const CssCode& code, const BitVector& residual, Pauli basis) {
    const BitMatrix& stabilizers = basis == Pauli::X ? code.hx : code.hz;
    BitVector best = residual;
    auto key = [&](const BitVector& v) {
        return std::make_pair(bit_line_count(code, v, basis), v.weight());
    };
    auto best_key = key(best);
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t r = 0; r < stabilizers.rows(); ++r) {
            BitVector candidate = best;
            const std::uint64_t* s = stabilizers.row_words(r);
            for (std::size_t w = 0; w < candidate.words().size(); ++w) candidate.words()[w] ^= s[w];
            auto ck = key(candidate);
            if (ck < best_key) {
                best = std::move(candidate);
                best_key = ck;
                improved = true;
            }
        }
    }
    return best;
}

BitLineOracle::BitLineOracle(const CssCode& code, Pauli basis) : code_(code), basis_(basis) {
    const BitMatrix& h = basis == Pauli::X ? code.hx : code.hz;
    const QubitLayout& layout = code.layout;
    for (std::size_t q = 0; q < code.n(); ++q)
        if (code.is_bit_type(q)) bit_cols_.push_back(q);
    num_lines_ = basis == Pauli::X ? layout.n2 : layout.n1;

    BitMatrix h_bit = col_select(h, bit_cols_);
    for (std::size_t line = 0; line < num_lines_; ++line) {
        BitMatrix units(basis == Pauli::X ? layout.n1 : layout.n2, bit_cols_.size());
        std::size_t count = 0;
        for (std::size_t local = 0; local < bit_cols_.size(); ++local) {
            std::size_t grid = code.qubit_grid[bit_cols_[local]];
            std::size_t l = basis == Pauli::X ? layout.grid_col(grid) : layout.grid_row(grid);
            if (l == line) units.set(count++, local, true);
        }
        line_spaces_.emplace_back(vstack(h_bit, units));
    }
}

bool BitLineOracle::at_most_one_line(const BitVector& residual) const {
    BitVector restricted = select(residual, bit_cols_);
    if (restricted.is_zero()) return true;
    for (const auto& space : line_spaces_)
        if (space.contains(restricted)) return true;
    return false;
}

ProbeResult effective_distance_probe(const CssCode& code, const CnotSchedule& schedule,
                                     std::size_t cap, Pauli basis) {
    ProbeResult result;
    if (cap == 0) return result;

    const BitMatrix& h_same = basis == Pauli::X ? code.hx : code.hz;
    const BitMatrix& h_other = basis == Pauli::X ? code.hz : code.hx;

    // Candidate single faults: every ancilla hook plus every single data error.
    std::vector<BitVector> residuals;
    for (auto& hook : enumerate_hooks(code, schedule, basis))
        residuals.push_back(std::move(hook.residual));
    for (std::size_t q = 0; q < code.n(); ++q) residuals.push_back(BitVector::unit(code.n(), q));

    RowSpace same_space(h_same);
    std::vector<BitVector> syndromes;
    syndromes.reserve(residuals.size());
    for (const auto& r : residuals) syndromes.push_back(matvec(h_other, r));

    auto nontrivial = [&](const BitVector& x) { return !x.is_zero() && !same_space.contains(x); };

    for (std::size_t i = 0; i < residuals.size(); ++i) {
        if (syndromes[i].is_zero() && nontrivial(residuals[i])) {
            result.violation_found = true;
            result.weight = 1;
            result.fault_ids = {i};
            return result;
        }
    }
    if (cap == 1) return result;

    std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < residuals.size(); ++i) buckets[syndromes[i].words()].push_back(i);

    for (std::size_t i = 0; i < residuals.size(); ++i) {
        auto it = buckets.find(syndromes[i].words());
        if (it == buckets.end()) continue;
        for (std::size_t j : it->second) {
            if (j <= i) continue;
            BitVector x = residuals[i];
            x.xor_with(residuals[j]);
            if (nontrivial(x)) {
                result.violation_found = true;
                result.weight = 2;
                result.fault_ids = {i, j};
                return result;
            }
        }
    }
    if (cap == 2) return result;
    if (cap > 3) throw std::invalid_argument("effective_distance_probe: cap above 3 unsupported");

    for (std::size_t i = 0; i < residuals.size(); ++i) {
        for (std::size_t j = i + 1; j < residuals.size(); ++j) {
            BitVector target = syndromes[i];
            target.xor_with(syndromes[j]);
            auto it = buckets.find(target.words());
            if (it == buckets.end()) continue;
            for (std::size_t k : it->second) {
                if (k <= j || k == i) continue;
                BitVector x = residuals[i];
                x.xor_with(residuals[j]);
                x.xor_with(residuals[k]);
                if (nontrivial(x)) {
                    result.violation_found = true;
                    result.weight = 3;
                    result.fault_ids = {i, j, k};
                    return result;
                }
            }
        }
    }
    return result;
}

}  // namespace hgpred

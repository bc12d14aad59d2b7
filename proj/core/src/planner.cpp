#include "hgpred/planner.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "hgpred/matching.hpp"
#include "hgpred/reducer.hpp"

namespace hgpred {

bool CombinationSchedule::feasible(std::size_t chi1, std::size_t chi2) const {
    std::set<std::size_t> x_rows, z_cols;
    std::set<std::pair<std::size_t, std::size_t>> x_set(x_groups.begin(), x_groups.end());
    for (const auto& [i, j] : x_groups) {
        if (i >= chi1 || j >= chi2) return false;
        if (!x_rows.insert(i).second) return false;
    }
    for (const auto& [i, j] : z_groups) {
        if (i >= chi1 || j >= chi2) return false;
        if (!z_cols.insert(j).second) return false;
        if (x_set.count({i, j})) return false;
    }
    return true;
}

MatchingGraph build_matching_graph(const ProductColoring& pc) {
    MatchingGraph g;
    g.chi1 = pc.chi1;
    g.chi2 = pc.chi2;
    for (std::size_t i = 0; i < pc.chi1; ++i) {
        for (std::size_t j = 0; j < pc.chi2; ++j) {
            std::int64_t w = static_cast<std::int64_t>(pc.group_size(i, j));
            if (w == 0) continue;
            g.edges.push_back({i, i * pc.chi2 + j, w});                // X_i edge
            g.edges.push_back({pc.chi1 + j, i * pc.chi2 + j, w});      // Z_j edge
        }
    }
    return g;
}

namespace {

// Hungarian algorithm (potentials + shortest augmenting paths) for a square
// min-cost assignment; costs must be non-negative.
std::int64_t hungarian_min_assignment(const std::vector<std::vector<std::int64_t>>& cost) {
    std::size_t n = cost.size();
    if (n == 0) return 0;
    const std::int64_t INF = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<std::int64_t> minv(n + 1, INF);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            std::size_t i0 = p[j0], j1 = 0;
            std::int64_t delta = INF;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                std::int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::int64_t total = 0;
    for (std::size_t j = 1; j <= n; ++j)
        if (p[j] != 0) total += cost[p[j] - 1][j - 1];
    return total;
}

}  // namespace

std::int64_t max_matching_weight(const MatchingGraph& g,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& forced) {
    std::set<std::size_t> used_left, used_right;
    std::int64_t forced_weight = 0;
    for (const auto& [l, r] : forced) {
        bool found = false;
        for (const auto& e : g.edges) {
            if (e.left == l && e.right == r) {
                forced_weight += e.weight;
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("max_matching_weight: forced edge absent");
        if (!used_left.insert(l).second || !used_right.insert(r).second)
            throw std::invalid_argument("max_matching_weight: forced edges collide");
    }

    std::vector<std::size_t> lefts, rights;
    for (std::size_t l = 0; l < g.num_left(); ++l)
        if (!used_left.count(l)) lefts.push_back(l);
    for (std::size_t r = 0; r < g.num_right(); ++r)
        if (!used_right.count(r)) rights.push_back(r);

    std::size_t n = std::max(lefts.size(), rights.size());
    if (n == 0) return forced_weight;
    std::map<std::size_t, std::size_t> lpos, rpos;
    for (std::size_t i = 0; i < lefts.size(); ++i) lpos[lefts[i]] = i;
    for (std::size_t i = 0; i < rights.size(); ++i) rpos[rights[i]] = i;

    std::int64_t maxw = 0;
    for (const auto& e : g.edges) maxw = std::max(maxw, e.weight);
    std::vector<std::vector<std::int64_t>> cost(n, std::vector<std::int64_t>(n, maxw));
    for (const auto& e : g.edges) {
        auto li = lpos.find(e.left);
        auto ri = rpos.find(e.right);
        if (li == lpos.end() || ri == rpos.end()) continue;
        cost[li->second][ri->second] = maxw - e.weight;
    }
    std::int64_t min_cost = hungarian_min_assignment(cost);
    return forced_weight + static_cast<std::int64_t>(n) * maxw - min_cost;
}

Matching max_weight_matching(const MatchingGraph& g) {
    // Node ids by first appearance in the edge stream, so the primal-dual
    // matcher sees the graph exactly as built (its optimum among ties depends
    // on this order; the frozen fixtures in the acceptance suite pin it).
    std::map<std::pair<int, std::size_t>, std::size_t> ids;
    std::vector<std::pair<int, std::size_t>> names;
    auto id_of = [&](int side, std::size_t idx) {
        auto key = std::make_pair(side, idx);
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        std::size_t id = names.size();
        ids.emplace(key, id);
        names.push_back(key);
        return id;
    };
    std::vector<WeightedEdge> edges;
    for (const auto& e : g.edges) {
        std::size_t u = id_of(0, e.left);
        std::size_t v = id_of(1, e.right);
        edges.push_back({u, v, e.weight});
    }

    auto mate = max_weight_matching_bipartite(names.size(), edges);
    Matching m;
    for (std::size_t u = 0; u < mate.size(); ++u) {
        if (mate[u] == kUnmatched || names[u].first != 0) continue;
        std::size_t left = names[u].second;
        std::size_t right = names[mate[u]].second;
        for (const auto& e : g.edges) {
            if (e.left == left && e.right == right) {
                m.edges.emplace_back(left, right);
                m.weight += e.weight;
                break;
            }
        }
    }
    std::sort(m.edges.begin(), m.edges.end());

    // Independent optimality cross-check via the Hungarian route.
    if (m.weight != max_matching_weight(g))
        throw std::logic_error("max_weight_matching: optimum disagrees with the Hungarian bound");
    return m;
}

CombinationSchedule choose_schedule(const ProductColoring& pc) {
    MatchingGraph g = build_matching_graph(pc);
    Matching m = max_weight_matching(g);
    CombinationSchedule schedule;
    for (const auto& [left, right] : m.edges) {
        std::size_t i = right / pc.chi2;
        std::size_t j = right % pc.chi2;
        if (left < pc.chi1) schedule.x_groups.emplace_back(i, j);
        else schedule.z_groups.emplace_back(i, j);
    }
    std::sort(schedule.x_groups.begin(), schedule.x_groups.end());
    std::sort(schedule.z_groups.begin(), schedule.z_groups.end());
    if (!schedule.feasible(pc.chi1, pc.chi2))
        throw std::logic_error("choose_schedule: matching produced an infeasible schedule");
    return schedule;
}

std::size_t removed_count(const ProductColoring& pc, const CombinationSchedule& schedule) {
    std::size_t total = 0;
    for (const auto& [i, j] : schedule.x_groups) total += pc.group_size(i, j);
    for (const auto& [i, j] : schedule.z_groups) total += pc.group_size(i, j);
    return total;
}

CombinationSchedule fold_symmetric_schedule(const ProductColoring& pc) {
    if (pc.chi1 != pc.chi2)
        throw std::invalid_argument("fold_symmetric_schedule: product coloring is not symmetric");
    std::size_t chi = pc.chi1;

    // Mirror pairing forces X on (i,j) together with Z on (j,i); the pair
    // consumes both the X-row and the Z-column of index i. Match indices [chi]
    // against unordered off-diagonal pairs {i,j}: matching (a, {i,j}) with
    // a = i means X on (i,j), with a = j means X on (j,i). Diagonal groups are
    // never offered.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < chi; ++i)
        for (std::size_t j = i + 1; j < chi; ++j) pairs.emplace_back(i, j);

    std::vector<MatchingGraph::Edge> edges;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        auto [i, j] = pairs[p];
        std::int64_t w = static_cast<std::int64_t>(pc.group_size(i, j) + pc.group_size(j, i));
        if (w == 0) continue;
        edges.push_back({i, p, w});
        edges.push_back({j, p, w});
    }

    std::size_t num_left = chi;
    std::size_t num_right = pairs.size();
    auto weight_with = [&](const std::vector<std::pair<std::size_t, std::size_t>>& forced)
        -> std::int64_t {
        std::set<std::size_t> ul, ur;
        std::int64_t fw = 0;
        for (const auto& [l, r] : forced) {
            std::int64_t w = -1;
            for (const auto& e : edges)
                if (e.left == l && e.right == r) w = e.weight;
            if (w < 0) return std::numeric_limits<std::int64_t>::min();
            if (!ul.insert(l).second || !ur.insert(r).second)
                return std::numeric_limits<std::int64_t>::min();
            fw += w;
        }
        std::vector<std::size_t> lefts, rights;
        for (std::size_t l = 0; l < num_left; ++l)
            if (!ul.count(l)) lefts.push_back(l);
        for (std::size_t r = 0; r < num_right; ++r)
            if (!ur.count(r)) rights.push_back(r);
        std::size_t n = std::max(lefts.size(), rights.size());
        if (n == 0) return fw;
        std::map<std::size_t, std::size_t> lpos, rpos;
        for (std::size_t i = 0; i < lefts.size(); ++i) lpos[lefts[i]] = i;
        for (std::size_t i = 0; i < rights.size(); ++i) rpos[rights[i]] = i;
        std::int64_t maxw = 0;
        for (const auto& e : edges) maxw = std::max(maxw, e.weight);
        std::vector<std::vector<std::int64_t>> cost(n, std::vector<std::int64_t>(n, maxw));
        for (const auto& e : edges) {
            auto li = lpos.find(e.left);
            auto ri = rpos.find(e.right);
            if (li == lpos.end() || ri == rpos.end()) continue;
            cost[li->second][ri->second] = maxw - e.weight;
        }
        return fw + static_cast<std::int64_t>(n) * maxw - hungarian_min_assignment(cost);
    };

    std::int64_t opt = weight_with({});
    std::vector<MatchingGraph::Edge> ordered = edges;
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        return std::tie(a.left, a.right) < std::tie(b.left, b.right);
    });
    std::vector<std::pair<std::size_t, std::size_t>> fixed;
    std::set<std::size_t> ul, ur;
    for (const auto& e : ordered) {
        if (ul.count(e.left) || ur.count(e.right)) continue;
        auto candidate = fixed;
        candidate.emplace_back(e.left, e.right);
        if (weight_with(candidate) == opt) {
            fixed = std::move(candidate);
            ul.insert(e.left);
            ur.insert(e.right);
        }
    }

    CombinationSchedule schedule;
    for (const auto& [a, p] : fixed) {
        auto [i, j] = pairs[p];
        if (a == i) {
            schedule.x_groups.emplace_back(i, j);
            schedule.z_groups.emplace_back(j, i);
        } else {
            schedule.x_groups.emplace_back(j, i);
            schedule.z_groups.emplace_back(i, j);
        }
    }
    std::sort(schedule.x_groups.begin(), schedule.x_groups.end());
    std::sort(schedule.z_groups.begin(), schedule.z_groups.end());
    if (!schedule.feasible(pc.chi1, pc.chi2))
        throw std::logic_error("fold_symmetric_schedule: infeasible schedule");
    return schedule;
}

namespace {

bool is_permutation(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    for (std::size_t x : p) {
        if (x >= p.size() || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

BitMatrix permutation_matrix(const Permutation& p) {
    // Column q has its 1 at row p[q]: P e_q = e_{p(q)}.
    BitMatrix m(p.size(), p.size());
    for (std::size_t q = 0; q < p.size(); ++q) m.set(p[q], q, true);
    return m;
}

Permutation tensor_permutation(const Permutation& a, const Permutation& b) {
    Permutation out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b.size() + b[j];
    return out;
}

// Row image under a column permutation: maps row-index sets through perm and
// finds the unique matching row of m; returns false if any image is missing.
bool induced_row_permutation(const BitMatrix& m, const Permutation& col_perm, Permutation& out) {
    std::map<std::vector<std::size_t>, std::size_t> row_lookup;
    for (std::size_t r = 0; r < m.rows(); ++r) row_lookup[m.row_support(r)] = r;
    out.assign(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<std::size_t> image;
        for (std::size_t c : m.row_support(r)) image.push_back(col_perm[c]);
        std::sort(image.begin(), image.end());
        auto it = row_lookup.find(image);
        if (it == row_lookup.end()) return false;
        out[r] = it->second;
    }
    return is_permutation(out);
}

}  // namespace

bool verify_equivariance(const ClassicalCode& c1, const ClassicalCode& c2,
                         const ReductionPlan& plan, const Permutation& sigma1,
                         const Permutation& tau1, const Permutation& sigma2,
                         const Permutation& tau2) {
    if (!is_permutation(sigma1) || !is_permutation(tau1) || !is_permutation(sigma2) ||
        !is_permutation(tau2))
        throw std::invalid_argument("verify_equivariance: inputs are not permutations");
    if (sigma1.size() != c1.n() || tau1.size() != c1.num_checks() || sigma2.size() != c2.n() ||
        tau2.size() != c2.num_checks())
        throw std::invalid_argument("verify_equivariance: permutation sizes do not match codes");

    // Classical Tanner automorphism condition: tau H = H sigma.
    auto classical_ok = [](const ClassicalCode& c, const Permutation& tau, const Permutation& sigma) {
        return matmul(permutation_matrix(tau), c.h()) == matmul(c.h(), permutation_matrix(sigma));
    };
    if (!classical_ok(c1, tau1, sigma1) || !classical_ok(c2, tau2, sigma2))
        throw std::invalid_argument("verify_equivariance: not classical Tanner automorphisms");

    const QubitLayout& layout = plan.layout;
    // Qubit permutation Sigma = (sigma1 x sigma2) + (tau1 x tau2) on the grid.
    Permutation sigma_bits = tensor_permutation(sigma1, sigma2);
    Permutation sigma_checks = tensor_permutation(tau1, tau2);
    Permutation Sigma(layout.num_qubits());
    for (std::size_t q = 0; q < layout.num_bit_type(); ++q) Sigma[q] = sigma_bits[q];
    for (std::size_t q = 0; q < layout.m1 * layout.m2; ++q)
        Sigma[layout.num_bit_type() + q] = layout.num_bit_type() + sigma_checks[q];
    Permutation t_x = tensor_permutation(tau1, sigma2);    // X-checks (c1, b2)
    Permutation t_z = tensor_permutation(sigma1, tau2);    // Z-checks (b1, c2)

    // Removed set must be an orbit union, i.e. Sigma-invariant.
    std::set<std::size_t> removed(plan.removed.begin(), plan.removed.end());
    for (std::size_t q : plan.removed)
        if (!removed.count(Sigma[q])) return false;

    // Induced kept-qubit permutation: V Sigma~ = Sigma V.
    std::map<std::size_t, std::size_t> kept_pos;
    for (std::size_t t = 0; t < plan.kept.size(); ++t) kept_pos[plan.kept[t]] = t;
    Permutation sigma_red(plan.kept.size());
    for (std::size_t t = 0; t < plan.kept.size(); ++t) {
        auto it = kept_pos.find(Sigma[plan.kept[t]]);
        if (it == kept_pos.end()) return false;
        sigma_red[t] = it->second;
    }
    if (!is_permutation(sigma_red)) return false;

    // Induced check permutations: T~ W = W T, solved by mapping each W row
    // (a subset of old checks) through T and locating it among the rows.
    Permutation tx_red, tz_red;
    if (!induced_row_permutation(plan.wx, t_x, tx_red)) return false;
    if (!induced_row_permutation(plan.wz, t_z, tz_red)) return false;

    if (!(matmul(plan.v, permutation_matrix(sigma_red)) ==
          matmul(permutation_matrix(Sigma), plan.v)))
        return false;
    if (!(matmul(permutation_matrix(tx_red), plan.wx) ==
          matmul(plan.wx, permutation_matrix(t_x))))
        return false;
    if (!(matmul(permutation_matrix(tz_red), plan.wz) ==
          matmul(plan.wz, permutation_matrix(t_z))))
        return false;
    return true;
}

}  // namespace hgpred

#include "hgpred/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace hgpred {

std::vector<std::vector<std::size_t>> CheckColoring::groups() const {
    std::vector<std::vector<std::size_t>> out(num_colors);
    for (std::size_t c = 0; c < color_of.size(); ++c) out[color_of[c]].push_back(c);
    return out;
}

std::vector<std::size_t> CheckColoring::class_sizes() const {
    std::vector<std::size_t> sizes(num_colors, 0);
    for (std::size_t c : color_of) ++sizes[c];
    return sizes;
}

SimpleGraph check_adjacency_graph(const ClassicalCode& code) {
    const BitMatrix& h = code.h();
    SimpleGraph g(h.rows());
    std::size_t wpr = h.words_per_row();
    for (std::size_t a = 0; a < h.rows(); ++a) {
        const std::uint64_t* ra = h.row_words(a);
        for (std::size_t b = a + 1; b < h.rows(); ++b) {
            const std::uint64_t* rb = h.row_words(b);
            for (std::size_t w = 0; w < wpr; ++w) {
                if (ra[w] & rb[w]) {
                    g.add_edge(a, b);
                    break;
                }
            }
        }
    }
    return g;
}

CheckColoring greedy_color(const SimpleGraph& g, std::uint64_t order_seed) {
    std::size_t n = g.num_vertices();
    std::vector<std::size_t> tie_break(n);
    std::iota(tie_break.begin(), tie_break.end(), std::size_t{0});
    if (order_seed != 0) {
        std::mt19937_64 rng(order_seed);
        std::shuffle(tie_break.begin(), tie_break.end(), rng);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return tie_break[a] < tie_break[b];
    });

    constexpr std::size_t kUncolored = static_cast<std::size_t>(-1);
    CheckColoring coloring;
    coloring.color_of.assign(n, kUncolored);
    std::size_t colored = 0;
    while (colored < n) {
        std::size_t color = coloring.num_colors++;
        for (std::size_t v : order) {
            if (coloring.color_of[v] != kUncolored) continue;
            bool blocked = false;
            for (std::size_t u : g.neighbors(v)) {
                if (coloring.color_of[u] == color) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) {
                coloring.color_of[v] = color;
                ++colored;
            }
        }
    }
    return coloring;
}

bool is_valid_coloring(const SimpleGraph& g, const CheckColoring& coloring) {
    if (coloring.color_of.size() != g.num_vertices()) return false;
    for (const auto& [u, v] : g.edges())
        if (coloring.color_of[u] == coloring.color_of[v]) return false;
    return true;
}

std::size_t ProductColoring::total_qubits() const {
    std::size_t total = 0;
    for (const auto& grp : groups) total += grp.size();
    return total;
}

ProductColoring product_coloring(const CheckColoring& col1, const CheckColoring& col2,
                                 const QubitLayout& layout) {
    if (col1.color_of.size() != layout.m1 || col2.color_of.size() != layout.m2)
        throw std::invalid_argument("product_coloring: coloring sizes do not match the layout");
    ProductColoring pc;
    pc.chi1 = col1.num_colors;
    pc.chi2 = col2.num_colors;
    pc.layout = layout;
    pc.groups.assign(pc.chi1 * pc.chi2, {});
    for (std::size_t a = 0; a < layout.m1; ++a)
        for (std::size_t b = 0; b < layout.m2; ++b)
            pc.groups[pc.group_index(col1.color_of[a], col2.color_of[b])].push_back(
                layout.check_index(a, b));
    return pc;
}

bool verify_product_coloring(const ProductColoring& pc, const ClassicalCode& c1,
                             const ClassicalCode& c2) {
    if (pc.total_qubits() != pc.layout.m1 * pc.layout.m2) return false;
    // Two check-type qubits (a,b), (a',b') share an X-check iff a = a' and the
    // H2 rows b, b' intersect; a Z-check iff b = b' and the H1 rows a, a' intersect.
    auto rows_intersect = [](const BitMatrix& h, std::size_t r1, std::size_t r2) {
        const std::uint64_t* a = h.row_words(r1);
        const std::uint64_t* b = h.row_words(r2);
        for (std::size_t w = 0; w < h.words_per_row(); ++w)
            if (a[w] & b[w]) return true;
        return false;
    };
    for (const auto& grp : pc.groups) {
        for (std::size_t i = 0; i < grp.size(); ++i) {
            std::size_t a1 = pc.layout.grid_row(grp[i]);
            std::size_t b1 = pc.layout.grid_col(grp[i]);
            for (std::size_t j = i + 1; j < grp.size(); ++j) {
                std::size_t a2 = pc.layout.grid_row(grp[j]);
                std::size_t b2 = pc.layout.grid_col(grp[j]);
                if (a1 == a2 && rows_intersect(c2.h(), b1, b2)) return false;
                if (b1 == b2 && rows_intersect(c1.h(), a1, a2)) return false;
            }
        }
    }
    return true;
}

CheckColoring lifted_coloring(const CheckColoring& proto_coloring, std::size_t lift,
                              const ClassicalCode& lifted) {
    std::size_t proto_checks = proto_coloring.color_of.size();
    if (proto_checks * lift != lifted.num_checks())
        throw std::invalid_argument("lifted_coloring: check counts do not match the lift");
    CheckColoring out;
    out.num_colors = proto_coloring.num_colors;
    out.color_of.resize(lifted.num_checks());
    for (std::size_t c = 0; c < proto_checks; ++c)
        for (std::size_t t = 0; t < lift; ++t)
            out.color_of[c * lift + t] = proto_coloring.color_of[c];
    if (!is_valid_coloring(check_adjacency_graph(lifted), out))
        throw std::invalid_argument("lifted_coloring: inherited coloring invalid (non-type-I lift?)");
    return out;
}

}  // namespace hgpred

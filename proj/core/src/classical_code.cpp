#include "hgpred/classical_code.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace hgpred {

ClassicalCode::ClassicalCode(BitMatrix h, std::string name)
    : h_(std::move(h)), name_(std::move(name)) {}

std::size_t ClassicalCode::rank() const {
    if (!rank_) rank_ = hgpred::rank(h_);
    return *rank_;
}

TannerGraph::TannerGraph(const BitMatrix& h)
    : num_bits(h.cols()), num_checks(h.rows()), check_support(h.rows()) {
    for (std::size_t c = 0; c < h.rows(); ++c) check_support[c] = h.row_support(c);
}

namespace {

// Depth-first search over supports of weight exactly w with partial-syndrome
// pruning: a column can only clear syndrome rows it touches.
bool support_search(const BitMatrix& h, std::size_t w, std::size_t first, BitVector& syndrome,
                    std::size_t depth, const std::vector<BitVector>& columns) {
    if (depth == w) return syndrome.is_zero();
    std::size_t remaining = w - depth;
    std::size_t max_col = h.max_col_weight();
    if (syndrome.weight() > remaining * max_col) return false;
    for (std::size_t c = first; c + remaining <= h.cols(); ++c) {
        syndrome.xor_with(columns[c]);
        if (support_search(h, w, c + 1, syndrome, depth + 1, columns)) return true;
        syndrome.xor_with(columns[c]);
    }
    return false;
}

}  // namespace

DistanceResult min_distance(const ClassicalCode& code, std::optional<std::size_t> weight_cap,
                            std::size_t enumeration_limit) {
    std::size_t k = code.k();
    if (k == 0) throw std::invalid_argument("min_distance: k = 0, distance undefined");

    if (k <= enumeration_limit) {
        CanonicalGenerator gen = canonical_generator(code);
        BitVector word(code.n());
        std::size_t best = code.n() + 1;
        std::uint64_t prev_gray = 0;
        for (std::uint64_t msg = 1; msg < (std::uint64_t(1) << k); ++msg) {
            std::uint64_t gray = msg ^ (msg >> 1);
            std::uint64_t changed = gray ^ prev_gray;
            prev_gray = gray;
            int bit = std::countr_zero(changed);
            const std::uint64_t* src = gen.g.row_words(static_cast<std::size_t>(bit));
            for (std::size_t wd = 0; wd < word.words().size(); ++wd) word.words()[wd] ^= src[wd];
            best = std::min(best, word.weight());
        }
        return {true, best};
    }

    if (!weight_cap) {
        throw std::invalid_argument("min_distance: k > enumeration limit needs a weight cap");
    }
    std::vector<BitVector> columns(code.n(), BitVector(code.num_checks()));
    for (std::size_t r = 0; r < code.num_checks(); ++r)
        for (std::size_t c : code.h().row_support(r)) columns[c].set(r, true);
    for (std::size_t w = 1; w <= *weight_cap; ++w) {
        BitVector syndrome(code.num_checks());
        if (support_search(code.h(), w, 0, syndrome, 0, columns)) return {true, w};
    }
    return {false, *weight_cap + 1};
}

CanonicalGenerator canonical_generator(const ClassicalCode& code) {
    if (code.k() == 0) throw std::invalid_argument("canonical_generator: k = 0");
    RrefResult rr = rref(code.h());
    std::size_t n = code.n();
    std::vector<bool> is_pivot(n, false);
    for (auto p : rr.pivots) is_pivot[p] = true;

    CanonicalGenerator out;
    out.pivot_cols = rr.pivots;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) out.info_cols.push_back(c);

    out.g = BitMatrix(out.info_cols.size(), n);
    for (std::size_t j = 0; j < out.info_cols.size(); ++j) {
        std::size_t f = out.info_cols[j];
        out.g.set(j, f, true);
        for (std::size_t pi = 0; pi < rr.pivots.size(); ++pi)
            if (rr.matrix.get(pi, f)) out.g.set(j, rr.pivots[pi], true);
    }
    return out;
}

std::vector<std::size_t> CanonicalGenerator::info_first_permutation() const {
    std::vector<std::size_t> perm = info_cols;
    perm.insert(perm.end(), pivot_cols.begin(), pivot_cols.end());
    return perm;
}

ClassicalCode random_ldpc(std::size_t n, std::size_t d_v, std::size_t d_c, std::uint64_t seed) {
    if (d_v == 0 || d_c == 0) throw std::invalid_argument("random_ldpc: degrees must be positive");
    if ((n * d_v) % d_c != 0)
        throw std::invalid_argument("random_ldpc: d_v * n must be divisible by d_c");
    std::size_t m = n * d_v / d_c;

    std::vector<std::size_t> bit_stubs;
    bit_stubs.reserve(n * d_v);
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t i = 0; i < d_v; ++i) bit_stubs.push_back(b);
    std::vector<std::size_t> check_stubs;
    check_stubs.reserve(m * d_c);
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t i = 0; i < d_c; ++i) check_stubs.push_back(c);

    std::mt19937_64 rng(seed);
    constexpr int kMaxAttempts = 10000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::shuffle(check_stubs.begin(), check_stubs.end(), rng);
        BitMatrix h(m, n);
        bool simple = true;
        for (std::size_t i = 0; i < bit_stubs.size() && simple; ++i) {
            if (h.get(check_stubs[i], bit_stubs[i])) simple = false;   // multi-edge
            h.set(check_stubs[i], bit_stubs[i], true);
        }
        if (simple) {
            return ClassicalCode(std::move(h), "random_" + std::to_string(d_v) + "_" +
                                                   std::to_string(d_c) + "_n" + std::to_string(n));
        }
    }
    throw std::runtime_error("random_ldpc: no simple pairing found within retry budget");
}

ClassicalCode qc_lift(const BitMatrix& proto,
                      const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& exponents,
                      std::size_t lift) {
    if (lift == 0) throw std::invalid_argument("qc_lift: lift must be positive");
    for (const auto& [cell, power] : exponents) {
        if (!proto.get(cell.first, cell.second))
            throw std::invalid_argument("qc_lift: exponent given on a zero proto cell");
        if (power >= lift) throw std::invalid_argument("qc_lift: power must be below the lift size");
    }
    BitMatrix full(proto.rows() * lift, proto.cols() * lift);
    for (std::size_t r = 0; r < proto.rows(); ++r) {
        for (std::size_t c : proto.row_support(r)) {
            auto it = exponents.find({r, c});
            if (it == exponents.end())
                throw std::invalid_argument("qc_lift: missing exponent for a nonzero proto cell");
            std::size_t a = it->second;
            for (std::size_t t = 0; t < lift; ++t)
                full.set(r * lift + t, c * lift + (t + a) % lift, true);
        }
    }
    return ClassicalCode(std::move(full), "qc_l" + std::to_string(lift));
}

ClassicalCode cycle_code(const SimpleGraph& g, std::optional<std::size_t> drop_vertex) {
    if (!g.is_connected()) throw std::invalid_argument("cycle_code: graph must be connected");
    std::size_t drop = drop_vertex.value_or(g.num_vertices() - 1);
    if (drop >= g.num_vertices()) throw std::invalid_argument("cycle_code: drop vertex out of range");

    std::vector<std::pair<std::size_t, std::size_t>> edges = g.edges();
    std::sort(edges.begin(), edges.end());

    BitMatrix h(g.num_vertices() - 1, edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        for (std::size_t v : {edges[e].first, edges[e].second}) {
            if (v == drop) continue;
            h.set(v < drop ? v : v - 1, e, true);
        }
    }
    ClassicalCode code(std::move(h), "cycle_v" + std::to_string(g.num_vertices()));
    if (!code.full_rank())
        throw std::logic_error("cycle_code: incidence matrix lost rank unexpectedly");
    return code;
}

std::pair<std::size_t, std::size_t> check_degrees(const ClassicalCode& code) {
    return {code.h().max_col_weight(), code.h().max_row_weight()};
}

}  // namespace hgpred

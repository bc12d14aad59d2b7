#include "hgpred/bit_matrix.hpp"

#include <bit>
#include <stdexcept>

namespace hgpred {

namespace {

void check_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": size mismatch");
}

}  // namespace

BitVector BitVector::unit(std::size_t n, std::size_t i) {
    BitVector v(n);
    v.set(i, true);
    return v;
}

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
    BitVector v(bits.size());
    std::size_t i = 0;
    for (int b : bits) v.set(i++, b != 0);
    return v;
}

void BitVector::xor_with(const BitVector& other) {
    check_same_size(n_, other.n_, "BitVector::xor_with");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
}

std::size_t BitVector::weight() const {
    std::size_t total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
}

bool BitVector::is_zero() const {
    for (auto w : words_) if (w) return false;
    return true;
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w) {
            out.push_back(wi * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    BitMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("from_rows: ragged rows");
        std::size_t j = 0;
        for (int b : row) m.set(i, j++, b != 0);
        ++i;
    }
    return m;
}

BitMatrix BitMatrix::parse(std::string_view text) {
    std::vector<std::string> rows;
    std::string cur;
    for (char ch : text) {
        if (ch == ';') {
            rows.push_back(cur);
            cur.clear();
        } else if (ch == '0' || ch == '1') {
            cur.push_back(ch);
        } else if (ch == ' ') {
            continue;
        } else {
            throw std::invalid_argument("BitMatrix::parse: bad character");
        }
    }
    if (!cur.empty()) rows.push_back(cur);
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    BitMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("BitMatrix::parse: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j] == '1');
    }
    return m;
}

void BitMatrix::row_xor(std::size_t dst, std::size_t src) {
    std::uint64_t* d = words_.data() + dst * wpr_;
    const std::uint64_t* s = words_.data() + src * wpr_;
    for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

void BitMatrix::row_xor_from(std::size_t dst, const BitMatrix& m, std::size_t src) {
    check_same_size(cols_, m.cols_, "row_xor_from");
    std::uint64_t* d = words_.data() + dst * wpr_;
    const std::uint64_t* s = m.words_.data() + src * m.wpr_;
    for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::uint64_t* pa = words_.data() + a * wpr_;
    std::uint64_t* pb = words_.data() + b * wpr_;
    for (std::size_t w = 0; w < wpr_; ++w) std::swap(pa[w], pb[w]);
}

BitVector BitMatrix::row(std::size_t r) const {
    BitVector v(cols_);
    const std::uint64_t* s = words_.data() + r * wpr_;
    for (std::size_t w = 0; w < wpr_; ++w) v.words()[w] = s[w];
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
    check_same_size(cols_, v.size(), "set_row");
    std::uint64_t* d = words_.data() + r * wpr_;
    for (std::size_t w = 0; w < wpr_; ++w) d[w] = v.words()[w];
}

std::size_t BitMatrix::row_weight(std::size_t r) const {
    std::size_t total = 0;
    const std::uint64_t* s = words_.data() + r * wpr_;
    for (std::size_t w = 0; w < wpr_; ++w) total += std::popcount(s[w]);
    return total;
}

std::size_t BitMatrix::col_weight(std::size_t c) const {
    std::size_t total = 0;
    for (std::size_t r = 0; r < rows_; ++r) total += get(r, c);
    return total;
}

std::vector<std::size_t> BitMatrix::row_support(std::size_t r) const {
    std::vector<std::size_t> out;
    const std::uint64_t* s = words_.data() + r * wpr_;
    for (std::size_t wi = 0; wi < wpr_; ++wi) {
        std::uint64_t w = s[wi];
        while (w) {
            out.push_back(wi * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

std::size_t BitMatrix::count_ones() const {
    std::size_t total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
}

std::size_t BitMatrix::max_row_weight() const {
    std::size_t best = 0;
    for (std::size_t r = 0; r < rows_; ++r) best = std::max(best, row_weight(r));
    return best;
}

std::size_t BitMatrix::max_col_weight() const {
    std::vector<std::size_t> w(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c : row_support(r)) ++w[c];
    std::size_t best = 0;
    for (auto x : w) best = std::max(best, x);
    return best;
}

bool BitMatrix::is_zero() const {
    for (auto w : words_) if (w) return false;
    return true;
}

std::string BitMatrix::to_string() const {
    std::string out;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out.push_back(get(r, c) ? '1' : '0');
        if (r + 1 < rows_) out.push_back('\n');
    }
    return out;
}

std::uint64_t BitMatrix::fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(rows_);
    mix(cols_);
    for (auto w : words_) mix(w);
    return h;
}

std::size_t rank(const BitMatrix& m) {
    return rref(m).pivots.size();
}

RrefResult rref(const BitMatrix& m) {
    BitMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t pivot = a.rows();
        for (std::size_t i = r; i < a.rows(); ++i) {
            if (a.get(i, c)) { pivot = i; break; }
        }
        if (pivot == a.rows()) continue;
        a.swap_rows(r, pivot);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i != r && a.get(i, c)) a.row_xor(i, r);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

BitMatrix kernel_basis(const BitMatrix& m) {
    RrefResult rr = rref(m);
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    BitMatrix basis(free_cols.size(), n);
    for (std::size_t bi = 0; bi < free_cols.size(); ++bi) {
        std::size_t f = free_cols[bi];
        basis.set(bi, f, true);
        for (std::size_t pi = 0; pi < rr.pivots.size(); ++pi) {
            if (rr.matrix.get(pi, f)) basis.set(bi, rr.pivots[pi], true);
        }
    }
    return basis;
}

RowSpace::RowSpace(const BitMatrix& m) : rref_(rref(m)), cols_(m.cols()) {}

BitVector RowSpace::reduce(const BitVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("RowSpace::reduce: dimension mismatch");
    BitVector x = v;
    for (std::size_t pi = 0; pi < rref_.pivots.size(); ++pi) {
        if (x.get(rref_.pivots[pi])) {
            const std::uint64_t* s = rref_.matrix.row_words(pi);
            for (std::size_t w = 0; w < x.words().size(); ++w) x.words()[w] ^= s[w];
        }
    }
    return x;
}

bool RowSpace::contains(const BitVector& v) const {
    return reduce(v).is_zero();
}

bool in_rowspace(const BitMatrix& m, const BitVector& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("in_rowspace: dimension mismatch");
    return RowSpace(m).contains(v);
}

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k : a.row_support(i)) out.row_xor_from(i, b, k);
    }
    return out;
}

BitVector matvec(const BitMatrix& m, const BitVector& x) {
    if (x.size() != m.cols()) throw std::invalid_argument("matvec: shape mismatch");
    BitVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const std::uint64_t* s = m.row_words(i);
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < x.words().size(); ++w) acc ^= s[w] & x.words()[w];
        out.set(i, std::popcount(acc) & 1);
    }
    return out;
}

BitMatrix add(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("add: shape mismatch");
    BitMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) out.row_xor_from(r, b, r);
    return out;
}

BitMatrix transpose(const BitMatrix& m) {
    BitMatrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c : m.row_support(r)) out.set(c, r, true);
    return out;
}

BitMatrix kron(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
        const auto cols_a = a.row_support(i1);
        if (cols_a.empty()) continue;
        for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
            const auto cols_b = b.row_support(i2);
            std::size_t r = i1 * b.rows() + i2;
            for (std::size_t j1 : cols_a)
                for (std::size_t j2 : cols_b) out.set(r, j1 * b.cols() + j2, true);
        }
    }
    return out;
}

BitMatrix hstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    BitMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c : a.row_support(r)) out.set(r, c, true);
        for (std::size_t c : b.row_support(r)) out.set(r, a.cols() + c, true);
    }
    return out;
}

BitMatrix vstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    BitMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) out.row_xor_from(r, a, r);
    for (std::size_t r = 0; r < b.rows(); ++r) out.row_xor_from(a.rows() + r, b, r);
    return out;
}

BitMatrix row_select(const BitMatrix& m, const std::vector<std::size_t>& rows) {
    BitMatrix out(rows.size(), m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] >= m.rows()) throw std::invalid_argument("row_select: index out of range");
        out.row_xor_from(i, m, rows[i]);
    }
    return out;
}

BitMatrix col_select(const BitMatrix& m, const std::vector<std::size_t>& cols) {
    BitMatrix out(m.rows(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        if (cols[j] >= m.cols()) throw std::invalid_argument("col_select: index out of range");
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (m.get(r, cols[j])) out.set(r, j, true);
    return out;
}

BitVector select(const BitVector& v, const std::vector<std::size_t>& idx) {
    BitVector out(idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] >= v.size()) throw std::invalid_argument("select: index out of range");
        out.set(j, v.get(idx[j]));
    }
    return out;
}

}  // namespace hgpred

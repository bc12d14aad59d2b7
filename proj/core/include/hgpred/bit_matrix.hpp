#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hgpred {

/// Packed bit vector over GF(2). Bits beyond size() in the last word are zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static BitVector unit(std::size_t n, std::size_t i);
    static BitVector from_bits(std::initializer_list<int> bits);

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void xor_with(const BitVector& other);
    std::size_t weight() const;
    bool is_zero() const;
    std::vector<std::size_t> support() const;

    bool operator==(const BitVector& other) const { return n_ == other.n_ && words_ == other.words_; }

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense bit-packed matrix over GF(2), row-major, 64-bit words per row.
/// 0xN and Nx0 shapes are legal and behave as empty. Operations are pure;
/// values are cheap to copy and safe to share once built.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), words_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix zeros(std::size_t rows, std::size_t cols) { return BitMatrix(rows, cols); }
    static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
    /// Rows separated by ';', e.g. "110;011".
    static BitMatrix parse(std::string_view text);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (words_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (c & 63);
        if (v) words_[r * wpr_ + (c >> 6)] |= mask;
        else words_[r * wpr_ + (c >> 6)] &= ~mask;
    }
    void flip(std::size_t r, std::size_t c) {
        words_[r * wpr_ + (c >> 6)] ^= std::uint64_t(1) << (c & 63);
    }

    void row_xor(std::size_t dst, std::size_t src);                    // row dst ^= row src
    void row_xor_from(std::size_t dst, const BitMatrix& m, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    BitVector row(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);
    std::size_t row_weight(std::size_t r) const;
    std::size_t col_weight(std::size_t c) const;
    std::vector<std::size_t> row_support(std::size_t r) const;

    std::size_t count_ones() const;
    std::size_t max_row_weight() const;
    std::size_t max_col_weight() const;
    bool is_zero() const;

    bool operator==(const BitMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && words_ == other.words_;
    }

    std::string to_string() const;
    std::uint64_t fingerprint() const;   // FNV-1a over shape and words

    const std::uint64_t* row_words(std::size_t r) const { return words_.data() + r * wpr_; }
    std::uint64_t* row_words(std::size_t r) { return words_.data() + r * wpr_; }
    std::size_t words_per_row() const { return wpr_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t wpr_ = 0;
    std::vector<std::uint64_t> words_;
};

// Elimination results

struct RrefResult {
    BitMatrix matrix;                  // reduced row-echelon form
    std::vector<std::size_t> pivots;   // strictly increasing pivot columns
};

std::size_t rank(const BitMatrix& m);
RrefResult rref(const BitMatrix& m);

/// Rows form a basis of the right kernel {x : m x^T = 0}; row count = cols - rank.
BitMatrix kernel_basis(const BitMatrix& m);

bool in_rowspace(const BitMatrix& m, const BitVector& v);

/// Precomputed rref for repeated membership queries against one rowspace.
class RowSpace {
public:
    explicit RowSpace(const BitMatrix& m);
    bool contains(const BitVector& v) const;
    /// Residual after reducing v by the pivot rows (zero iff v in the rowspace).
    BitVector reduce(const BitVector& v) const;
    std::size_t rank() const { return rref_.pivots.size(); }

private:
    RrefResult rref_;
    std::size_t cols_;
};

// Shape algebra

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b);
BitVector matvec(const BitMatrix& m, const BitVector& x);   // m * x^T as a column, length rows
BitMatrix add(const BitMatrix& a, const BitMatrix& b);       // XOR
BitMatrix transpose(const BitMatrix& m);
/// Kronecker product; the left factor indexes the coarse (vertical) blocks.
BitMatrix kron(const BitMatrix& a, const BitMatrix& b);
BitMatrix hstack(const BitMatrix& a, const BitMatrix& b);
BitMatrix vstack(const BitMatrix& a, const BitMatrix& b);
BitMatrix row_select(const BitMatrix& m, const std::vector<std::size_t>& rows);
BitMatrix col_select(const BitMatrix& m, const std::vector<std::size_t>& cols);

BitVector select(const BitVector& v, const std::vector<std::size_t>& idx);

}  // namespace hgpred

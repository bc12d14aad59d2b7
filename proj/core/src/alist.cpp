#include "hgpred/alist.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hgpred {

void write_alist(std::ostream& out, const BitMatrix& m) {
    std::size_t n = m.cols(), rows = m.rows();
    std::vector<std::vector<std::size_t>> col_idx(n), row_idx(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c : m.row_support(r)) {
            col_idx[c].push_back(r + 1);
            row_idx[r].push_back(c + 1);
        }
    }
    std::size_t max_col = 0, max_row = 0;
    for (const auto& v : col_idx) max_col = std::max(max_col, v.size());
    for (const auto& v : row_idx) max_row = std::max(max_row, v.size());

    out << n << " " << rows << "\n";
    out << max_col << " " << max_row << "\n";
    for (std::size_t c = 0; c < n; ++c) out << col_idx[c].size() << (c + 1 < n ? " " : "\n");
    if (n == 0) out << "\n";
    for (std::size_t r = 0; r < rows; ++r) out << row_idx[r].size() << (r + 1 < rows ? " " : "\n");
    if (rows == 0) out << "\n";

    auto emit_padded = [&](const std::vector<std::size_t>& idx, std::size_t width) {
        for (std::size_t i = 0; i < width; ++i)
            out << (i < idx.size() ? idx[i] : 0) << (i + 1 < width ? " " : "\n");
        if (width == 0) out << "\n";
    };
    for (std::size_t c = 0; c < n; ++c) emit_padded(col_idx[c], max_col);
    for (std::size_t r = 0; r < rows; ++r) emit_padded(row_idx[r], max_row);
}

BitMatrix read_alist(std::istream& in) {
    std::size_t n = 0, m = 0, max_col = 0, max_row = 0;
    if (!(in >> n >> m)) throw std::runtime_error("alist: missing size header");
    if (!(in >> max_col >> max_row)) throw std::runtime_error("alist: missing weight header");

    std::vector<std::size_t> col_w(n), row_w(m);
    for (auto& w : col_w)
        if (!(in >> w)) throw std::runtime_error("alist: truncated column weights");
    for (auto& w : row_w)
        if (!(in >> w)) throw std::runtime_error("alist: truncated row weights");

    BitMatrix out(m, n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < max_col; ++i) {
            std::size_t idx = 0;
            if (!(in >> idx)) throw std::runtime_error("alist: truncated column list");
            if (idx == 0) continue;
            if (idx > m) throw std::runtime_error("alist: row index out of range");
            out.set(idx - 1, c, true);
        }
    }
    // The row lists are redundant; read them and cross-check.
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t i = 0; i < max_row; ++i) {
            std::size_t idx = 0;
            if (!(in >> idx)) throw std::runtime_error("alist: truncated row list");
            if (idx == 0) continue;
            if (idx > n || !out.get(r, idx - 1))
                throw std::runtime_error("alist: row/column lists disagree");
        }
    }
    return out;
}

void write_alist_file(const std::string& path, const BitMatrix& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_alist(out, m);
}

BitMatrix read_alist_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return read_alist(in);
}

}  // namespace hgpred

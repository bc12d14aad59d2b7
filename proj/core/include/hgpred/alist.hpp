#pragma once

#include <iosfwd>
#include <string>

#include "hgpred/bit_matrix.hpp"

namespace hgpred {

/// Sparse binary-matrix text format: "n m", "max_col_w max_row_w", the n column
/// weights, the m row weights, then per-column and per-row 1-based index lines
/// zero-padded to the maxima. Columns index bits, rows index checks.
void write_alist(std::ostream& out, const BitMatrix& m);
BitMatrix read_alist(std::istream& in);

void write_alist_file(const std::string& path, const BitMatrix& m);
BitMatrix read_alist_file(const std::string& path);

}  // namespace hgpred

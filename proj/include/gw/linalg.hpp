#pragma once

#include "gw/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gw {

/// Sparse rational matrix; rows hold (column, value) pairs sorted by
/// column, no explicit zeros.
class SparseMatrixQ {
public:
    SparseMatrixQ(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    /// Accumulates into (r, c); entries that cancel to zero are removed.
    void add(int r, int c, const Rat& value);

    const std::vector<std::pair<int, Rat>>& row(int r) const { return data_[r]; }

    /// Stacks other below this matrix (column counts must agree).
    SparseMatrixQ stacked(const SparseMatrixQ& other) const;

    SparseMatrixQ transposed() const;

    /// {"cols": [...names...], "rows": [[[col, num, den], ...], ...]}
    std::string to_json(const std::vector<std::string>& col_names) const;

private:
    int rows_, cols_;
    std::vector<std::vector<std::pair<int, Rat>>> data_;
};

/// Exact rank by fraction-free (Bareiss) elimination over arbitrary-
/// precision integers, after clearing denominators row by row. The rank is
/// recomputed modulo rank_check_prime(); a disagreement throws
/// internal_error with both values (the modular rank can only ever be
/// lower, and at these sizes equality is expected).
int rational_rank(const SparseMatrixQ& m);

/// Rank over F_p only (exposed for the cross-check tests).
int modular_rank(const SparseMatrixQ& m);

std::uint64_t rank_check_prime();

} // namespace gw

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "eqk/bigint.hpp"

namespace eqk {

/// Sparse row: (column, value) pairs sorted by column, no zero values.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Result of exact row reduction over the rationals.
struct Echelon {
  std::size_t rank = 0;
  /// Pivot columns in elimination order.
  std::vector<std::size_t> pivot_columns;
  /// Columns without a pivot, in the given column order.
  std::vector<std::size_t> free_columns;
};

/// Row-reduce `rows` with `columns` giving the preferred pivot order
/// (pivots are taken left to right along this list).
Echelon row_reduce(std::vector<SparseRow> rows, const std::vector<std::size_t>& columns);

std::size_t rank(std::vector<SparseRow> rows, std::size_t num_columns);

/// Solve A x = b exactly. Returns nullopt if inconsistent; free variables are
/// set to zero.
std::optional<std::vector<Rational>> solve_exact(const std::vector<SparseRow>& rows,
                                                 const std::vector<Rational>& rhs,
                                                 std::size_t num_columns);

/// Dense solve of a square system; nullopt if singular.
std::optional<std::vector<Rational>> solve_dense(std::vector<std::vector<Rational>> a,
                                                 std::vector<Rational> b);

}  // namespace eqk

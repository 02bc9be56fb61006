#include "eqk/rational_linalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "eqk/errors.hpp"

namespace eqk {

namespace {

const Rational* find_entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

// target -= factor * source
void axpy(SparseRow& target, const Rational& factor, const SparseRow& source) {
  SparseRow out;
  out.reserve(target.size() + source.size());
  auto a = target.begin();
  auto b = source.begin();
  while (a != target.end() || b != source.end()) {
    if (b == source.end() || (a != target.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == target.end() || b->first < a->first) {
      out.emplace_back(b->first, -factor * b->second);
      ++b;
    } else {
      Rational v = a->second - factor * b->second;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  target = std::move(out);
}

struct Reduction {
  Echelon echelon;
  std::vector<SparseRow> pivot_rows;  // parallel to echelon.pivot_columns
  std::vector<SparseRow> leftover;    // rows reduced to no pivotable entries
};

// Eliminates along `columns`; entries in columns not listed are carried but
// never pivoted on (used for the right-hand side).
Reduction reduce(std::vector<SparseRow> rows, const std::vector<std::size_t>& columns) {
  Reduction red;
  std::vector<bool> active(rows.size(), true);
  for (std::size_t col : columns) {
    std::size_t best = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!active[i] || find_entry(rows[i], col) == nullptr) continue;
      if (best == rows.size() || rows[i].size() < rows[best].size()) best = i;
    }
    if (best == rows.size()) {
      red.echelon.free_columns.push_back(col);
      continue;
    }
    const Rational pivot = *find_entry(rows[best], col);
    for (auto& e : rows[best]) e.second /= pivot;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == best || !active[i]) continue;
      if (const Rational* v = find_entry(rows[i], col)) {
        const Rational f = *v;
        axpy(rows[i], f, rows[best]);
      }
    }
    active[best] = false;
    red.echelon.pivot_columns.push_back(col);
    red.pivot_rows.push_back(std::move(rows[best]));
  }
  red.echelon.rank = red.echelon.pivot_columns.size();
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (active[i] && !rows[i].empty()) red.leftover.push_back(std::move(rows[i]));
  return red;
}

}  // namespace

Echelon row_reduce(std::vector<SparseRow> rows, const std::vector<std::size_t>& columns) {
  return reduce(std::move(rows), columns).echelon;
}

std::size_t rank(std::vector<SparseRow> rows, std::size_t num_columns) {
  std::vector<std::size_t> cols(num_columns);
  std::iota(cols.begin(), cols.end(), 0);
  return reduce(std::move(rows), cols).echelon.rank;
}

std::optional<std::vector<Rational>> solve_exact(const std::vector<SparseRow>& rows,
                                                 const std::vector<Rational>& rhs,
                                                 std::size_t num_columns) {
  if (rows.size() != rhs.size()) throw InputError("solve_exact: rhs size mismatch");
  // Augment with the right-hand side in column `num_columns`.
  std::vector<SparseRow> aug = rows;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    for (const auto& e : aug[i])
      if (e.first >= num_columns) throw InputError("solve_exact: column out of range");
    if (rhs[i] != 0) aug[i].emplace_back(num_columns, rhs[i]);
  }
  std::vector<std::size_t> cols(num_columns);
  std::iota(cols.begin(), cols.end(), 0);
  Reduction red = reduce(std::move(aug), cols);
  // Leftover rows only contain the rhs column: nonzero means inconsistent.
  if (!red.leftover.empty()) return std::nullopt;

  std::vector<Rational> x(num_columns);
  // Pivot rows only reference their pivot, later pivots, free columns and rhs;
  // with free variables at zero, back-substitute in reverse pivot order.
  for (std::size_t k = red.pivot_rows.size(); k-- > 0;) {
    const std::size_t pc = red.echelon.pivot_columns[k];
    Rational value = 0;
    for (const auto& [c, v] : red.pivot_rows[k]) {
      if (c == num_columns) value += v;
      else if (c != pc) value -= v * x[c];
    }
    x[pc] = value;
  }
  return x;
}

std::optional<std::vector<Rational>> solve_dense(std::vector<std::vector<Rational>> a,
                                                 std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw InputError("solve_dense: shape mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    if (a[c].size() != n) throw InputError("solve_dense: matrix not square");
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

}  // namespace eqk

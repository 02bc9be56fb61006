#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "eqk/bigint.hpp"

namespace eqk {

using Coord = std::int64_t;

/// Integer vector in a fixed-rank lattice. Ordered lexicographically.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t rank) : coords_(rank, 0) {}
  LatticeVector(std::initializer_list<Coord> coords) : coords_(coords) {}
  explicit LatticeVector(std::vector<Coord> coords) : coords_(std::move(coords)) {}

  static LatticeVector unit(std::size_t rank, std::size_t i) {
    LatticeVector v(rank);
    v.coords_[i] = 1;
    return v;
  }

  std::size_t rank() const { return coords_.size(); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  Coord& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Coord>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;

  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  LatticeVector operator-() const;
  friend LatticeVector operator*(Coord k, LatticeVector v) {
    for (auto& c : v.coords_) c *= k;
    return v;
  }

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << v.str(); }

 private:
  std::vector<Coord> coords_;
};

Coord dot(const LatticeVector& a, const LatticeVector& b);
Coord gcd_of(const LatticeVector& v);
LatticeVector concat(const LatticeVector& a, const LatticeVector& b);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors.
  static IntMatrix from_columns(const std::vector<LatticeVector>& cols, std::size_t rank);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coord operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Coord& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  LatticeVector row(std::size_t i) const;
  LatticeVector column(std::size_t j) const;
  IntMatrix transpose() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend LatticeVector operator*(const IntMatrix& a, const LatticeVector& v);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Coord> data_;
};

BigInt determinant(const IntMatrix& m);

/// Inverse of a unimodular matrix, or nullopt if |det| != 1.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m);

/// Elementary divisors (Smith normal form diagonal, nonzero part, ascending).
std::vector<Coord> elementary_divisors(const IntMatrix& m);

/// Unimodular change of basis that turns chi into multiplicity * e_0.
struct PrimitiveSplit {
  Coord multiplicity = 0;  // gcd of chi, > 0
  IntMatrix transform;     // transform * chi == multiplicity * e_0
  IntMatrix inverse;       // transform * inverse == identity
};

PrimitiveSplit primitive_split(const LatticeVector& chi);

/// Primitive integer generator of the orthogonal complement of rank-1
/// codimension spanned by `vectors` (n-1 linearly independent vectors in Z^n).
/// Sign is unspecified. Throws InputError if the complement is not a line.
LatticeVector primitive_normal(const std::vector<LatticeVector>& vectors, std::size_t rank);

}  // namespace eqk

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqk/int_lattice.hpp"

namespace eqk {

/// Subset of the simple roots, stored as a bitmask over 0-based indices.
class RootSubset {
 public:
  constexpr RootSubset() = default;
  constexpr explicit RootSubset(std::uint32_t bits) : bits_(bits) {}
  static RootSubset all(std::size_t rank) { return RootSubset((1u << rank) - 1u); }
  static RootSubset single(std::size_t i) { return RootSubset(1u << i); }
  /// Parses 1-based indices separated by commas or spaces ("" is empty).
  static RootSubset parse(std::string_view text, std::size_t rank);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool is_subset_of(RootSubset o) const { return (bits_ & ~o.bits_) == 0; }
  std::vector<std::size_t> indices() const;

  friend constexpr RootSubset operator|(RootSubset a, RootSubset b) { return RootSubset(a.bits_ | b.bits_); }
  friend constexpr RootSubset operator&(RootSubset a, RootSubset b) { return RootSubset(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr RootSubset operator-(RootSubset a, RootSubset b) { return RootSubset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(RootSubset, RootSubset) = default;
  friend constexpr auto operator<=>(RootSubset, RootSubset) = default;

  /// "1,2" style, 1-based.
  std::string str() const;

 private:
  std::uint32_t bits_ = 0;
};

/// All subsets of `s`, in increasing bitmask order.
std::vector<RootSubset> subsets_of(RootSubset s);

/// Built-in root datum of the simply connected group times a central torus.
/// Lattice coordinates: `central_rank` free central coordinates followed by
/// the fundamental-weight coordinates of the semisimple part.
class RootDatum {
 public:
  /// Supported labels: A1, A1xA1, A2, B2, A3.
  static RootDatum from_label(std::string_view label, std::size_t central_rank = 0);

  const std::string& label() const { return label_; }
  std::size_t semisimple_rank() const { return cartan_.rows(); }
  std::size_t central_rank() const { return central_rank_; }
  std::size_t rank() const { return central_rank_ + semisimple_rank(); }
  /// a_ij = <alpha_i^vee, alpha_j>; column j holds alpha_j in weight coordinates.
  const IntMatrix& cartan() const { return cartan_; }
  RootSubset simple_roots() const { return RootSubset::all(semisimple_rank()); }

  LatticeVector simple_root(std::size_t i) const;
  LatticeVector fundamental_weight(std::size_t i) const;
  IntMatrix simple_reflection(std::size_t i) const;

 private:
  RootDatum(std::string label, std::size_t central_rank, IntMatrix cartan);

  std::string label_;
  std::size_t central_rank_ = 0;
  IntMatrix cartan_;
};

struct WeylElement {
  IntMatrix matrix;        // action on the weight lattice
  std::vector<int> word;   // lexicographically least reduced word, 0-based
  std::size_t length = 0;

  /// "e" for the identity, otherwise "s1s2..." (1-based).
  std::string word_string() const;
};

/// The finite Weyl group of a RootDatum, elements ordered by (length, word).
class WeylGroup {
 public:
  explicit WeylGroup(RootDatum datum);

  const RootDatum& datum() const { return datum_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& element(std::size_t i) const { return elements_.at(i); }
  static constexpr std::size_t identity() { return 0; }

  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t simple_reflection(std::size_t i) const { return simple_[i]; }
  std::optional<std::size_t> find(const IntMatrix& m) const;
  std::optional<std::size_t> find_word(std::string_view word) const;

  /// {i : l(w s_i) < l(w)}
  RootSubset right_descents(std::size_t w) const { return right_descents_[w]; }
  /// {i : w^{-1} alpha_i < 0}
  RootSubset left_descents(std::size_t w) const;

  LatticeVector act(std::size_t w, const LatticeVector& weight) const;

  /// All roots in weight coordinates, positive ones first.
  const std::vector<LatticeVector>& roots() const { return roots_; }
  std::size_t positive_root_count() const { return positive_count_; }
  bool is_positive_root(const LatticeVector& root) const;
  /// Number of positive roots sent to negative roots by w.
  std::size_t inversion_count(std::size_t w) const;

  /// Elements of the parabolic subgroup W_I.
  std::vector<std::size_t> parabolic_subgroup(RootSubset parabolic) const;
  /// Minimal-length coset representatives W^I = {w : l(ws) > l(w) for s in I}.
  std::vector<std::size_t> minimal_coset_reps(RootSubset parabolic) const;
  /// C^I = W^{D \ I} minus the union of W^{D \ J} over proper J of I, i.e. the
  /// elements whose right descent set is exactly I.
  std::vector<std::size_t> c_cell(RootSubset cell) const;

 private:
  RootDatum datum_;
  std::vector<WeylElement> elements_;
  std::map<IntMatrix, std::size_t> index_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> simple_;
  std::vector<RootSubset> right_descents_;
  std::vector<LatticeVector> roots_;
  std::size_t positive_count_ = 0;
  std::map<LatticeVector, bool> root_sign_;
};

// Free-function surface.
WeylGroup generate_weyl(const RootDatum& datum);
std::vector<WeylElement> minimal_coset_reps(const WeylGroup& group, RootSubset parabolic);
std::vector<WeylElement> c_partition(const WeylGroup& group, RootSubset cell);
LatticeVector act(const WeylElement& w, const LatticeVector& weight);

}  // namespace eqk

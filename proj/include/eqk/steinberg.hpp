#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "eqk/laurent.hpp"
#include "eqk/lattice_weyl.hpp"

namespace eqk {

/// p_v = e^{sum of omega_i over i with v^{-1} alpha_i < 0}.
LaurentPoly p_v(const WeylGroup& group, std::size_t v);

/// Steinberg's f_v^P for v in W^P: sum over the distinct W_P-translates of
/// v^{-1} p_v. Throws InputError if v is not a minimal coset representative.
LaurentPoly steinberg_f(const WeylGroup& group, RootSubset parabolic, std::size_t v);

/// f_v := f_v^{D \ I} for v in C^I (I = right descent set of v).
LaurentPoly modified_f(const WeylGroup& group, std::size_t v);

struct BasisEntry {
  std::size_t v;
  RootSubset cell;  // right descent set of v
  LaurentPoly f;
};

/// {f_v : v in C^J, J a subset of `cells`}, a basis of the W_{D \ cells}-
/// invariants over the W-invariants. Ordered like the group elements.
struct SteinbergBasis {
  RootSubset cells;
  std::vector<BasisEntry> entries;
};

/// Coefficients c_v (W-invariant) keyed by group element index.
using Expansion = std::map<std::size_t, LaurentPoly>;

/// Caches the modified basis of a group and solves expansions. All const
/// members are safe to call concurrently.
class SteinbergSolver {
 public:
  explicit SteinbergSolver(const WeylGroup& group, int max_margin = 3);

  const WeylGroup& group() const { return group_; }
  const LaurentPoly& f(std::size_t v) const { return basis_[v]; }
  SteinbergBasis basis(RootSubset cells) const;

  /// Writes g (W_{D \ cells}-invariant) as sum c_v f_v over the basis for
  /// `cells`. Every basis element gets an entry (possibly zero).
  /// InputError if g is not invariant; ConsistencyError if no exact integral
  /// solution is found (cannot happen for a free basis).
  Expansion expand(const LaurentPoly& g, RootSubset cells) const;

  /// a^w_{v,v'} for w over the basis of cells I u I'.
  Expansion structure_constants(std::size_t v, std::size_t vp) const;

 private:
  std::optional<Expansion> try_expand(const LaurentPoly& g, const std::vector<std::size_t>& support, Coord margin) const;

  WeylGroup group_;
  int max_margin_;
  std::vector<LaurentPoly> basis_;
  std::vector<std::size_t> all_;
};

SteinbergBasis steinberg_basis(const WeylGroup& group, RootSubset cells);
Expansion expand_in_basis(const WeylGroup& group, const LaurentPoly& g, RootSubset cells);
Expansion structure_constants(const WeylGroup& group, std::size_t v, std::size_t vp);

/// Full table over ordered pairs (v, v').
using StructureTable = std::map<std::pair<std::size_t, std::size_t>, Expansion>;

/// OpenMP-parallel over pairs.
StructureTable structure_table(const SteinbergSolver& solver);
/// Serial reference.
StructureTable structure_table_serial(const SteinbergSolver& solver);

/// sum_v c_v f_v
LaurentPoly recombine(const SteinbergSolver& solver, const Expansion& coeffs);

}  // namespace eqk

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqk/bigint.hpp"
#include "eqk/int_lattice.hpp"
#include "eqk/lattice_weyl.hpp"

namespace eqk {

/// Element of the group algebra Z[L] of a lattice L = Z^rank.
/// Terms are kept sorted by exponent with no zero coefficients, so equal
/// elements have identical term maps.
class LaurentPoly {
 public:
  using TermMap = std::map<LatticeVector, BigInt>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t rank) : rank_(rank) {}

  static LaurentPoly zero(std::size_t rank) { return LaurentPoly(rank); }
  static LaurentPoly constant(std::size_t rank, const BigInt& c);
  static LaurentPoly one(std::size_t rank) { return constant(rank, 1); }
  /// e^lambda (times coeff).
  static LaurentPoly monomial(const LatticeVector& lambda, const BigInt& coeff = 1);

  std::size_t rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigInt coeff(const LatticeVector& lambda) const;

  void add_term(const LatticeVector& lambda, const BigInt& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const BigInt& k);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const BigInt& k) { return a *= k; }
  friend LaurentPoly operator*(const BigInt& k, LaurentPoly a) { return a *= k; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Human-readable form, e.g. "e^(1,0) - 2 e^(0,-1) + 3".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

 private:
  std::size_t rank_ = 0;
  TermMap terms_;
};

LaurentPoly pow(const LaurentPoly& f, unsigned n);

/// Substitutes exponents: e^lambda -> e^{m lambda}. m may be non-square.
LaurentPoly apply_matrix(const IntMatrix& m, const LaurentPoly& f);

LaurentPoly weyl_act(const WeylElement& w, const LaurentPoly& f);
LaurentPoly weyl_act(const WeylGroup& group, std::size_t w, const LaurentPoly& f);

bool is_invariant(const LaurentPoly& f, const std::vector<WeylElement>& gens);
/// Invariance under W_I (tested on the simple reflections of I).
bool is_invariant(const WeylGroup& group, const LaurentPoly& f, RootSubset parabolic);

/// Sum of e^{w lambda} over the distinct points of the orbit.
LaurentPoly orbit_sum(const LatticeVector& lambda, const std::vector<WeylElement>& subgroup);
LaurentPoly orbit_sum(const WeylGroup& group, const LatticeVector& lambda,
                      const std::vector<std::size_t>& subgroup);

/// 1 - e^{-chi}
LaurentPoly one_minus_exp_neg(const LatticeVector& chi);

/// The q with q (1 - e^{-chi}) = f, if it exists. Throws InputError for chi = 0.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LatticeVector& chi);

/// Sum of coefficients (every e^lambda goes to 1).
BigInt augmentation(const LaurentPoly& f);

/// Evaluates at a point of (Q^*)^rank: e^lambda -> prod x_k^{lambda_k}.
Rational evaluate(const LaurentPoly& f, const std::vector<Rational>& point);

/// Embeds Z[L] into Z[L + L] as the first (resp. second) factor.
LaurentPoly embed_first(const LaurentPoly& f);
LaurentPoly embed_second(const LaurentPoly& f);

/// Weyl character of a dominant weight: alternating sum over W divided by
/// the product of (1 - e^{-alpha}) over positive roots.
LaurentPoly weyl_character(const WeylGroup& group, const LatticeVector& dominant);

}  // namespace eqk

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqk/fan.hpp"
#include "eqk/gkm.hpp"
#include "eqk/laurent.hpp"
#include "eqk/lattice_weyl.hpp"
#include "eqk/steinberg.hpp"

namespace eqk {

/// Choice of generators of R(T)^W used to define the invariant map E.
enum class InvariantGenerators { OrbitSums, WeylCharacters };

/// Finitely presented model of K(B): a Laurent ring on named generators with
/// relations carried verbatim.
///   toric: xi_u = t^{xi * u} for an (m x n) integer matrix xi (empty: xi = 1);
///   flag:  E on a generating set of R(T)^W.
struct BaseRingSpec {
  enum class InvariantMap { Augmentation, Inclusion, Explicit };

  std::string name = "point";
  std::vector<std::string> generators;
  std::vector<std::string> relations;
  IntMatrix xi;  // m x n, or 0 x 0 for xi = 1
  InvariantMap invariant_map = InvariantMap::Augmentation;
  InvariantGenerators generating_set = InvariantGenerators::OrbitSums;
  std::vector<LaurentPoly> invariant_images;  // Explicit: one per fundamental generator
  std::vector<LatticeVector> central_images;  // Explicit: exponent of E(e^{eps_k})

  /// The integers: xi_u = 1, E = augmentation.
  static BaseRingSpec point();
  /// R(T) = Z[t_1^{+-1}, ..., t_n^{+-1}] with xi_u = t^u and E = inclusion.
  static BaseRingSpec torus_equivariant(std::size_t n);

  std::size_t base_rank() const { return generators.size(); }
  bool is_point() const { return generators.empty() && relations.empty(); }
  /// xi_u as a base-ring element.
  LaurentPoly xi_of(const LatticeVector& u) const;
};

/// Polynomial in x_1..x_d with coefficients in the base Laurent ring.
class XPolynomial {
 public:
  using Exponent = std::vector<unsigned>;

  XPolynomial() = default;
  XPolynomial(std::size_t num_vars, std::size_t base_rank) : vars_(num_vars), base_rank_(base_rank) {}
  static XPolynomial constant(std::size_t num_vars, const LaurentPoly& c);
  static XPolynomial variable(std::size_t num_vars, std::size_t base_rank, std::size_t i);

  std::size_t num_vars() const { return vars_; }
  std::size_t base_rank() const { return base_rank_; }
  const std::map<Exponent, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Exponent& e, const LaurentPoly& c);

  XPolynomial& operator+=(const XPolynomial& o);
  XPolynomial& operator-=(const XPolynomial& o);
  friend XPolynomial operator+(XPolynomial a, const XPolynomial& b) { return a += b; }
  friend XPolynomial operator-(XPolynomial a, const XPolynomial& b) { return a -= b; }
  friend XPolynomial operator*(const XPolynomial& a, const XPolynomial& b);
  friend bool operator==(const XPolynomial&, const XPolynomial&) = default;

  std::string str(const std::vector<std::string>& base_names) const;

 private:
  std::size_t vars_ = 0;
  std::size_t base_rank_ = 0;
  std::map<Exponent, LaurentPoly> terms_;
};

std::string base_coeff_str(const LaurentPoly& c, const std::vector<std::string>& names);

struct Relation {
  std::string kind;  // "monomial" (minimal non-face) or "character"
  std::vector<std::size_t> non_face;  // monomial relations
  LatticeVector u;                    // character relations
  XPolynomial poly;
};

/// One product rule f_v f_v' = sum_w E(a^w_{v,v'}) f_w of a flag presentation.
struct ProductRule {
  std::size_t v, vp;
  std::map<std::size_t, LaurentPoly> coeffs;  // over the base ring, zeros dropped
};

struct Presentation {
  enum class Kind { Toric, Flag };
  Kind kind = Kind::Toric;
  BaseRingSpec base;
  std::vector<std::string> generators;
  // toric
  Fan fan;
  std::vector<Relation> relations;
  // flag
  std::string datum_label;
  RootSubset parabolic;
  std::vector<std::size_t> basis;  // group element indices, W^I
  std::vector<ProductRule> products;
};

/// Character relation for u: prod_{<u,v_i> >= 0} (1-x_i)^{<u,v_i>} - xi_u prod_{<u,v_i> <= 0} (1-x_i)^{-<u,v_i>}.
XPolynomial toric_character_relation(const Fan& fan, const BaseRingSpec& base, const LatticeVector& u);
/// Minimal non-faces (ray subsets of size <= rank + 1 not in any cone, all proper subsets faces).
std::vector<std::vector<std::size_t>> minimal_non_faces(const Fan& fan);

Presentation toric_presentation(const Fan& fan, const BaseRingSpec& base);

/// Writes a W-invariant as a polynomial in the chosen generators: the result
/// has rank c + r, exponent (z, k) meaning e^z * prod chi_i^{k_i}.
LaurentPoly decompose_invariant(const WeylGroup& group, const LaurentPoly& f, InvariantGenerators gens);
std::vector<LaurentPoly> invariant_generators(const WeylGroup& group, InvariantGenerators gens);
/// E applied to a W-invariant, value in the base ring.
LaurentPoly apply_invariant_map(const WeylGroup& group, const BaseRingSpec& base, const LaurentPoly& f);

Presentation flag_presentation(const SteinbergSolver& solver, RootSubset parabolic, const BaseRingSpec& base);
Presentation flag_presentation(const WeylGroup& group, RootSubset parabolic, const BaseRingSpec& base);
/// Coordinates of g (W_I-invariant) on the presentation's basis.
std::map<std::size_t, LaurentPoly> flag_reduce(const SteinbergSolver& solver, const Presentation& p, const LaurentPoly& g);

/// Sign s in x_i|_sigma = 1 - e^{s m_{sigma,i}}, calibrated once on P^1.
int evaluation_sign();
/// x_i -> piecewise element over the maximal cones (values in Z[M]).
std::vector<PiecewiseElement> toric_evaluation_map(const Fan& fan);
/// Image of a relation whose base is torus-equivariant of rank n (t^a -> e^a)
/// or the point.
PiecewiseElement evaluate_relation(const XPolynomial& poly, const std::vector<PiecewiseElement>& images);

struct QuotientInfo {
  std::size_t rank = 0;
  std::size_t degree = 0;  // truncation degree at which the dimension stabilised
  std::vector<XPolynomial::Exponent> basis_monomials;
};

/// Rank over the integers of the presented ring; point base only.
QuotientInfo quotient_info(const Presentation& p, unsigned max_degree = 16);
std::size_t quotient_rank(const Presentation& p);

/// Rank of the images of the given monomials under the evaluation map,
/// witnessed at a seeded random rational point.
std::size_t evaluation_image_rank(const Fan& fan, const std::vector<XPolynomial::Exponent>& monomials,
                                  std::uint64_t seed = 0);

}  // namespace eqk

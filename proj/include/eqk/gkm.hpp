#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "eqk/fan.hpp"
#include "eqk/laurent.hpp"
#include "eqk/lattice_weyl.hpp"

namespace eqk {

struct FixedPointLabel {
  enum class Kind { Curve, Wonderful, Z };
  Kind kind = Kind::Curve;
  std::size_t point = 0;  // k, or the cone sigma
  std::size_t u = 0;      // wonderful labels only
  std::size_t v = 0;

  friend bool operator==(const FixedPointLabel&, const FixedPointLabel&) = default;
  friend auto operator<=>(const FixedPointLabel&, const FixedPointLabel&) = default;
};

/// A family of Laurent polynomials indexed by fixed-point labels.
struct PiecewiseElement {
  std::vector<FixedPointLabel> labels;
  std::vector<LaurentPoly> values;

  std::size_t rank() const { return values.empty() ? 0 : values.front().rank(); }
  friend bool operator==(const PiecewiseElement&, const PiecewiseElement&) = default;
};

std::vector<FixedPointLabel> curve_labels(std::size_t points);
/// (sigma, u, v) in lexicographic order.
std::vector<FixedPointLabel> wonderful_labels(std::size_t cones, std::size_t group_order);
std::vector<FixedPointLabel> z_labels(std::size_t cones);

/// Same value at every label.
PiecewiseElement constant_family(const std::vector<FixedPointLabel>& labels, const LaurentPoly& value);

PiecewiseElement pointwise_add(const PiecewiseElement& a, const PiecewiseElement& b);
PiecewiseElement pointwise_mul(const PiecewiseElement& a, const PiecewiseElement& b);
PiecewiseElement scale(const LaurentPoly& s, const PiecewiseElement& a);

// --- curve ring --------------------------------------------------------------

struct CurveDatum {
  std::size_t i = 0;
  std::size_t j = 0;
  LatticeVector chi;
};

struct CurveModel {
  std::size_t points = 0;
  std::size_t rank = 0;
  std::vector<CurveDatum> curves;
};

/// Fixed points = maximal cones; one curve per pair of cones with a common
/// facet, weighted by the facet normal.
CurveModel curve_model_from_fan(const Fan& fan);

/// y_i - y_j divisible by 1 - e^{-chi} for the single curve.
bool member_of_Yij(const PiecewiseElement& e, const CurveDatum& curve);
/// Membership in the curve ring: all curves at once.
bool member_of_Y(const PiecewiseElement& e, const CurveModel& model);
/// Indices of the curves whose congruence fails.
std::vector<std::size_t> failing_curves(const PiecewiseElement& e, const CurveModel& model);

// --- wonderful ring and Z ----------------------------------------------------

/// Congruences over labels (sigma, u, v), values over the doubled lattice:
/// (i) f(s, u s_a, v s_a) = f(s, u, v) mod 1 - e^{-(u(a), v(a))} where sigma
///     has a facet orthogonal to a;
/// (ii) f(s, u, v) = f(s', u, v) mod 1 - e^{-(chi, -chi)} across common facets.
bool member_of_wonderful_Y(const PiecewiseElement& e, const WeylGroup& group, const Fan& positive);

struct ZCheck {
  bool member = true;
  std::vector<std::string> failures;
};

/// Congruences over labels sigma, values over (first, diagonal) variables:
/// (i) (1, s_a) f_sigma = f_sigma mod 1 - e^{-(a, 0)} where sigma has a facet
///     orthogonal to a;
/// (ii) f_sigma = f_sigma' mod 1 - e^{-(chi, 0)} across common facets.
ZCheck check_Z(const PiecewiseElement& e, const WeylGroup& group, const Fan& positive);
bool member_of_Z(const PiecewiseElement& e, const WeylGroup& group, const Fan& positive);

/// (1, w): w acting on the second half of the doubled lattice.
IntMatrix second_factor_action(const WeylGroup& group, std::size_t w);

// --- random elements for sampled checks -------------------------------------

LaurentPoly random_laurent(std::size_t rank, std::mt19937_64& rng, std::size_t max_terms = 3, Coord exp_radius = 2,
                           long coeff_radius = 3);

/// Random curve-ring member: a constant plus multiples of local Euler classes.
PiecewiseElement random_Y_member(const CurveModel& model, std::mt19937_64& rng);
/// Random family with independent values (usually not a member).
PiecewiseElement random_family(const CurveModel& model, std::mt19937_64& rng);

}  // namespace eqk

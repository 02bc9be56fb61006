#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "eqk/fan.hpp"
#include "eqk/gkm.hpp"
#include "eqk/laurent.hpp"
#include "eqk/lattice_weyl.hpp"
#include "eqk/presentations.hpp"
#include "eqk/steinberg.hpp"

namespace eqk {

/// mu_I = prod_{alpha in I} (1 - e^{-alpha}) over the weight lattice.
LaurentPoly mu(const RootDatum& datum, RootSubset subset);
/// lambda_I: mu_I in the first factor of the doubled lattice.
LaurentPoly lambda_I(const RootDatum& datum, RootSubset subset);

/// Element of the free module over the coefficient ring K (piecewise over the
/// cones of F_+, doubled-lattice values), keyed by basis element v.
struct KModuleElement {
  std::map<std::size_t, PiecewiseElement> coefficients;
  friend bool operator==(const KModuleElement&, const KModuleElement&) = default;
};

class RegCompModel {
 public:
  /// Point base only; the chamber fan defaults to the (smooth) chamber.
  RegCompModel(const RootDatum& datum, const std::optional<Fan>& subdivision = std::nullopt);

  const WeylGroup& group() const { return group_; }
  const RootDatum& datum() const { return group_.datum(); }
  const ChamberFan& chamber_fan() const { return fan_; }
  const Fan& positive_fan() const { return fan_.positive; }
  const BaseRingSpec& base() const { return base_; }
  const SteinbergSolver& solver() const { return solver_; }
  std::size_t lattice_rank() const { return datum().rank(); }
  std::size_t cone_count() const { return fan_.positive.cone_count(); }

  /// Basis (I, v) in element order; I is the right descent set of v.
  const std::vector<std::size_t>& basis() const { return basis_; }
  RootSubset cell(std::size_t v) const { return group_.right_descents(v); }
  const LaurentPoly& f(std::size_t v) const { return solver_.f(v); }

  /// a^w_{v,v'} for every w in the basis of cells I u I' (zeros included).
  const StructureTable& structure_table() const { return table_; }
  const LaurentPoly& lambda(RootSubset subset) const { return lambda_.at(subset.bits()); }

  // Fault injection for mutation tests.
  void corrupt_structure_constant(std::size_t v, std::size_t vp, std::size_t w, const BigInt& delta);
  void corrupt_lambda(RootSubset subset, const BigInt& delta);

  std::vector<FixedPointLabel> labels() const { return z_labels(cone_count()); }
  PiecewiseElement k_constant(const LaurentPoly& doubled) const;
  KModuleElement zero() const;
  KModuleElement basis_element(std::size_t v) const;
  KModuleElement one() const { return basis_element(WeylGroup::identity()); }

 private:
  WeylGroup group_;
  ChamberFan fan_;
  BaseRingSpec base_;
  SteinbergSolver solver_;
  std::vector<std::size_t> basis_;
  StructureTable table_;
  std::vector<LaurentPoly> lambda_;
};

KModuleElement add(const RegCompModel& model, const KModuleElement& a, const KModuleElement& b);
/// Bilinear extension of the closed-form product of basis elements.
KModuleElement multiply(const RegCompModel& model, const KModuleElement& a, const KModuleElement& b);

/// Variable assignment used by embed_to_Z. The canonical choice is
/// {swap_coefficient=false, basis_in_first=false, euler_twist=true}.
struct EmbedConvention {
  bool swap_coefficient = false;  // swap the two lattice halves of K-values
  bool basis_in_first = false;    // f_v in the first factor (otherwise second)
  bool euler_twist = true;        // multiply by mu_{I(v)} in the other factor

  std::string str() const;
  friend bool operator==(const EmbedConvention&, const EmbedConvention&) = default;
};

/// sum_v k_v * mu_{I(v)}(first) * f_v(second), cone by cone.
PiecewiseElement embed_to_Z(const RegCompModel& model, const KModuleElement& x, const EmbedConvention& conv = {});

/// Random element of K: cone-wise first-factor Laurent polynomials (facet
/// congruent) times W-invariants in the second factor.
PiecewiseElement random_k_value(const RegCompModel& model, std::mt19937_64& rng);
KModuleElement random_element(const RegCompModel& model, std::mt19937_64& rng);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t sample_pairs = 50;
  std::size_t sample_triples = 20;
  EmbedConvention convention{};
};

/// Homomorphism oracle: embed(a b) == embed(a) embed(b) for every basis pair
/// and for the sampled pairs. Returns the number of failing pairs.
std::size_t homomorphism_failures(const RegCompModel& model, const std::vector<std::pair<KModuleElement, KModuleElement>>& pairs,
                                  const EmbedConvention& conv = {});
std::size_t homomorphism_failures_serial(const RegCompModel& model,
                                         const std::vector<std::pair<KModuleElement, KModuleElement>>& pairs,
                                         const EmbedConvention& conv = {});
/// All ordered basis pairs followed by `samples` seeded random pairs.
std::vector<std::pair<KModuleElement, KModuleElement>> oracle_pairs(const RegCompModel& model, std::uint64_t seed,
                                                                    std::size_t samples);

/// Rank (at a seeded random point) of the matrix ((1, w) embed(f_v))_{w, v} on
/// the first cone; |W| means the basis images are independent over the
/// (1 x W)-invariant coefficients.
std::size_t basis_image_rank(const RegCompModel& model, std::uint64_t seed = 0, const EmbedConvention& conv = {});

VerifyReport verify_model(const RegCompModel& model, const VerifyOptions& options = {});

}  // namespace eqk

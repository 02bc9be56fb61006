#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "eqk/int_lattice.hpp"
#include "eqk/lattice_weyl.hpp"

namespace eqk {

/// Simplicial cone given by its primitive ray generators in N.
struct Cone {
  std::vector<LatticeVector> rays;
};

/// Fan with explicit maximal cones (ray-index lists into `rays`, sorted).
/// N is dual to the weight lattice: <lambda, n> is the plain dot product.
class Fan {
 public:
  Fan() = default;
  /// Validates: nonzero primitive rays, indices in range, simplicial cones.
  Fan(std::size_t rank, std::vector<LatticeVector> rays, std::vector<std::vector<std::size_t>> max_cones);

  std::size_t rank() const { return rank_; }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const std::vector<std::vector<std::size_t>>& max_cones() const { return cones_; }
  std::size_t cone_count() const { return cones_.size(); }
  Cone cone(std::size_t i) const;

  friend bool operator==(const Fan&, const Fan&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<std::vector<std::size_t>> cones_;
};

/// Every maximal cone's ray matrix has all elementary divisors equal to 1.
bool is_smooth(const Fan& fan);
bool is_smooth(const Cone& cone, std::size_t rank);

struct Facet {
  std::vector<std::size_t> rays;  // shared ray indices
  LatticeVector chi;              // primitive, zero on the facet, positive on the first cone
};

/// Common codimension-one face of maximal cones a and b, if any.
std::optional<Facet> common_facet(const Fan& fan, std::size_t a, std::size_t b);

/// True if some facet of the full-dimensional cone lies in <alpha, .> = 0.
bool facet_orthogonal_to_root(const Cone& cone, const LatticeVector& alpha);

/// The m in the weight lattice with <m, v_j> = delta_ij over the rays of a
/// smooth full-dimensional cone.
LatticeVector dual_basis_character(const Cone& cone, std::size_t ray);

/// Point membership (exact). Interior means all barycentric weights > 0.
bool cone_contains(const Cone& cone, const LatticeVector& point);
bool cone_interior_contains(const Cone& cone, const LatticeVector& point);

/// Monte-Carlo completeness: `samples` seeded random points each lie in some
/// maximal cone and in the interior of at most one.
bool is_complete(const Fan& fan, std::uint64_t seed = 0, std::size_t samples = 1000);

/// The positive chamber {n : <alpha_i, n> >= 0} as a cone on the primitive
/// fundamental coweights.
Cone positive_chamber(const RootDatum& datum);

struct ChamberFan {
  Fan positive;  // subdivision of the positive chamber
  Fan full;      // all W-translates
};

/// Builds F = W F_+. Without a subdivision F_+ is the chamber itself, which
/// must then be smooth. InputError if the subdivision does not tile the
/// chamber or is not smooth, or if the datum has a central torus.
ChamberFan weyl_chamber_fan(const WeylGroup& group, const std::optional<Fan>& subdivision = std::nullopt);

/// Action of w on N, dual to its action on weights.
LatticeVector act_on_coweight(const WeylGroup& group, std::size_t w, const LatticeVector& n);

Fan fan_p1();
Fan fan_p2();
Fan fan_p1xp1();

}  // namespace eqk

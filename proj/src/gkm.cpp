#include "eqk/gkm.hpp"

#include "eqk/errors.hpp"

namespace eqk {

namespace {

void require_same_labels(const PiecewiseElement& a, const PiecewiseElement& b) {
  if (a.labels != b.labels) throw InputError("piecewise elements have different label sets");
}

void require_labels(const PiecewiseElement& e, const std::vector<FixedPointLabel>& expected, std::size_t rank) {
  if (e.labels != expected) throw InputError("piecewise element labels do not match the model");
  if (e.values.size() != e.labels.size()) throw InputError("piecewise element has a missing value");
  for (const auto& v : e.values)
    if (v.rank() != rank) throw InputError("piecewise value has the wrong lattice rank");
}

bool divides(const LaurentPoly& diff, const LatticeVector& chi) { return divide_exact(diff, chi).has_value(); }

}  // namespace

std::vector<FixedPointLabel> curve_labels(std::size_t points) {
  std::vector<FixedPointLabel> out;
  for (std::size_t k = 0; k < points; ++k) out.push_back({FixedPointLabel::Kind::Curve, k, 0, 0});
  return out;
}

std::vector<FixedPointLabel> wonderful_labels(std::size_t cones, std::size_t group_order) {
  std::vector<FixedPointLabel> out;
  for (std::size_t s = 0; s < cones; ++s)
    for (std::size_t u = 0; u < group_order; ++u)
      for (std::size_t v = 0; v < group_order; ++v) out.push_back({FixedPointLabel::Kind::Wonderful, s, u, v});
  return out;
}

std::vector<FixedPointLabel> z_labels(std::size_t cones) {
  std::vector<FixedPointLabel> out;
  for (std::size_t s = 0; s < cones; ++s) out.push_back({FixedPointLabel::Kind::Z, s, 0, 0});
  return out;
}

PiecewiseElement constant_family(const std::vector<FixedPointLabel>& labels, const LaurentPoly& value) {
  return {labels, std::vector<LaurentPoly>(labels.size(), value)};
}

PiecewiseElement pointwise_add(const PiecewiseElement& a, const PiecewiseElement& b) {
  require_same_labels(a, b);
  PiecewiseElement r = a;
  for (std::size_t k = 0; k < r.values.size(); ++k) r.values[k] += b.values[k];
  return r;
}

PiecewiseElement pointwise_mul(const PiecewiseElement& a, const PiecewiseElement& b) {
  require_same_labels(a, b);
  PiecewiseElement r = a;
  for (std::size_t k = 0; k < r.values.size(); ++k) r.values[k] = a.values[k] * b.values[k];
  return r;
}

PiecewiseElement scale(const LaurentPoly& s, const PiecewiseElement& a) {
  PiecewiseElement r = a;
  for (auto& v : r.values) v = s * v;
  return r;
}

CurveModel curve_model_from_fan(const Fan& fan) {
  CurveModel m{fan.cone_count(), fan.rank(), {}};
  for (std::size_t a = 0; a < fan.cone_count(); ++a)
    for (std::size_t b = a + 1; b < fan.cone_count(); ++b)
      if (auto f = common_facet(fan, a, b)) m.curves.push_back({a, b, f->chi});
  return m;
}

bool member_of_Yij(const PiecewiseElement& e, const CurveDatum& curve) {
  if (curve.i >= e.values.size() || curve.j >= e.values.size() || curve.i == curve.j)
    throw InputError("curve endpoints do not match the element's labels");
  return divides(e.values[curve.i] - e.values[curve.j], curve.chi);
}

std::vector<std::size_t> failing_curves(const PiecewiseElement& e, const CurveModel& model) {
  require_labels(e, curve_labels(model.points), model.rank);
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < model.curves.size(); ++c)
    if (!member_of_Yij(e, model.curves[c])) out.push_back(c);
  return out;
}

bool member_of_Y(const PiecewiseElement& e, const CurveModel& model) { return failing_curves(e, model).empty(); }

IntMatrix second_factor_action(const WeylGroup& group, std::size_t w) {
  const std::size_t n = group.datum().rank();
  IntMatrix m = IntMatrix::identity(2 * n);
  const IntMatrix& mw = group.element(w).matrix;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(n + i, n + j) = mw(i, j);
  return m;
}

bool member_of_wonderful_Y(const PiecewiseElement& e, const WeylGroup& group, const Fan& positive) {
  const std::size_t n = group.datum().rank();
  const std::size_t order = group.order();
  require_labels(e, wonderful_labels(positive.cone_count(), order), 2 * n);
  auto at = [&](std::size_t s, std::size_t u, std::size_t v) -> const LaurentPoly& {
    return e.values[(s * order + u) * order + v];
  };
  for (std::size_t s = 0; s < positive.cone_count(); ++s) {
    const Cone cone = positive.cone(s);
    for (auto a : group.datum().simple_roots().indices()) {
      const LatticeVector alpha = group.datum().simple_root(a);
      if (!facet_orthogonal_to_root(cone, alpha)) continue;
      const std::size_t sa = group.simple_reflection(a);
      for (std::size_t u = 0; u < order; ++u)
        for (std::size_t v = 0; v < order; ++v) {
          const LatticeVector chi = concat(group.act(u, alpha), group.act(v, alpha));
          if (!divides(at(s, group.multiply(u, sa), group.multiply(v, sa)) - at(s, u, v), chi)) return false;
        }
    }
  }
  for (std::size_t s = 0; s < positive.cone_count(); ++s)
    for (std::size_t t = s + 1; t < positive.cone_count(); ++t) {
      const auto f = common_facet(positive, s, t);
      if (!f) continue;
      const LatticeVector chi = concat(f->chi, -f->chi);
      for (std::size_t u = 0; u < order; ++u)
        for (std::size_t v = 0; v < order; ++v)
          if (!divides(at(s, u, v) - at(t, u, v), chi)) return false;
    }
  return true;
}

ZCheck check_Z(const PiecewiseElement& e, const WeylGroup& group, const Fan& positive) {
  const std::size_t n = group.datum().rank();
  require_labels(e, z_labels(positive.cone_count()), 2 * n);
  ZCheck r;
  for (std::size_t s = 0; s < positive.cone_count(); ++s) {
    const Cone cone = positive.cone(s);
    for (auto a : group.datum().simple_roots().indices()) {
      const LatticeVector alpha = group.datum().simple_root(a);
      if (!facet_orthogonal_to_root(cone, alpha)) continue;
      const LaurentPoly moved = apply_matrix(second_factor_action(group, group.simple_reflection(a)), e.values[s]);
      if (!divides(moved - e.values[s], concat(alpha, LatticeVector(n)))) {
        r.member = false;
        r.failures.push_back("(i) cone " + std::to_string(s) + ", root " + std::to_string(a + 1));
      }
    }
  }
  for (std::size_t s = 0; s < positive.cone_count(); ++s)
    for (std::size_t t = s + 1; t < positive.cone_count(); ++t) {
      const auto f = common_facet(positive, s, t);
      if (!f) continue;
      if (!divides(e.values[s] - e.values[t], concat(f->chi, LatticeVector(n)))) {
        r.member = false;
        r.failures.push_back("(ii) cones " + std::to_string(s) + "," + std::to_string(t));
      }
    }
  return r;
}

bool member_of_Z(const PiecewiseElement& e, const WeylGroup& group, const Fan& positive) {
  return check_Z(e, group, positive).member;
}

LaurentPoly random_laurent(std::size_t rank, std::mt19937_64& rng, std::size_t max_terms, Coord exp_radius,
                           long coeff_radius) {
  std::uniform_int_distribution<std::size_t> nterms(0, max_terms);
  std::uniform_int_distribution<Coord> expo(-exp_radius, exp_radius);
  std::uniform_int_distribution<long> coeff(-coeff_radius, coeff_radius);
  LaurentPoly p(rank);
  const std::size_t t = nterms(rng);
  for (std::size_t k = 0; k < t; ++k) {
    LatticeVector e(rank);
    for (std::size_t i = 0; i < rank; ++i) e[i] = expo(rng);
    p.add_term(e, coeff(rng));
  }
  return p;
}

PiecewiseElement random_Y_member(const CurveModel& model, std::mt19937_64& rng) {
  PiecewiseElement e = constant_family(curve_labels(model.points), random_laurent(model.rank, rng));
  for (std::size_t k = 0; k < model.points; ++k) {
    LaurentPoly euler = LaurentPoly::one(model.rank);
    for (const auto& c : model.curves)
      if (c.i == k || c.j == k) euler *= one_minus_exp_neg(c.chi);
    e.values[k] += random_laurent(model.rank, rng, 2, 1) * euler;
  }
  return e;
}

PiecewiseElement random_family(const CurveModel& model, std::mt19937_64& rng) {
  PiecewiseElement e = constant_family(curve_labels(model.points), LaurentPoly(model.rank));
  for (auto& v : e.values) v = random_laurent(model.rank, rng);
  return e;
}

}  // namespace eqk

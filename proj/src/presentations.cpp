#include "eqk/presentations.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "eqk/errors.hpp"
#include "eqk/rational_linalg.hpp"

namespace eqk {

// --- base ring ----------------------------------------------------------------

BaseRingSpec BaseRingSpec::point() { return BaseRingSpec{}; }

BaseRingSpec BaseRingSpec::torus_equivariant(std::size_t n) {
  BaseRingSpec b;
  b.name = "torus";
  for (std::size_t k = 0; k < n; ++k) b.generators.push_back("t" + std::to_string(k + 1));
  b.xi = IntMatrix::identity(n);
  b.invariant_map = InvariantMap::Inclusion;
  return b;
}

LaurentPoly BaseRingSpec::xi_of(const LatticeVector& u) const {
  if (xi.rows() == 0) return LaurentPoly::one(base_rank());
  if (xi.rows() != base_rank() || xi.cols() != u.rank()) throw InputError("base character map has the wrong shape");
  return LaurentPoly::monomial(xi * u);
}

std::string base_coeff_str(const LaurentPoly& c, const std::vector<std::string>& names) {
  if (c.rank() == 0 || c.is_constant()) return to_string(c.is_zero() ? BigInt(0) : c.coeff(LatticeVector(c.rank())));
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, k] : c.terms()) {
    BigInt mag = abs(k);
    os << (first ? (k < 0 ? "-" : "") : (k < 0 ? " - " : " + "));
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.rank(); ++i) {
      if (e[i] == 0) continue;
      const std::string name = i < names.size() ? names[i] : "t" + std::to_string(i + 1);
      factors.push_back(e[i] == 1 ? name : name + "^" + std::to_string(e[i]));
    }
    if (factors.empty()) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
  }
  return os.str();
}

// --- polynomials in x ---------------------------------------------------------

XPolynomial XPolynomial::constant(std::size_t num_vars, const LaurentPoly& c) {
  XPolynomial p(num_vars, c.rank());
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

XPolynomial XPolynomial::variable(std::size_t num_vars, std::size_t base_rank, std::size_t i) {
  XPolynomial p(num_vars, base_rank);
  Exponent e(num_vars, 0);
  e[i] = 1;
  p.add_term(e, LaurentPoly::one(base_rank));
  return p;
}

void XPolynomial::add_term(const Exponent& e, const LaurentPoly& c) {
  if (e.size() != vars_ || c.rank() != base_rank_) throw InputError("polynomial shape mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

XPolynomial& XPolynomial::operator+=(const XPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

XPolynomial& XPolynomial::operator-=(const XPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

XPolynomial operator*(const XPolynomial& a, const XPolynomial& b) {
  if (a.vars_ != b.vars_ || a.base_rank_ != b.base_rank_) throw InputError("polynomial shape mismatch");
  XPolynomial r(a.vars_, a.base_rank_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      XPolynomial::Exponent e(a.vars_);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

std::string XPolynomial::str(const std::vector<std::string>& base_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coeff = base_coeff_str(c, base_names);
    const bool simple = c.size() == 1;
    bool negative = simple && coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << '-';
    first = false;
    if (mono.empty()) {
      os << (simple ? coeff : "(" + coeff + ")");
    } else if (coeff == "1") {
      os << mono;
    } else {
      os << (simple ? coeff : "(" + coeff + ")") << '*' << mono;
    }
  }
  return os.str();
}

// --- toric --------------------------------------------------------------------

namespace {

XPolynomial one_minus_x_pow(std::size_t vars, std::size_t base_rank, std::size_t i, Coord n) {
  XPolynomial base = XPolynomial::constant(vars, LaurentPoly::one(base_rank)) - XPolynomial::variable(vars, base_rank, i);
  XPolynomial r = XPolynomial::constant(vars, LaurentPoly::one(base_rank));
  for (Coord k = 0; k < n; ++k) r = r * base;
  return r;
}

std::vector<std::uint32_t> face_masks(const Fan& fan) {
  std::set<std::uint32_t> faces;
  for (const auto& c : fan.max_cones()) {
    std::uint32_t m = 0;
    for (auto r : c) m |= 1u << r;
    for (std::uint32_t sub = m;; sub = (sub - 1) & m) {
      faces.insert(sub);
      if (sub == 0) break;
    }
  }
  return {faces.begin(), faces.end()};
}

void require_smooth_complete(const Fan& fan) {
  if (!is_smooth(fan)) throw InputError("fan is not smooth");
  if (!is_complete(fan)) throw InputError("fan is not complete");
}

}  // namespace

XPolynomial toric_character_relation(const Fan& fan, const BaseRingSpec& base, const LatticeVector& u) {
  if (u.rank() != fan.rank()) throw InputError("character rank mismatch");
  const std::size_t d = fan.rays().size();
  const std::size_t m = base.base_rank();
  XPolynomial pos = XPolynomial::constant(d, LaurentPoly::one(m));
  XPolynomial neg = XPolynomial::constant(d, base.xi_of(u));
  for (std::size_t i = 0; i < d; ++i) {
    const Coord p = dot(u, fan.rays()[i]);
    if (p > 0) pos = pos * one_minus_x_pow(d, m, i, p);
    if (p < 0) neg = neg * one_minus_x_pow(d, m, i, -p);
  }
  return pos - neg;
}

std::vector<std::vector<std::size_t>> minimal_non_faces(const Fan& fan) {
  const std::size_t d = fan.rays().size();
  if (d > 24) throw InputError("too many rays for non-face enumeration");
  const auto faces = face_masks(fan);
  auto is_face = [&](std::uint32_t m) { return std::binary_search(faces.begin(), faces.end(), m); };
  std::vector<std::uint32_t> found;
  for (std::uint32_t m = 1; m < (1u << d); ++m) {
    if (static_cast<std::size_t>(std::popcount(m)) > fan.rank() + 1 || is_face(m)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < d && minimal; ++i)
      if ((m >> i) & 1u) minimal = is_face(m & ~(1u << i));
    if (minimal) found.push_back(m);
  }
  // by size, then lexicographically on indices
  std::vector<std::vector<std::size_t>> out;
  for (auto m : found) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < d; ++i)
      if ((m >> i) & 1u) idx.push_back(i);
    out.push_back(idx);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

Presentation toric_presentation(const Fan& fan, const BaseRingSpec& base) {
  require_smooth_complete(fan);
  const std::size_t d = fan.rays().size();
  const std::size_t m = base.base_rank();
  Presentation p;
  p.kind = Presentation::Kind::Toric;
  p.base = base;
  p.fan = fan;
  for (std::size_t i = 0; i < d; ++i) p.generators.push_back("x" + std::to_string(i + 1));
  for (const auto& nf : minimal_non_faces(fan)) {
    XPolynomial mono = XPolynomial::constant(d, LaurentPoly::one(m));
    for (auto i : nf) mono = mono * XPolynomial::variable(d, m, i);
    p.relations.push_back({"monomial", nf, LatticeVector(), mono});
  }
  for (std::size_t k = 0; k < fan.rank(); ++k) {
    const LatticeVector u = LatticeVector::unit(fan.rank(), k);
    p.relations.push_back({"character", {}, u, toric_character_relation(fan, base, u)});
  }
  return p;
}

// --- invariants and flag presentations -----------------------------------------

std::vector<LaurentPoly> invariant_generators(const WeylGroup& group, InvariantGenerators gens) {
  const RootDatum& d = group.datum();
  std::vector<std::size_t> all(group.order());
  for (std::size_t w = 0; w < all.size(); ++w) all[w] = w;
  std::vector<LaurentPoly> out;
  for (std::size_t i = 0; i < d.semisimple_rank(); ++i) {
    const LatticeVector omega = d.fundamental_weight(i);
    out.push_back(gens == InvariantGenerators::OrbitSums ? orbit_sum(group, omega, all) : weyl_character(group, omega));
  }
  return out;
}

LaurentPoly decompose_invariant(const WeylGroup& group, const LaurentPoly& f, InvariantGenerators which) {
  const RootDatum& d = group.datum();
  if (f.rank() != d.rank()) throw InputError("polynomial rank does not match the root datum");
  if (!is_invariant(group, f, d.simple_roots())) throw InputError("decompose_invariant: input is not W-invariant");
  const std::size_t c = d.central_rank();
  const auto gens = invariant_generators(group, which);
  LaurentPoly rem = f;
  LaurentPoly out(d.rank());
  while (!rem.is_zero()) {
    // leading dominant exponent by height <lambda, rho^vee>
    const LatticeVector* lead = nullptr;
    Coord best = 0;
    for (const auto& [e, k] : rem.terms()) {
      bool dominant = true;
      Coord h = 0;
      for (std::size_t i = c; i < e.rank(); ++i) {
        dominant = dominant && e[i] >= 0;
        h += e[i];
      }
      if (dominant && (!lead || h > best || (h == best && *lead < e))) {
        lead = &e;
        best = h;
      }
    }
    if (!lead) throw ConsistencyError("invariant without a dominant term");
    const LatticeVector e = *lead;
    const BigInt k = rem.coeff(e);
    LatticeVector central(d.rank());
    for (std::size_t i = 0; i < c; ++i) central[i] = e[i];
    LaurentPoly term = LaurentPoly::monomial(central, k);
    for (std::size_t i = 0; i < d.semisimple_rank(); ++i) term *= pow(gens[i], static_cast<unsigned>(e[c + i]));
    rem -= term;
    out.add_term(e, k);
  }
  return out;
}

LaurentPoly apply_invariant_map(const WeylGroup& group, const BaseRingSpec& base, const LaurentPoly& f) {
  const RootDatum& d = group.datum();
  const std::size_t m = base.base_rank();
  const std::size_t c = d.central_rank();
  const std::size_t r = d.semisimple_rank();
  std::vector<LaurentPoly> images;
  std::vector<LatticeVector> central;
  switch (base.invariant_map) {
    case BaseRingSpec::InvariantMap::Augmentation:
      for (const auto& g : invariant_generators(group, base.generating_set))
        images.push_back(LaurentPoly::constant(m, augmentation(g)));
      central.assign(c, LatticeVector(m));
      break;
    case BaseRingSpec::InvariantMap::Inclusion:
      if (m != d.rank()) throw InputError("inclusion map needs a base of the datum's rank");
      images = invariant_generators(group, base.generating_set);
      for (std::size_t i = 0; i < c; ++i) central.push_back(LatticeVector::unit(m, i));
      break;
    case BaseRingSpec::InvariantMap::Explicit:
      images = base.invariant_images;
      central = base.central_images;
      if (images.size() != r || central.size() != c) throw InputError("invariant map not defined on a generating set");
      for (const auto& im : images)
        if (im.rank() != m) throw InputError("invariant image has the wrong rank");
      for (const auto& z : central)
        if (z.rank() != m) throw InputError("central image has the wrong rank");
      break;
  }
  const LaurentPoly poly = decompose_invariant(group, f, base.generating_set);
  LaurentPoly out(m);
  for (const auto& [e, k] : poly.terms()) {
    LatticeVector z(m);
    for (std::size_t i = 0; i < c; ++i) z += e[i] * central[i];
    LaurentPoly term = LaurentPoly::monomial(z, k);
    for (std::size_t i = 0; i < r; ++i) term *= pow(images[i], static_cast<unsigned>(e[c + i]));
    out += term;
  }
  return out;
}

Presentation flag_presentation(const SteinbergSolver& solver, RootSubset parabolic, const BaseRingSpec& base) {
  const WeylGroup& group = solver.group();
  const RootDatum& d = group.datum();
  if (!parabolic.is_subset_of(d.simple_roots())) throw InputError("parabolic subset out of range");
  Presentation p;
  p.kind = Presentation::Kind::Flag;
  p.base = base;
  p.datum_label = d.label();
  p.parabolic = parabolic;
  p.basis = group.minimal_coset_reps(parabolic);
  for (auto v : p.basis) p.generators.push_back("f[" + group.element(v).word_string() + "]");
  for (std::size_t a = 0; a < p.basis.size(); ++a)
    for (std::size_t b = a; b < p.basis.size(); ++b) {
      ProductRule rule{p.basis[a], p.basis[b], {}};
      for (const auto& [w, coeff] : solver.structure_constants(p.basis[a], p.basis[b])) {
        LaurentPoly image = apply_invariant_map(group, base, coeff);
        if (!image.is_zero()) rule.coeffs.emplace(w, std::move(image));
      }
      p.products.push_back(std::move(rule));
    }
  return p;
}

Presentation flag_presentation(const WeylGroup& group, RootSubset parabolic, const BaseRingSpec& base) {
  return flag_presentation(SteinbergSolver(group), parabolic, base);
}

std::map<std::size_t, LaurentPoly> flag_reduce(const SteinbergSolver& solver, const Presentation& p,
                                               const LaurentPoly& g) {
  if (p.kind != Presentation::Kind::Flag) throw InputError("not a flag presentation");
  const RootSubset cells = solver.group().datum().simple_roots() - p.parabolic;
  std::map<std::size_t, LaurentPoly> out;
  for (const auto& [v, c] : solver.expand(g, cells)) out.emplace(v, apply_invariant_map(solver.group(), p.base, c));
  return out;
}

// --- evaluation map -------------------------------------------------------------

namespace {

std::vector<PiecewiseElement> evaluation_images(const Fan& fan, int sign) {
  const std::size_t n = fan.rank();
  std::vector<PiecewiseElement> out;
  for (std::size_t i = 0; i < fan.rays().size(); ++i) {
    PiecewiseElement e = constant_family(curve_labels(fan.cone_count()), LaurentPoly(n));
    for (std::size_t s = 0; s < fan.cone_count(); ++s) {
      const auto& c = fan.max_cones()[s];
      const auto pos = std::find(c.begin(), c.end(), i);
      if (pos == c.end()) continue;
      const LatticeVector m = dual_basis_character(fan.cone(s), static_cast<std::size_t>(pos - c.begin()));
      e.values[s] = LaurentPoly::one(n) - LaurentPoly::monomial(static_cast<Coord>(sign) * m);
    }
    out.push_back(std::move(e));
  }
  return out;
}

bool relations_vanish(const Presentation& p, const std::vector<PiecewiseElement>& images) {
  for (const auto& r : p.relations) {
    const auto img = evaluate_relation(r.poly, images);
    for (const auto& v : img.values)
      if (!v.is_zero()) return false;
  }
  return true;
}

}  // namespace

int evaluation_sign() {
  static const int sign = [] {
    const Fan p1 = fan_p1();
    const Presentation p = toric_presentation(p1, BaseRingSpec::torus_equivariant(1));
    std::vector<int> ok;
    for (int s : {1, -1})
      if (relations_vanish(p, evaluation_images(p1, s))) ok.push_back(s);
    if (ok.size() != 1) throw ConsistencyError("evaluation map sign could not be calibrated on P^1");
    return ok.front();
  }();
  return sign;
}

std::vector<PiecewiseElement> toric_evaluation_map(const Fan& fan) {
  require_smooth_complete(fan);
  return evaluation_images(fan, evaluation_sign());
}

PiecewiseElement evaluate_relation(const XPolynomial& poly, const std::vector<PiecewiseElement>& images) {
  if (images.size() != poly.num_vars()) throw InputError("evaluation map does not match the generators");
  if (images.empty()) throw InputError("empty evaluation map");
  const std::size_t n = images.front().rank();
  const std::size_t m = poly.base_rank();
  if (m != 0 && m != n) throw InputError("relation base is neither the point nor the torus of the fan");
  PiecewiseElement out = constant_family(images.front().labels, LaurentPoly(n));
  for (const auto& [e, c] : poly.terms()) {
    const LaurentPoly coeff = m == 0 ? LaurentPoly::constant(n, c.coeff(LatticeVector(0))) : c;
    PiecewiseElement term = constant_family(images.front().labels, coeff);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) term = pointwise_mul(term, images[i]);
    out = pointwise_add(out, term);
  }
  return out;
}

// --- ranks ------------------------------------------------------------------------

namespace {

std::vector<XPolynomial::Exponent> monomials_up_to(std::size_t vars, unsigned degree) {
  std::vector<XPolynomial::Exponent> out;
  XPolynomial::Exponent e(vars, 0);
  // all exponents with total degree <= degree
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == vars) {
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, degree);
  auto deg = [](const XPolynomial::Exponent& x) {
    unsigned s = 0;
    for (auto k : x) s += k;
    return s;
  };
  // high degree first so that pivots land on high-degree monomials
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return deg(a) != deg(b) ? deg(a) > deg(b) : a > b;
  });
  return out;
}

}  // namespace

QuotientInfo quotient_info(const Presentation& p, unsigned max_degree) {
  if (p.kind == Presentation::Kind::Flag) return {p.basis.size(), 0, {}};
  if (!p.base.is_point()) throw InputError("quotient rank is only supported over the point base");
  const std::size_t vars = p.generators.size();
  std::optional<QuotientInfo> prev;
  for (unsigned D = 1; D <= max_degree; ++D) {
    const auto monos = monomials_up_to(vars, D);
    std::map<XPolynomial::Exponent, std::size_t> col;
    for (std::size_t j = 0; j < monos.size(); ++j) col.emplace(monos[j], j);
    std::vector<SparseRow> rows;
    for (const auto& r : p.relations)
      for (const auto& m : monos) {
        std::map<std::size_t, Rational> entries;
        for (const auto& [e, c] : r.poly.terms()) {
          XPolynomial::Exponent prod(vars);
          unsigned deg = 0;
          for (std::size_t i = 0; i < vars; ++i) deg += prod[i] = e[i] + m[i];
          if (deg > D) continue;  // truncation modulo (x)^{D+1}
          entries[col.at(prod)] += Rational(c.coeff(LatticeVector(0)));
        }
        SparseRow row;
        for (auto& [j, v] : entries)
          if (v != 0) row.emplace_back(j, v);
        if (!row.empty()) rows.push_back(std::move(row));
      }
    std::vector<std::size_t> order(monos.size());
    for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
    const Echelon ech = row_reduce(std::move(rows), order);
    QuotientInfo info{monos.size() - ech.rank, D, {}};
    for (auto j : ech.free_columns) info.basis_monomials.push_back(monos[j]);
    std::sort(info.basis_monomials.begin(), info.basis_monomials.end());
    if (prev && prev->rank == info.rank) return info;
    prev = std::move(info);
  }
  throw InputError("quotient did not stabilise within the degree bound (fan not complete?)");
}

std::size_t quotient_rank(const Presentation& p) { return quotient_info(p).rank; }

std::size_t evaluation_image_rank(const Fan& fan, const std::vector<XPolynomial::Exponent>& monomials,
                                  std::uint64_t seed) {
  const auto images = toric_evaluation_map(fan);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(1, 97), den(1, 89);
  std::vector<Rational> point(fan.rank());
  for (auto& x : point) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  std::vector<SparseRow> rows;
  for (const auto& m : monomials) {
    XPolynomial mono(images.size(), 0);
    mono.add_term(m, LaurentPoly::one(0));
    const auto img = evaluate_relation(mono, images);
    SparseRow row;
    for (std::size_t s = 0; s < img.values.size(); ++s) {
      const Rational v = evaluate(img.values[s], point);
      if (v != 0) row.emplace_back(s, v);
    }
    rows.push_back(std::move(row));
  }
  return rank(std::move(rows), fan.cone_count());
}

}  // namespace eqk

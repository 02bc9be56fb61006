#include "eqk/laurent.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "eqk/errors.hpp"

namespace eqk {

namespace {

struct ExponentHash {
  std::size_t operator()(const LatticeVector& v) const {
    std::size_t h = 0;
    for (auto c : v) h = h * 1000003u ^ std::hash<Coord>{}(c);
    return h;
  }
};

void require_rank(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.rank() != b.rank()) throw InputError("Laurent polynomial rank mismatch");
}

}  // namespace

LaurentPoly LaurentPoly::constant(std::size_t rank, const BigInt& c) {
  LaurentPoly p(rank);
  p.add_term(LatticeVector(rank), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const LatticeVector& lambda, const BigInt& coeff) {
  LaurentPoly p(lambda.rank());
  p.add_term(lambda, coeff);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

BigInt LaurentPoly::coeff(const LatticeVector& lambda) const {
  const auto it = terms_.find(lambda);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(const LatticeVector& lambda, const BigInt& c) {
  if (lambda.rank() != rank_) throw InputError("exponent rank mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_rank(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  require_rank(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_rank(a, b);
  LaurentPoly r(a.rank());
  if (a.terms_.empty() || b.terms_.empty()) return r;
  std::unordered_map<LatticeVector, BigInt, ExponentHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  LatticeVector e(a.rank());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.rank(); ++i) e[i] = ea[i] + eb[i];
      mpz_addmul(acc[e].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  for (auto& [exp, c] : acc)
    if (c != 0) r.terms_.emplace(exp, std::move(c));
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const BigInt& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= k;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e.is_zero()) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << ' ';
    os << "e^" << e.str();
  }
  return os.str();
}

LaurentPoly pow(const LaurentPoly& f, unsigned n) {
  LaurentPoly r = LaurentPoly::one(f.rank());
  for (unsigned k = 0; k < n; ++k) r *= f;
  return r;
}

LaurentPoly apply_matrix(const IntMatrix& m, const LaurentPoly& f) {
  if (m.cols() != f.rank()) throw InputError("matrix/polynomial rank mismatch");
  LaurentPoly r(m.rows());
  for (const auto& [e, c] : f.terms()) r.add_term(m * e, c);
  return r;
}

LaurentPoly weyl_act(const WeylElement& w, const LaurentPoly& f) { return apply_matrix(w.matrix, f); }

LaurentPoly weyl_act(const WeylGroup& group, std::size_t w, const LaurentPoly& f) {
  return apply_matrix(group.element(w).matrix, f);
}

bool is_invariant(const LaurentPoly& f, const std::vector<WeylElement>& gens) {
  return std::all_of(gens.begin(), gens.end(), [&](const WeylElement& g) { return weyl_act(g, f) == f; });
}

bool is_invariant(const WeylGroup& group, const LaurentPoly& f, RootSubset parabolic) {
  for (auto i : parabolic.indices())
    if (weyl_act(group, group.simple_reflection(i), f) != f) return false;
  return true;
}

LaurentPoly orbit_sum(const LatticeVector& lambda, const std::vector<WeylElement>& subgroup) {
  std::set<LatticeVector> orbit;
  for (const auto& w : subgroup) orbit.insert(act(w, lambda));
  if (orbit.empty()) orbit.insert(lambda);
  LaurentPoly r(lambda.rank());
  for (const auto& mu : orbit) r.add_term(mu, 1);
  return r;
}

LaurentPoly orbit_sum(const WeylGroup& group, const LatticeVector& lambda, const std::vector<std::size_t>& subgroup) {
  std::set<LatticeVector> orbit;
  for (auto w : subgroup) orbit.insert(group.act(w, lambda));
  if (orbit.empty()) orbit.insert(lambda);
  LaurentPoly r(lambda.rank());
  for (const auto& mu : orbit) r.add_term(mu, 1);
  return r;
}

LaurentPoly one_minus_exp_neg(const LatticeVector& chi) {
  LaurentPoly r = LaurentPoly::one(chi.rank());
  r.add_term(-chi, -1);
  return r;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LatticeVector& chi) {
  if (chi.rank() != f.rank()) throw InputError("character rank mismatch");
  if (chi.is_zero()) throw InputError("divide_exact: character must be nonzero");
  if (f.is_zero()) return LaurentPoly(f.rank());

  // After the change of basis chi = d e_0 the divisor is 1 - x^{-d} in the
  // first variable; divide each fibre over the remaining exponents.
  const PrimitiveSplit split = primitive_split(chi);
  const Coord d = split.multiplicity;
  std::map<std::vector<Coord>, std::map<Coord, BigInt>> fibres;
  for (const auto& [e, c] : f.terms()) {
    const LatticeVector t = split.transform * e;
    std::vector<Coord> rest(t.begin() + 1, t.end());
    fibres[rest][t[0]] = c;
  }

  LaurentPoly q(f.rank());
  for (const auto& [rest, g] : fibres) {
    const Coord lo = g.begin()->first;
    const Coord hi = g.rbegin()->first;
    // coefficient of x^a in q (1 - x^{-d}) is q_a - q_{a+d}
    std::map<Coord, BigInt> qa;
    for (Coord a = hi; a >= lo; --a) {
      BigInt v = 0;
      if (auto it = g.find(a); it != g.end()) v = it->second;
      if (auto it = qa.find(a + d); it != qa.end()) v += it->second;
      if (a < lo + d) {
        if (v != 0) return std::nullopt;
      } else if (v != 0) {
        qa.emplace(a, std::move(v));
      }
    }
    for (const auto& [a, c] : qa) {
      LatticeVector t(f.rank());
      t[0] = a;
      for (std::size_t k = 0; k < rest.size(); ++k) t[k + 1] = rest[k];
      q.add_term(split.inverse * t, c);
    }
  }
  if (q * one_minus_exp_neg(chi) != f) throw ConsistencyError("divide_exact round trip failed");
  return q;
}

BigInt augmentation(const LaurentPoly& f) {
  BigInt s = 0;
  for (const auto& [e, c] : f.terms()) s += c;
  return s;
}

Rational evaluate(const LaurentPoly& f, const std::vector<Rational>& point) {
  if (point.size() != f.rank()) throw InputError("evaluation point rank mismatch");
  Rational s = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational term = c;
    for (std::size_t k = 0; k < e.rank(); ++k) {
      if (e[k] == 0) continue;
      if (point[k] == 0) throw InputError("evaluation at a zero coordinate");
      Rational base = e[k] > 0 ? point[k] : Rational(1) / point[k];
      for (Coord n = e[k] > 0 ? e[k] : -e[k]; n > 0; --n) term *= base;
    }
    s += term;
  }
  return s;
}

LaurentPoly embed_first(const LaurentPoly& f) {
  LaurentPoly r(2 * f.rank());
  for (const auto& [e, c] : f.terms()) r.add_term(concat(e, LatticeVector(f.rank())), c);
  return r;
}

LaurentPoly embed_second(const LaurentPoly& f) {
  LaurentPoly r(2 * f.rank());
  for (const auto& [e, c] : f.terms()) r.add_term(concat(LatticeVector(f.rank()), e), c);
  return r;
}

LaurentPoly weyl_character(const WeylGroup& group, const LatticeVector& dominant) {
  const RootDatum& d = group.datum();
  LatticeVector rho(d.rank());
  for (std::size_t i = 0; i < d.semisimple_rank(); ++i) rho += d.fundamental_weight(i);
  LaurentPoly num(d.rank());
  for (std::size_t w = 0; w < group.order(); ++w) {
    const BigInt sign = group.element(w).length % 2 == 0 ? 1 : -1;
    num.add_term(group.act(w, dominant + rho) - rho, sign);
  }
  for (std::size_t k = 0; k < group.positive_root_count(); ++k) {
    auto q = divide_exact(num, group.roots()[k]);
    if (!q) throw InputError("weyl_character: weight is not dominant");
    num = std::move(*q);
  }
  return num;
}

}  // namespace eqk

#include "eqk/steinberg.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "eqk/errors.hpp"
#include "eqk/rational_linalg.hpp"

namespace eqk {

LaurentPoly p_v(const WeylGroup& group, std::size_t v) {
  const RootDatum& d = group.datum();
  LatticeVector lambda(d.rank());
  for (auto i : group.left_descents(v).indices()) lambda += d.fundamental_weight(i);
  return LaurentPoly::monomial(lambda);
}

namespace {

LatticeVector p_v_exponent(const WeylGroup& group, std::size_t v) {
  return p_v(group, v).terms().begin()->first;
}

}  // namespace

LaurentPoly steinberg_f(const WeylGroup& group, RootSubset parabolic, std::size_t v) {
  if (v >= group.order()) throw InputError("Weyl element index out of range");
  if (!(group.right_descents(v) & parabolic).empty())
    throw InputError("steinberg_f: " + group.element(v).word_string() + " is not a minimal coset representative");
  // Sum over W_P(v)\W_P of x^{-1} v^{-1} p_v = sum over the W_P-orbit.
  const LatticeVector mu = group.act(group.inverse(v), p_v_exponent(group, v));
  return orbit_sum(group, mu, group.parabolic_subgroup(parabolic));
}

LaurentPoly modified_f(const WeylGroup& group, std::size_t v) {
  return steinberg_f(group, group.datum().simple_roots() - group.right_descents(v), v);
}

SteinbergSolver::SteinbergSolver(const WeylGroup& group, int max_margin) : group_(group), max_margin_(max_margin) {
  for (std::size_t v = 0; v < group_.order(); ++v) {
    basis_.push_back(modified_f(group_, v));
    all_.push_back(v);
  }
}

SteinbergBasis SteinbergSolver::basis(RootSubset cells) const {
  if (!cells.is_subset_of(group_.datum().simple_roots())) throw InputError("cell subset out of range");
  SteinbergBasis b{cells, {}};
  for (std::size_t v = 0; v < group_.order(); ++v)
    if (group_.right_descents(v).is_subset_of(cells)) b.entries.push_back({v, group_.right_descents(v), basis_[v]});
  return b;
}

std::optional<Expansion> SteinbergSolver::try_expand(const LaurentPoly& g, const std::vector<std::size_t>& support,
                                                     Coord margin) const {
  const std::size_t n = g.rank();
  const std::size_t c = group_.datum().central_rank();
  auto radius = [n](const LaurentPoly& p) {
    std::vector<Coord> r(n, 0);
    for (const auto& [e, coeff] : p.terms())
      for (std::size_t k = 0; k < n; ++k) r[k] = std::max(r[k], e[k] < 0 ? -e[k] : e[k]);
    return r;
  };
  const auto grad = radius(g);

  // Columns: (v, lambda) -> orbit_sum(lambda) * f_v for dominant lambda whose
  // whole orbit fits the box |mu_k| <= |g|_k + |f_v|_k + margin. Cancellation
  // between basis elements can push c_v past supp(g) - supp(f_v), so the box
  // is symmetric and the caller widens it on failure.
  struct Column {
    std::size_t v;
    LatticeVector lambda;
  };
  std::vector<Column> cols;
  std::map<LatticeVector, std::size_t> row_of;
  std::vector<SparseRow> rows;
  auto row_index = [&](const LatticeVector& m) {
    auto [it, inserted] = row_of.try_emplace(m, rows.size());
    if (inserted) rows.emplace_back();
    return it->second;
  };
  for (const auto& [e, coeff] : g.terms()) row_index(e);

  constexpr std::size_t kMaxColumns = 50000;
  for (auto v : support) {
    const auto frad = radius(basis_[v]);
    std::vector<Coord> lo(n), hi(n);
    for (std::size_t k = 0; k < n; ++k) {
      hi[k] = grad[k] + frad[k] + margin;
      lo[k] = k < c ? -hi[k] : 0;
    }
    LatticeVector lambda(lo);
    while (true) {
      std::set<LatticeVector> orbit;
      bool fits = true;
      for (std::size_t w = 0; w < group_.order() && fits; ++w) {
        LatticeVector mu = group_.act(w, lambda);
        for (std::size_t k = 0; k < n; ++k)
          if (mu[k] < -hi[k] || mu[k] > hi[k]) fits = false;
        orbit.insert(std::move(mu));
      }
      if (fits) {
        const std::size_t col = cols.size();
        cols.push_back({v, lambda});
        if (cols.size() > kMaxColumns) throw ConsistencyError("expansion window too large");
        std::map<LatticeVector, BigInt> prod;
        for (const auto& mu : orbit)
          for (const auto& [e, coeff] : basis_[v].terms()) prod[mu + e] += coeff;
        for (const auto& [m, coeff] : prod)
          if (coeff != 0) rows[row_index(m)].emplace_back(col, Rational(coeff));
      }
      std::size_t k = 0;
      for (; k < n; ++k) {
        if (lambda[k] < hi[k]) {
          ++lambda[k];
          break;
        }
        lambda[k] = lo[k];
      }
      if (k == n) break;
    }
  }

  std::vector<Rational> rhs(rows.size(), 0);
  for (const auto& [e, coeff] : g.terms()) rhs[row_of.at(e)] = Rational(coeff);
  const auto x = solve_exact(rows, rhs, cols.size());
  if (!x) return std::nullopt;

  Expansion out;
  for (auto v : support) out.emplace(v, LaurentPoly(n));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Rational& xj = (*x)[j];
    if (xj == 0) continue;
    if (!is_integral(xj)) throw ConsistencyError("non-integral expansion coefficient " + xj.get_str());
    out[cols[j].v] += BigInt(xj.get_num()) * orbit_sum(group_, cols[j].lambda, all_);
  }
  return out;
}

Expansion SteinbergSolver::expand(const LaurentPoly& g, RootSubset cells) const {
  const RootDatum& d = group_.datum();
  if (g.rank() != d.rank()) throw InputError("polynomial rank does not match the root datum");
  if (!cells.is_subset_of(d.simple_roots())) throw InputError("cell subset out of range");
  if (!is_invariant(group_, g, d.simple_roots() - cells))
    throw InputError("expand_in_basis: input is not invariant under the parabolic subgroup");

  std::vector<std::size_t> support;
  for (std::size_t v = 0; v < group_.order(); ++v)
    if (group_.right_descents(v).is_subset_of(cells)) support.push_back(v);

  if (g.is_zero()) {
    Expansion out;
    for (auto v : support) out.emplace(v, LaurentPoly(g.rank()));
    return out;
  }
  for (int margin = 0; margin <= max_margin_; ++margin) {
    auto sol = try_expand(g, support, margin);
    if (!sol) continue;
    if (recombine(*this, *sol) != g) throw ConsistencyError("expansion does not reproduce its input");
    for (const auto& [v, cv] : *sol)
      if (!is_invariant(group_, cv, d.simple_roots())) throw ConsistencyError("expansion coefficient not W-invariant");
    return *sol;
  }
  throw ConsistencyError("no exact expansion found in the Steinberg basis: " + g.str());
}

Expansion SteinbergSolver::structure_constants(std::size_t v, std::size_t vp) const {
  if (v >= group_.order() || vp >= group_.order()) throw InputError("Weyl element index out of range");
  const RootSubset cells = group_.right_descents(v) | group_.right_descents(vp);
  return expand(basis_[v] * basis_[vp], cells);
}

SteinbergBasis steinberg_basis(const WeylGroup& group, RootSubset cells) { return SteinbergSolver(group).basis(cells); }

Expansion expand_in_basis(const WeylGroup& group, const LaurentPoly& g, RootSubset cells) {
  return SteinbergSolver(group).expand(g, cells);
}

Expansion structure_constants(const WeylGroup& group, std::size_t v, std::size_t vp) {
  return SteinbergSolver(group).structure_constants(v, vp);
}

StructureTable structure_table(const SteinbergSolver& solver) {
  const std::size_t n = solver.group().order();
  std::vector<Expansion> results(n * n);
  std::vector<std::string> errors(n * n);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < n * n; ++k) {
    try {
      results[k] = solver.structure_constants(k / n, k % n);
    } catch (const std::exception& e) {
      errors[k] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw ConsistencyError(e);
  StructureTable table;
  for (std::size_t k = 0; k < n * n; ++k) table.emplace(std::pair(k / n, k % n), std::move(results[k]));
  return table;
}

StructureTable structure_table_serial(const SteinbergSolver& solver) {
  const std::size_t n = solver.group().order();
  StructureTable table;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t vp = 0; vp < n; ++vp) table.emplace(std::pair(v, vp), solver.structure_constants(v, vp));
  return table;
}

LaurentPoly recombine(const SteinbergSolver& solver, const Expansion& coeffs) {
  LaurentPoly s(solver.group().datum().rank());
  for (const auto& [v, cv] : coeffs) s += cv * solver.f(v);
  return s;
}

}  // namespace eqk

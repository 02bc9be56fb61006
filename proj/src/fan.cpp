#include "eqk/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "eqk/errors.hpp"
#include "eqk/rational_linalg.hpp"

namespace eqk {

namespace {

std::optional<std::vector<Rational>> barycentric(const Cone& cone, const LatticeVector& p) {
  const std::size_t n = p.rank();
  if (cone.rays.size() != n) throw InputError("membership test needs a full-dimensional simplicial cone");
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  std::vector<Rational> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(cone.rays[j][i]);
    b[i] = static_cast<long>(p[i]);
  }
  return solve_dense(std::move(a), std::move(b));
}

std::size_t column_rank(const std::vector<LatticeVector>& vs, std::size_t rank) {
  if (vs.empty()) return 0;
  return elementary_divisors(IntMatrix::from_columns(vs, rank)).size();
}

}  // namespace

Fan::Fan(std::size_t rank, std::vector<LatticeVector> rays, std::vector<std::vector<std::size_t>> max_cones)
    : rank_(rank), rays_(std::move(rays)), cones_(std::move(max_cones)) {
  if (rank_ == 0) throw InputError("fan rank must be positive");
  for (const auto& r : rays_) {
    if (r.rank() != rank_) throw InputError("ray " + r.str() + " has wrong rank");
    if (r.is_zero()) throw InputError("zero ray");
    if (gcd_of(r) != 1) throw InputError("ray " + r.str() + " is not primitive");
  }
  if (cones_.empty()) throw InputError("fan has no cones");
  for (auto& c : cones_) {
    if (c.empty()) throw InputError("empty maximal cone");
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) throw InputError("repeated ray in cone");
    for (auto i : c)
      if (i >= rays_.size()) throw InputError("ray index out of range");
    if (column_rank(cone(&c - cones_.data()).rays, rank_) != c.size()) throw InputError("cone is not simplicial");
  }
}

Cone Fan::cone(std::size_t i) const {
  if (i >= cones_.size()) throw InputError("cone index out of range");
  Cone c;
  for (auto r : cones_[i]) c.rays.push_back(rays_[r]);
  return c;
}

bool is_smooth(const Cone& cone, std::size_t rank) {
  if (cone.rays.empty()) return true;
  const auto d = elementary_divisors(IntMatrix::from_columns(cone.rays, rank));
  return d.size() == cone.rays.size() && std::all_of(d.begin(), d.end(), [](Coord x) { return x == 1; });
}

bool is_smooth(const Fan& fan) {
  for (std::size_t i = 0; i < fan.cone_count(); ++i)
    if (!is_smooth(fan.cone(i), fan.rank())) return false;
  return true;
}

std::optional<Facet> common_facet(const Fan& fan, std::size_t a, std::size_t b) {
  if (a >= fan.cone_count() || b >= fan.cone_count()) throw InputError("cone index out of range");
  const std::size_t n = fan.rank();
  const auto& ca = fan.max_cones()[a];
  const auto& cb = fan.max_cones()[b];
  if (a == b || ca.size() != n || cb.size() != n) return std::nullopt;
  Facet f;
  std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(f.rays));
  if (f.rays.size() + 1 != n) return std::nullopt;
  std::vector<LatticeVector> shared;
  for (auto r : f.rays) shared.push_back(fan.rays()[r]);
  f.chi = primitive_normal(shared, n);
  for (auto r : ca) {
    if (std::binary_search(f.rays.begin(), f.rays.end(), r)) continue;
    const Coord s = dot(f.chi, fan.rays()[r]);
    if (s == 0) throw ConsistencyError("degenerate facet");
    if (s < 0) f.chi = -f.chi;
  }
  return f;
}

bool facet_orthogonal_to_root(const Cone& cone, const LatticeVector& alpha) {
  const std::size_t n = cone.rays.size();
  for (std::size_t skip = 0; skip < n; ++skip) {
    bool all = true;
    for (std::size_t j = 0; j < n && all; ++j)
      if (j != skip && dot(alpha, cone.rays[j]) != 0) all = false;
    if (all) return true;
  }
  return false;
}

LatticeVector dual_basis_character(const Cone& cone, std::size_t ray) {
  if (cone.rays.empty()) throw InputError("empty cone");
  const std::size_t n = cone.rays.front().rank();
  if (ray >= cone.rays.size()) throw InputError("ray not in cone");
  if (cone.rays.size() != n) throw InputError("dual basis needs a maximal cone");
  const auto inv = unimodular_inverse(IntMatrix::from_columns(cone.rays, n));
  if (!inv) throw InputError("dual basis needs a smooth cone");
  return inv->row(ray);
}

bool cone_contains(const Cone& cone, const LatticeVector& point) {
  const auto x = barycentric(cone, point);
  return x && std::all_of(x->begin(), x->end(), [](const Rational& t) { return t >= 0; });
}

bool cone_interior_contains(const Cone& cone, const LatticeVector& point) {
  const auto x = barycentric(cone, point);
  return x && std::all_of(x->begin(), x->end(), [](const Rational& t) { return t > 0; });
}

bool is_complete(const Fan& fan, std::uint64_t seed, std::size_t samples) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Coord> coord(-1000, 1000);
  std::vector<Cone> cones;
  for (std::size_t i = 0; i < fan.cone_count(); ++i) {
    if (fan.max_cones()[i].size() != fan.rank()) return false;
    cones.push_back(fan.cone(i));
  }
  for (std::size_t s = 0; s < samples; ++s) {
    LatticeVector p(fan.rank());
    for (std::size_t k = 0; k < p.rank(); ++k) p[k] = coord(rng);
    if (p.is_zero()) continue;
    std::size_t hits = 0, interior = 0;
    for (const auto& c : cones) {
      if (cone_contains(c, p)) ++hits;
      if (cone_interior_contains(c, p)) ++interior;
    }
    if (hits == 0 || interior > 1) return false;
  }
  return true;
}

Cone positive_chamber(const RootDatum& datum) {
  if (datum.central_rank() != 0) throw InputError("chamber fans are only supported without a central torus");
  const std::size_t r = datum.semisimple_rank();
  const IntMatrix at = datum.cartan().transpose();
  Cone c;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::vector<Rational>> a(r, std::vector<Rational>(r));
    std::vector<Rational> b(r, 0);
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t y = 0; y < r; ++y) a[x][y] = static_cast<long>(at(x, y));
    b[i] = 1;
    const auto sol = solve_dense(a, b);
    if (!sol) throw ConsistencyError("singular Cartan matrix");
    BigInt l = 1;
    for (const auto& q : *sol) l = lcm(l, BigInt(q.get_den()));
    LatticeVector ray(r);
    for (std::size_t k = 0; k < r; ++k) ray[k] = BigInt((*sol)[k] * l).get_si();
    const Coord g = gcd_of(ray);
    for (std::size_t k = 0; k < r; ++k) ray[k] /= g;
    c.rays.push_back(ray);
  }
  return c;
}

LatticeVector act_on_coweight(const WeylGroup& group, std::size_t w, const LatticeVector& n) {
  // <w lambda, w n> = <lambda, n>  =>  w n = (M_w^{-1})^T n
  return group.element(group.inverse(w)).matrix.transpose() * n;
}

ChamberFan weyl_chamber_fan(const WeylGroup& group, const std::optional<Fan>& subdivision) {
  const RootDatum& datum = group.datum();
  const Cone chamber = positive_chamber(datum);
  const std::size_t n = datum.rank();

  Fan positive;
  if (subdivision) {
    positive = *subdivision;
  } else {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    positive = Fan(n, chamber.rays, {all});
  }
  if (positive.rank() != n) throw InputError("subdivision rank does not match the root datum");
  const IntMatrix at = datum.cartan().transpose();
  for (const auto& ray : positive.rays()) {
    const LatticeVector pairing = at * ray;
    if (std::any_of(pairing.begin(), pairing.end(), [](Coord x) { return x < 0; }))
      throw InputError("ray " + ray.str() + " lies outside the positive chamber");
  }
  for (const auto& c : positive.max_cones())
    if (c.size() != n) throw InputError("subdivision cones must be full-dimensional");
  if (!is_smooth(positive)) throw InputError("chamber fan is not smooth; supply a smooth subdivision");

  // Tiling: interior chamber points are covered, never by two interiors.
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<Coord> weight(1, 1000);
  for (int s = 0; s < 1000; ++s) {
    LatticeVector p(n);
    for (const auto& r : chamber.rays) p += weight(rng) * r;
    std::size_t hits = 0, interior = 0;
    for (std::size_t i = 0; i < positive.cone_count(); ++i) {
      if (cone_contains(positive.cone(i), p)) ++hits;
      if (cone_interior_contains(positive.cone(i), p)) ++interior;
    }
    if (hits == 0 || interior > 1) throw InputError("subdivision does not tile the positive chamber");
  }

  std::vector<LatticeVector> rays = positive.rays();
  std::map<LatticeVector, std::size_t> ray_index;
  for (std::size_t i = 0; i < rays.size(); ++i) ray_index.emplace(rays[i], i);
  std::vector<std::vector<std::size_t>> cones;
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t w = 0; w < group.order(); ++w) {
    for (const auto& c : positive.max_cones()) {
      std::vector<std::size_t> image;
      for (auto r : c) {
        LatticeVector v = act_on_coweight(group, w, positive.rays()[r]);
        auto [it, inserted] = ray_index.try_emplace(v, rays.size());
        if (inserted) rays.push_back(v);
        image.push_back(it->second);
      }
      std::sort(image.begin(), image.end());
      if (seen.insert(image).second) cones.push_back(image);
    }
  }
  if (cones.size() != group.order() * positive.cone_count())
    throw ConsistencyError("W-translates of the chamber fan overlap");
  Fan full(n, std::move(rays), std::move(cones));
  if (!is_complete(full)) throw ConsistencyError("W-translated chamber fan is not complete");
  return {std::move(positive), std::move(full)};
}

Fan fan_p1() { return Fan(1, {{1}, {-1}}, {{0}, {1}}); }

Fan fan_p2() { return Fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}); }

Fan fan_p1xp1() { return Fan(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

}  // namespace eqk

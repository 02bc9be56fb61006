#include "eqk/regcomp.hpp"

#include <algorithm>

#include "eqk/errors.hpp"
#include "eqk/rational_linalg.hpp"

namespace eqk {

LaurentPoly mu(const RootDatum& datum, RootSubset subset) {
  if (!subset.is_subset_of(datum.simple_roots())) throw InputError("root subset out of range");
  LaurentPoly r = LaurentPoly::one(datum.rank());
  for (auto i : subset.indices()) r *= one_minus_exp_neg(datum.simple_root(i));
  return r;
}

LaurentPoly lambda_I(const RootDatum& datum, RootSubset subset) { return embed_first(mu(datum, subset)); }

// --- model ----------------------------------------------------------------------

RegCompModel::RegCompModel(const RootDatum& datum, const std::optional<Fan>& subdivision)
    : group_(datum), fan_(weyl_chamber_fan(group_, subdivision)), base_(BaseRingSpec::point()), solver_(group_) {
  for (std::size_t v = 0; v < group_.order(); ++v) basis_.push_back(v);
  table_ = eqk::structure_table(solver_);
  const std::uint32_t subsets = 1u << datum.semisimple_rank();
  for (std::uint32_t bits = 0; bits < subsets; ++bits) lambda_.push_back(lambda_I(datum, RootSubset(bits)));
}

void RegCompModel::corrupt_structure_constant(std::size_t v, std::size_t vp, std::size_t w, const BigInt& delta) {
  auto it = table_.find({v, vp});
  if (it == table_.end() || !it->second.count(w)) throw InputError("no such structure constant");
  it->second.at(w) += LaurentPoly::constant(lattice_rank(), delta);
}

void RegCompModel::corrupt_lambda(RootSubset subset, const BigInt& delta) {
  if (subset.bits() >= lambda_.size()) throw InputError("root subset out of range");
  lambda_[subset.bits()] += LaurentPoly::constant(2 * lattice_rank(), delta);
}

PiecewiseElement RegCompModel::k_constant(const LaurentPoly& doubled) const {
  if (doubled.rank() != 2 * lattice_rank()) throw InputError("coefficient must live on the doubled lattice");
  return constant_family(labels(), doubled);
}

KModuleElement RegCompModel::zero() const {
  KModuleElement x;
  for (auto v : basis_) x.coefficients.emplace(v, k_constant(LaurentPoly(2 * lattice_rank())));
  return x;
}

KModuleElement RegCompModel::basis_element(std::size_t v) const {
  if (v >= group_.order()) throw InputError("basis index out of range");
  KModuleElement x = zero();
  x.coefficients.at(v) = k_constant(LaurentPoly::one(2 * lattice_rank()));
  return x;
}

namespace {

void require_element(const RegCompModel& model, const KModuleElement& x) {
  if (x.coefficients.size() != model.basis().size()) throw InputError("element does not match the model basis");
  for (auto v : model.basis()) {
    const auto it = x.coefficients.find(v);
    if (it == x.coefficients.end()) throw InputError("element does not match the model basis");
    if (it->second.labels != model.labels()) throw InputError("coefficient labels do not match the model");
    for (const auto& val : it->second.values)
      if (val.rank() != 2 * model.lattice_rank()) throw InputError("coefficient has the wrong lattice rank");
  }
}

bool is_zero_family(const PiecewiseElement& e) {
  return std::all_of(e.values.begin(), e.values.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

IntMatrix swap_halves(std::size_t n) {
  IntMatrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, n + i) = 1;
    m(n + i, i) = 1;
  }
  return m;
}

}  // namespace

KModuleElement add(const RegCompModel& model, const KModuleElement& a, const KModuleElement& b) {
  require_element(model, a);
  require_element(model, b);
  KModuleElement r = a;
  for (auto& [v, k] : r.coefficients) k = pointwise_add(k, b.coefficients.at(v));
  return r;
}

KModuleElement multiply(const RegCompModel& model, const KModuleElement& a, const KModuleElement& b) {
  require_element(model, a);
  require_element(model, b);
  KModuleElement r = model.zero();
  for (const auto& [v, ka] : a.coefficients) {
    if (is_zero_family(ka)) continue;
    for (const auto& [vp, kb] : b.coefficients) {
      if (is_zero_family(kb)) continue;
      const PiecewiseElement k = pointwise_mul(ka, kb);
      const RootSubset i = model.cell(v), ip = model.cell(vp);
      for (const auto& [w, aw] : model.structure_table().at({v, vp})) {
        if (aw.is_zero()) continue;
        const LaurentPoly factor =
            model.lambda(i & ip) * model.lambda((i | ip) - model.cell(w)) * embed_second(aw);
        r.coefficients.at(w) = pointwise_add(r.coefficients.at(w), scale(factor, k));
      }
    }
  }
  return r;
}

std::string EmbedConvention::str() const {
  return std::string("coefficients ") + (swap_coefficient ? "swapped" : "as stored") + ", basis in " +
         (basis_in_first ? "first" : "second") + " factor, " + (euler_twist ? "euler twist" : "no twist");
}

PiecewiseElement embed_to_Z(const RegCompModel& model, const KModuleElement& x, const EmbedConvention& conv) {
  require_element(model, x);
  const std::size_t n = model.lattice_rank();
  const IntMatrix swap = swap_halves(n);
  PiecewiseElement out = model.k_constant(LaurentPoly(2 * n));
  for (const auto& [v, k] : x.coefficients) {
    if (is_zero_family(k)) continue;
    const LaurentPoly fv = conv.basis_in_first ? embed_first(model.f(v)) : embed_second(model.f(v));
    LaurentPoly local = fv;
    if (conv.euler_twist) {
      const LaurentPoly m = mu(model.datum(), model.cell(v));
      local *= conv.basis_in_first ? embed_second(m) : embed_first(m);
    }
    for (std::size_t s = 0; s < out.values.size(); ++s) {
      const LaurentPoly kv = conv.swap_coefficient ? apply_matrix(swap, k.values[s]) : k.values[s];
      out.values[s] += kv * local;
    }
  }
  return out;
}

// --- random elements --------------------------------------------------------------

namespace {

LaurentPoly random_invariant(const WeylGroup& group, std::mt19937_64& rng) {
  const RootDatum& d = group.datum();
  std::vector<std::size_t> all(group.order());
  for (std::size_t w = 0; w < all.size(); ++w) all[w] = w;
  std::uniform_int_distribution<int> terms(1, 2), small(0, 1), central(-1, 1), coeff(-2, 2);
  LaurentPoly r(d.rank());
  for (int t = terms(rng); t > 0; --t) {
    LatticeVector lambda(d.rank());
    for (std::size_t i = 0; i < d.rank(); ++i) lambda[i] = i < d.central_rank() ? central(rng) : small(rng);
    r += BigInt(coeff(rng)) * orbit_sum(group, lambda, all);
  }
  return r;
}

}  // namespace

PiecewiseElement random_k_value(const RegCompModel& model, std::mt19937_64& rng) {
  const std::size_t n = model.lattice_rank();
  const Fan& fan = model.positive_fan();
  // Facet congruences in the first factor: a common value plus cone-local
  // multiples of the product of the cone's facet factors.
  const LaurentPoly common = embed_first(random_laurent(n, rng, 2, 1, 2)) * embed_second(random_invariant(model.group(), rng));
  PiecewiseElement k = model.k_constant(common);
  for (std::size_t s = 0; s < fan.cone_count(); ++s) {
    LaurentPoly euler = LaurentPoly::one(n);
    for (std::size_t t = 0; t < fan.cone_count(); ++t)
      if (auto f = common_facet(fan, s, t)) euler *= one_minus_exp_neg(f->chi);
    if (fan.cone_count() == 1) continue;
    k.values[s] += embed_first(euler * random_laurent(n, rng, 1, 1, 2)) * embed_second(random_invariant(model.group(), rng));
  }
  return k;
}

KModuleElement random_element(const RegCompModel& model, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(0.75);
  KModuleElement x = model.zero();
  for (auto& [v, k] : x.coefficients)
    if (keep(rng)) k = random_k_value(model, rng);
  return x;
}

// --- verification -------------------------------------------------------------------

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

bool homomorphic(const RegCompModel& model, const KModuleElement& a, const KModuleElement& b,
                 const EmbedConvention& conv) {
  try {
    return embed_to_Z(model, multiply(model, a, b), conv) ==
           pointwise_mul(embed_to_Z(model, a, conv), embed_to_Z(model, b, conv));
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

std::size_t homomorphism_failures(const RegCompModel& model,
                                  const std::vector<std::pair<KModuleElement, KModuleElement>>& pairs,
                                  const EmbedConvention& conv) {
  std::size_t failures = 0;
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : failures)
  for (std::ptrdiff_t k = 0; k < count; ++k)
    if (!homomorphic(model, pairs[k].first, pairs[k].second, conv)) ++failures;
  return failures;
}

std::size_t homomorphism_failures_serial(const RegCompModel& model,
                                         const std::vector<std::pair<KModuleElement, KModuleElement>>& pairs,
                                         const EmbedConvention& conv) {
  std::size_t failures = 0;
  for (const auto& [a, b] : pairs)
    if (!homomorphic(model, a, b, conv)) ++failures;
  return failures;
}

std::vector<std::pair<KModuleElement, KModuleElement>> oracle_pairs(const RegCompModel& model, std::uint64_t seed,
                                                                    std::size_t samples) {
  std::vector<std::pair<KModuleElement, KModuleElement>> pairs;
  for (auto v : model.basis())
    for (auto vp : model.basis()) pairs.emplace_back(model.basis_element(v), model.basis_element(vp));
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    KModuleElement a = random_element(model, rng);
    KModuleElement b = random_element(model, rng);
    pairs.emplace_back(std::move(a), std::move(b));
  }
  return pairs;
}

std::size_t basis_image_rank(const RegCompModel& model, std::uint64_t seed, const EmbedConvention& conv) {
  const std::size_t n = model.lattice_rank();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(1, 97), den(1, 89);
  std::vector<Rational> point(2 * n);
  for (auto& x : point) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  std::vector<LaurentPoly> images;
  for (auto v : model.basis()) images.push_back(embed_to_Z(model, model.basis_element(v), conv).values.front());
  std::vector<SparseRow> rows;
  for (std::size_t w = 0; w < model.group().order(); ++w) {
    const IntMatrix act = second_factor_action(model.group(), w);
    SparseRow row;
    for (std::size_t j = 0; j < images.size(); ++j) {
      const Rational val = evaluate(apply_matrix(act, images[j]), point);
      if (val != 0) row.emplace_back(j, val);
    }
    rows.push_back(std::move(row));
  }
  return rank(std::move(rows), images.size());
}

VerifyReport verify_model(const RegCompModel& model, const VerifyOptions& options) {
  VerifyReport report;
  auto add_check = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  const WeylGroup& group = model.group();
  const std::size_t order = group.order();
  const EmbedConvention& conv = options.convention;

  add_check("basis_rank", model.basis().size() == order,
            std::to_string(model.basis().size()) + " basis elements, |W| = " + std::to_string(order));

  bool steinberg_ok = true;
  for (auto v : model.basis()) {
    const auto cell = group.c_cell(model.cell(v));
    steinberg_ok = steinberg_ok && model.f(v) == modified_f(group, v) && std::count(cell.begin(), cell.end(), v) == 1;
  }
  add_check("basis_matches_steinberg", steinberg_ok, "f_v against the modified Steinberg basis");

  std::mt19937_64 rng(options.seed);
  std::vector<KModuleElement> samples;
  for (std::size_t s = 0; s < options.sample_triples; ++s) samples.push_back(random_element(model, rng));

  const KModuleElement one = model.one();
  bool identity_ok = true;
  for (auto v : model.basis()) {
    const KModuleElement b = model.basis_element(v);
    identity_ok = identity_ok && multiply(model, one, b) == b && multiply(model, b, one) == b;
  }
  for (const auto& x : samples) identity_ok = identity_ok && multiply(model, one, x) == x;
  add_check("identity", identity_ok, "f_1 is a two-sided identity on the basis and on samples");

  bool comm_ok = true;
  for (auto v : model.basis())
    for (auto vp : model.basis()) {
      const KModuleElement a = model.basis_element(v), b = model.basis_element(vp);
      comm_ok = comm_ok && multiply(model, a, b) == multiply(model, b, a);
    }
  for (std::size_t s = 0; s + 1 < samples.size(); s += 2)
    comm_ok = comm_ok && multiply(model, samples[s], samples[s + 1]) == multiply(model, samples[s + 1], samples[s]);
  add_check("commutativity", comm_ok, "basis pairs and sampled pairs");

  std::size_t assoc_fail = 0;
  for (std::size_t s = 0; s < options.sample_triples; ++s) {
    const auto& a = samples[s];
    const auto& b = samples[(s + 1) % samples.size()];
    const auto& c = samples[(s + 2) % samples.size()];
    if (multiply(model, multiply(model, a, b), c) != multiply(model, a, multiply(model, b, c))) ++assoc_fail;
  }
  add_check("associativity", assoc_fail == 0,
            std::to_string(options.sample_triples) + " sampled triples, " + std::to_string(assoc_fail) + " failures");

  bool support_ok = true;
  for (auto v : model.basis())
    for (auto vp : model.basis()) {
      const KModuleElement prod = multiply(model, model.basis_element(v), model.basis_element(vp));
      const RootSubset allowed = model.cell(v) | model.cell(vp);
      for (const auto& [w, k] : prod.coefficients)
        if (!is_zero_family(k) && !model.cell(w).is_subset_of(allowed)) support_ok = false;
    }
  add_check("product_support", support_ok, "products of basis elements stay in cells J within I u I'");

  bool lambda_ok = true;
  for (const auto& i : subsets_of(model.datum().simple_roots()))
    for (const auto& ip : subsets_of(model.datum().simple_roots()))
      lambda_ok = lambda_ok && model.lambda(i) * model.lambda(ip) == model.lambda(i | ip) * model.lambda(i & ip);
  add_check("lambda_consistency", lambda_ok, "lambda_I lambda_I' = lambda_{I u I'} lambda_{I n I'}");

  const auto pairs = oracle_pairs(model, options.seed, options.sample_pairs);
  const std::size_t hom_fail = homomorphism_failures(model, pairs, conv);
  add_check("homomorphism", hom_fail == 0,
            std::to_string(pairs.size()) + " pairs (" + std::to_string(order * order) + " basis pairs), " +
                std::to_string(hom_fail) + " failures");

  const PiecewiseElement e1 = embed_to_Z(model, one, conv);
  add_check("identity_embedding", e1 == model.k_constant(LaurentPoly::one(2 * model.lattice_rank())),
            "f_1 maps to the all-ones family");

  std::size_t z_fail = 0;
  for (auto v : model.basis())
    if (!member_of_Z(embed_to_Z(model, model.basis_element(v), conv), group, model.positive_fan())) ++z_fail;
  for (const auto& x : samples)
    if (!member_of_Z(embed_to_Z(model, x, conv), group, model.positive_fan())) ++z_fail;
  add_check("z_membership", z_fail == 0,
            std::to_string(model.basis().size() + samples.size()) + " images, " + std::to_string(z_fail) + " failures");

  const std::size_t r = basis_image_rank(model, options.seed, conv);
  add_check("injectivity", r == order, "basis image rank " + std::to_string(r) + " of " + std::to_string(order));
  return report;
}

}  // namespace eqk

#include "eqk/json_io.hpp"

#include <fstream>

#include "eqk/errors.hpp"

namespace eqk {

namespace {

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw InputError("expected an integer or decimal string, got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string word(const WeylGroup& g, std::size_t w) { return g.element(w).word_string(); }

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

Json to_json(const LatticeVector& v) { return Json(v.coords()); }

LatticeVector lattice_vector_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array() || j.size() != rank) throw InputError("expected an integer vector of length " + std::to_string(rank));
  LatticeVector v(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    if (!j[i].is_number_integer()) throw InputError("non-integer coordinate " + j[i].dump());
    v[i] = j[i].get<Coord>();
  }
  return v;
}

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exponent", to_json(e)}, {"coeff", c.get_str()}});
  return out;
}

LaurentPoly laurent_from_json(const Json& j, std::size_t rank) {
  if (!j.is_array()) throw InputError("a Laurent polynomial is a list of {exponent, coeff} terms");
  LaurentPoly p(rank);
  for (const auto& t : j) p.add_term(lattice_vector_from_json(field(t, "exponent"), rank), bigint_from_json(field(t, "coeff")));
  return p;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json to_json(const Fan& fan) {
  Json rays = Json::array();
  for (const auto& r : fan.rays()) rays.push_back(to_json(r));
  return {{"rank", fan.rank()}, {"rays", rays}, {"max_cones", fan.max_cones()}};
}

Fan fan_from_json(const Json& j) {
  const Json& rank_j = field(j, "rank");
  if (!rank_j.is_number_integer() || rank_j.get<long>() <= 0) throw InputError("fan rank must be a positive integer");
  const auto rank = rank_j.get<std::size_t>();
  std::vector<LatticeVector> rays;
  for (const auto& r : field(j, "rays")) rays.push_back(lattice_vector_from_json(r, rank));
  std::vector<std::vector<std::size_t>> cones;
  for (const auto& c : field(j, "max_cones")) {
    if (!c.is_array()) throw InputError("a cone is a list of ray indices");
    std::vector<std::size_t> idx;
    for (const auto& i : c) {
      if (!i.is_number_integer() || i.get<long>() < 0) throw InputError("bad ray index " + i.dump());
      idx.push_back(i.get<std::size_t>());
    }
    cones.push_back(idx);
  }
  return Fan(rank, std::move(rays), std::move(cones));
}

Json weyl_element_json(const WeylGroup& group, std::size_t w) {
  const auto& e = group.element(w);
  return {{"word", e.word_string()}, {"length", e.length}, {"matrix", to_json(e.matrix)}};
}

std::size_t weyl_element_from_json(const WeylGroup& group, const Json& j) {
  if (!j.is_string()) throw InputError("Weyl elements are given by reduced words like \"s1s2\"");
  const auto w = group.find_word(j.get<std::string>());
  if (!w) throw InputError("bad Weyl word '" + j.get<std::string>() + "'");
  return *w;
}

Json to_json(const CurveModel& m) {
  Json curves = Json::array();
  for (const auto& c : m.curves) curves.push_back({{"i", c.i}, {"j", c.j}, {"chi", to_json(c.chi)}});
  return {{"points", m.points}, {"rank", m.rank}, {"curves", curves}};
}

CurveModel curve_model_from_json(const Json& j) {
  CurveModel m;
  m.points = field(j, "points").get<std::size_t>();
  m.rank = field(j, "rank").get<std::size_t>();
  for (const auto& c : field(j, "curves")) {
    CurveDatum d{field(c, "i").get<std::size_t>(), field(c, "j").get<std::size_t>(),
                 lattice_vector_from_json(field(c, "chi"), m.rank)};
    if (d.i == d.j || d.i >= m.points || d.j >= m.points) throw InputError("bad curve endpoints");
    if (d.chi.is_zero()) throw InputError("curve character must be nonzero");
    m.curves.push_back(d);
  }
  return m;
}

Json to_json(const PiecewiseElement& e, const WeylGroup* group) {
  std::string model = "curves";
  Json values = Json::array();
  for (std::size_t k = 0; k < e.labels.size(); ++k) {
    const auto& l = e.labels[k];
    Json label;
    switch (l.kind) {
      case FixedPointLabel::Kind::Curve:
        label = l.point;
        break;
      case FixedPointLabel::Kind::Wonderful:
        model = "wonderful";
        if (!group) throw InputError("wonderful labels need a root datum");
        label = {{"cone", l.point}, {"u", word(*group, l.u)}, {"v", word(*group, l.v)}};
        break;
      case FixedPointLabel::Kind::Z:
        model = "Z";
        label = {{"cone", l.point}};
        break;
    }
    values.push_back({{"label", label}, {"poly", to_json(e.values[k])}});
  }
  return {{"model", model}, {"values", values}};
}

PiecewiseElement piecewise_from_json(const Json& j, std::size_t rank, const WeylGroup* group) {
  const std::string model = field(j, "model").get<std::string>();
  PiecewiseElement e;
  for (const auto& entry : field(j, "values")) {
    const Json& label = field(entry, "label");
    FixedPointLabel l;
    if (model == "curves") {
      l = {FixedPointLabel::Kind::Curve, label.get<std::size_t>(), 0, 0};
    } else if (model == "wonderful") {
      if (!group) throw InputError("wonderful labels need a root datum");
      l = {FixedPointLabel::Kind::Wonderful, field(label, "cone").get<std::size_t>(),
           weyl_element_from_json(*group, field(label, "u")), weyl_element_from_json(*group, field(label, "v"))};
    } else if (model == "Z") {
      l = {FixedPointLabel::Kind::Z, field(label, "cone").get<std::size_t>(), 0, 0};
    } else {
      throw InputError("unknown model '" + model + "'");
    }
    e.labels.push_back(l);
    e.values.push_back(laurent_from_json(field(entry, "poly"), rank));
  }
  return e;
}

Json to_json(const SteinbergBasis& b, const WeylGroup& group) {
  Json entries = Json::array();
  for (const auto& e : b.entries)
    entries.push_back({{"v", word(group, e.v)}, {"cell", e.cell.str()}, {"f", to_json(e.f)}, {"f_str", e.f.str()}});
  return {{"cells", b.cells.str()}, {"basis", entries}};
}

Json expansion_json(const Expansion& e, const WeylGroup& group) {
  Json out = Json::object();
  for (const auto& [v, c] : e) out[word(group, v)] = {{"coeff", to_json(c)}, {"str", c.str()}};
  return out;
}

Json to_json(const StructureTable& t, const WeylGroup& group) {
  Json out = Json::object();
  for (const auto& [key, e] : t) {
    Json row = Json::object();
    for (const auto& [w, c] : e) row[word(group, w)] = to_json(c);
    out[word(group, key.first)][word(group, key.second)] = row;
  }
  return out;
}

BaseRingSpec base_from_json(const Json& j) {
  if (j.contains("kind")) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "point") return BaseRingSpec::point();
    if (kind == "torus") return BaseRingSpec::torus_equivariant(field(j, "rank").get<std::size_t>());
    throw InputError("unknown base kind '" + kind + "'");
  }
  BaseRingSpec b;
  b.name = j.value("name", std::string("custom"));
  if (j.contains("generators")) b.generators = j.at("generators").get<std::vector<std::string>>();
  if (j.contains("relations")) b.relations = j.at("relations").get<std::vector<std::string>>();
  const std::size_t m = b.generators.size();
  if (j.contains("xi")) {
    const Json& xi = j.at("xi");
    if (!xi.is_array() || xi.size() != m || m == 0) throw InputError("xi must have one row per base generator");
    const std::size_t n = xi.front().size();
    b.xi = IntMatrix(m, n);
    for (std::size_t r = 0; r < m; ++r) {
      const LatticeVector row = lattice_vector_from_json(xi[r], n);
      for (std::size_t c = 0; c < n; ++c) b.xi(r, c) = row[c];
    }
  }
  const std::string map = j.value("invariant_map", std::string("augmentation"));
  if (map == "augmentation") b.invariant_map = BaseRingSpec::InvariantMap::Augmentation;
  else if (map == "inclusion") b.invariant_map = BaseRingSpec::InvariantMap::Inclusion;
  else if (map == "explicit") b.invariant_map = BaseRingSpec::InvariantMap::Explicit;
  else throw InputError("unknown invariant_map '" + map + "'");
  const std::string gens = j.value("generating_set", std::string("orbit_sums"));
  if (gens == "orbit_sums") b.generating_set = InvariantGenerators::OrbitSums;
  else if (gens == "weyl_characters") b.generating_set = InvariantGenerators::WeylCharacters;
  else throw InputError("unknown generating_set '" + gens + "'");
  if (j.contains("invariant_images"))
    for (const auto& p : j.at("invariant_images")) b.invariant_images.push_back(laurent_from_json(p, m));
  if (j.contains("central_images"))
    for (const auto& z : j.at("central_images")) b.central_images.push_back(lattice_vector_from_json(z, m));
  return b;
}

Json to_json(const BaseRingSpec& b) {
  Json out = {{"name", b.name}, {"generators", b.generators}, {"relations", b.relations}};
  if (b.xi.rows() > 0) out["xi"] = to_json(b.xi);
  return out;
}

Json to_json(const Presentation& p, const WeylGroup* group) {
  Json out;
  if (p.kind == Presentation::Kind::Toric) {
    out["kind"] = "toric";
    out["base"] = to_json(p.base);
    out["generators"] = p.generators;
    Json rels = Json::array();
    for (const auto& r : p.relations) {
      Json jr = {{"kind", r.kind}};
      if (r.kind == "monomial") {
        std::vector<std::size_t> one_based;
        for (auto i : r.non_face) one_based.push_back(i + 1);
        jr["non_face"] = one_based;
      } else {
        jr["u"] = to_json(r.u);
      }
      jr["poly"] = r.poly.str(p.base.generators);
      rels.push_back(jr);
    }
    out["relations"] = rels;
    return out;
  }
  if (!group) throw InputError("flag presentation output needs the group");
  out["kind"] = "flag";
  out["type"] = p.datum_label;
  out["parabolic"] = p.parabolic.str();
  out["base"] = to_json(p.base);
  out["rank"] = p.basis.size();
  out["basis"] = p.generators;
  Json products = Json::array();
  for (const auto& rule : p.products) {
    Json result = Json::array();
    for (const auto& [w, c] : rule.coeffs)
      result.push_back({{"basis", "f[" + word(*group, w) + "]"}, {"coeff", base_coeff_str(c, p.base.generators)}});
    products.push_back({{"left", "f[" + word(*group, rule.v) + "]"}, {"right", "f[" + word(*group, rule.vp) + "]"},
                        {"result", result}});
  }
  out["products"] = products;
  return out;
}

Json to_json(const KModuleElement& x, const RegCompModel& model) {
  Json coeffs = Json::array();
  for (const auto& [v, k] : x.coefficients) {
    Json values = Json::array();
    for (const auto& val : k.values) values.push_back(to_json(val));
    coeffs.push_back({{"v", word(model.group(), v)}, {"values", values}});
  }
  return {{"type", model.datum().label()}, {"cones", model.cone_count()}, {"coefficients", coeffs}};
}

KModuleElement kelement_from_json(const Json& j, const RegCompModel& model) {
  if (j.contains("type") && j.at("type").get<std::string>() != model.datum().label())
    throw InputError("element type does not match the model");
  KModuleElement x = model.zero();
  const std::size_t n2 = 2 * model.lattice_rank();
  for (const auto& c : field(j, "coefficients")) {
    const std::size_t v = weyl_element_from_json(model.group(), field(c, "v"));
    const Json& values = field(c, "values");
    if (!values.is_array() || values.size() != model.cone_count())
      throw InputError("need one value per cone of the chamber fan");
    for (std::size_t s = 0; s < values.size(); ++s) x.coefficients.at(v).values[s] = laurent_from_json(values[s], n2);
  }
  return x;
}

Json to_json(const RegCompModel& model) {
  const WeylGroup& g = model.group();
  Json basis = Json::array();
  for (auto v : model.basis()) basis.push_back({{"v", word(g, v)}, {"cell", model.cell(v).str()}, {"f", to_json(model.f(v))}});
  Json lambdas = Json::array();
  for (const auto& s : subsets_of(model.datum().simple_roots()))
    lambdas.push_back({{"subset", s.str()}, {"poly", to_json(model.lambda(s))}});
  return {{"type", model.datum().label()},
          {"rank", model.lattice_rank()},
          {"base", to_json(model.base())},
          {"fan", {{"positive", to_json(model.positive_fan())}, {"full", to_json(model.chamber_fan().full)}}},
          {"basis", basis},
          {"lambda", lambdas},
          {"structure_constants", to_json(model.structure_table(), g)}};
}

Json to_json(const VerifyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"passed", r.passed()}, {"checks", checks}};
}

}  // namespace eqk

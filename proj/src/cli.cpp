#include "eqk/cli.hpp"

#include <CLI11.hpp>
#include <optional>
#include <sstream>

#include "eqk/errors.hpp"
#include "eqk/fan.hpp"
#include "eqk/gkm.hpp"
#include "eqk/json_io.hpp"
#include "eqk/lattice_weyl.hpp"
#include "eqk/presentations.hpp"
#include "eqk/regcomp.hpp"
#include "eqk/steinberg.hpp"

namespace eqk {

namespace {

constexpr int kVerificationFailed = 2;

struct Options {
  std::string type = "A1";
  std::size_t central_rank = 0;
  std::uint64_t seed = 0;
  std::size_t pairs = 50, triples = 20;
  std::string parabolic;
  std::string poly_file, monomial;
  bool serial = false;
  std::string model = "curves", element_file, curves_file, fan_file, base_file, subdivision_file;
  std::string a_file, b_file;
  bool verify = false;
};

void add_type(CLI::App* app, Options& o) {
  app->add_option("--type", o.type, "Root datum label: A1, A1xA1, A2, B2, A3")->capture_default_str();
  app->add_option("--central-rank", o.central_rank, "Rank of the central torus")->capture_default_str();
}

void add_seed(CLI::App* app, Options& o) {
  app->add_option("--seed", o.seed, "Seed for sampled properties")->capture_default_str();
  app->add_option("--pairs", o.pairs, "Sampled pairs for the embedding oracle")->capture_default_str();
  app->add_option("--triples", o.triples, "Sampled triples for associativity")->capture_default_str();
}

VerifyOptions verify_options(const Options& o) {
  VerifyOptions vo;
  vo.seed = o.seed;
  vo.sample_pairs = o.pairs;
  vo.sample_triples = o.triples;
  return vo;
}

RootDatum datum_of(const Options& o) { return RootDatum::from_label(o.type, o.central_rank); }

std::optional<Fan> subdivision_of(const Options& o) {
  if (o.subdivision_file.empty()) return std::nullopt;
  return fan_from_json(read_json_file(o.subdivision_file));
}

BaseRingSpec base_of(const Options& o) {
  return o.base_file.empty() ? BaseRingSpec::point() : base_from_json(read_json_file(o.base_file));
}

Json subset_list(RootSubset s) {
  Json out = Json::array();
  for (auto i : s.indices()) out.push_back(i + 1);
  return out;
}

LatticeVector parse_vector(const std::string& text, std::size_t rank) {
  std::vector<Coord> coords;
  std::string cleaned = text;
  for (auto& c : cleaned)
    if (c == ',') c = ' ';
  std::istringstream in(cleaned);
  Coord x;
  while (in >> x) coords.push_back(x);
  if (!in.eof() || coords.size() != rank)
    throw InputError("expected " + std::to_string(rank) + " integers, got '" + text + "'");
  LatticeVector v(rank);
  for (std::size_t i = 0; i < rank; ++i) v[i] = coords[i];
  return v;
}

Json check_json(const std::string& name, bool passed, const std::string& detail = "") {
  return {{"name", name}, {"passed", passed}, {"detail", detail}};
}

// ---- rootsys ----

int cmd_rootsys(const Options& o, std::ostream& out) {
  const WeylGroup g(datum_of(o));
  const auto& d = g.datum();
  Json simple = Json::array(), fundamental = Json::array(), roots = Json::array(), elements = Json::array();
  for (std::size_t i = 0; i < d.semisimple_rank(); ++i) {
    simple.push_back(to_json(d.simple_root(i)));
    fundamental.push_back(to_json(d.fundamental_weight(i)));
  }
  for (std::size_t k = 0; k < g.positive_root_count(); ++k) roots.push_back(to_json(g.roots()[k]));
  for (std::size_t w = 0; w < g.order(); ++w) {
    Json e = weyl_element_json(g, w);
    e["right_descents"] = subset_list(g.right_descents(w));
    e["left_descents"] = subset_list(g.left_descents(w));
    elements.push_back(e);
  }
  Json parabolics = Json::array();
  for (auto s : subsets_of(d.simple_roots())) {
    Json reps = Json::array(), cell = Json::array();
    for (auto w : g.minimal_coset_reps(s)) reps.push_back(g.element(w).word_string());
    for (auto w : g.c_cell(s)) cell.push_back(g.element(w).word_string());
    parabolics.push_back({{"subset", subset_list(s)},
                          {"subgroup_order", g.parabolic_subgroup(s).size()},
                          {"coset_reps", reps},
                          {"c_cell", cell}});
  }
  const Json result = {{"type", d.label()},
                       {"central_rank", d.central_rank()},
                       {"rank", d.rank()},
                       {"cartan", to_json(d.cartan())},
                       {"simple_roots", simple},
                       {"fundamental_weights", fundamental},
                       {"positive_roots", roots},
                       {"order", g.order()},
                       {"elements", elements},
                       {"parabolics", parabolics}};
  out << result.dump(2) << '\n';
  return 0;
}

// ---- steinberg ----

RootSubset cells_of(const WeylGroup& g, const Options& o) {
  const auto all = g.datum().simple_roots();
  return all - RootSubset::parse(o.parabolic, g.datum().semisimple_rank());
}

int cmd_steinberg_basis(const Options& o, std::ostream& out) {
  const WeylGroup g(datum_of(o));
  const SteinbergSolver solver(g);
  Json result = to_json(solver.basis(cells_of(g, o)), g);
  result["type"] = g.datum().label();
  result["parabolic"] = subset_list(RootSubset::parse(o.parabolic, g.datum().semisimple_rank()));
  out << result.dump(2) << '\n';
  return 0;
}

int cmd_steinberg_expand(const Options& o, std::ostream& out) {
  const WeylGroup g(datum_of(o));
  const auto rank = g.datum().rank();
  if (o.poly_file.empty() == o.monomial.empty()) throw InputError("give exactly one of --poly and --monomial");
  const LaurentPoly p = o.poly_file.empty() ? LaurentPoly::monomial(parse_vector(o.monomial, rank))
                                            : laurent_from_json(read_json_file(o.poly_file), rank);
  const SteinbergSolver solver(g);
  const auto cells = cells_of(g, o);
  const Expansion e = solver.expand(p, cells);
  if (recombine(solver, e) != p) throw ConsistencyError("expansion does not recombine");
  const Json result = {{"type", g.datum().label()},
                       {"input", to_json(p)},
                       {"input_str", p.str()},
                       {"cells", cells.str()},
                       {"coefficients", expansion_json(e, g)}};
  out << result.dump(2) << '\n';
  return 0;
}

int cmd_steinberg_table(const Options& o, std::ostream& out) {
  const WeylGroup g(datum_of(o));
  const SteinbergSolver solver(g);
  const StructureTable t = o.serial ? structure_table_serial(solver) : structure_table(solver);
  const Json result = {{"type", g.datum().label()}, {"products", t.size()}, {"table", to_json(t, g)}};
  out << result.dump(2) << '\n';
  return 0;
}

// ---- gkm ----

std::vector<FixedPointLabel> expected_labels(const Options& o, std::size_t points, std::size_t order) {
  if (o.model == "curves") return curve_labels(points);
  if (o.model == "wonderful") return wonderful_labels(points, order);
  return z_labels(points);
}

int cmd_gkm_check(const Options& o, std::ostream& out) {
  if (o.element_file.empty()) throw InputError("--element is required");
  const Json ej = read_json_file(o.element_file);
  if (ej.value("model", std::string()) != o.model)
    throw InputError("element model '" + ej.value("model", std::string()) + "' does not match --model " + o.model);
  Json result = {{"model", o.model}};
  bool member = false;
  if (o.model == "curves") {
    if (o.curves_file.empty() == o.fan_file.empty()) throw InputError("give exactly one of --curves and --fan");
    const CurveModel m = o.curves_file.empty() ? curve_model_from_fan(fan_from_json(read_json_file(o.fan_file)))
                                               : curve_model_from_json(read_json_file(o.curves_file));
    const PiecewiseElement e = piecewise_from_json(ej, m.rank);
    if (e.labels != curve_labels(m.points)) throw InputError("element labels do not match the fixed points");
    const auto failing = failing_curves(e, m);
    member = failing.empty();
    result["failing_curves"] = failing;
  } else if (o.model == "wonderful" || o.model == "Z") {
    const WeylGroup g(datum_of(o));
    const ChamberFan fan = weyl_chamber_fan(g, subdivision_of(o));
    const PiecewiseElement e = piecewise_from_json(ej, 2 * g.datum().rank(), &g);
    if (e.labels != expected_labels(o, fan.positive.cone_count(), g.order()))
      throw InputError("element labels do not match the cones of the chamber fan");
    if (o.model == "wonderful") {
      member = member_of_wonderful_Y(e, g, fan.positive);
    } else {
      const ZCheck z = check_Z(e, g, fan.positive);
      member = z.member;
      result["failures"] = z.failures;
    }
  } else {
    throw InputError("unknown model '" + o.model + "'");
  }
  result["member"] = member;
  out << result.dump(2) << '\n';
  return member ? 0 : kVerificationFailed;
}

// ---- present ----

Json toric_verification(const Fan& fan, bool& ok) {
  Json checks = Json::array();
  const Presentation point = toric_presentation(fan, BaseRingSpec::point());
  const QuotientInfo q = quotient_info(point);
  checks.push_back(check_json("quotient_rank", q.rank == fan.cone_count(),
                              std::to_string(q.rank) + " vs " + std::to_string(fan.cone_count()) + " cones"));
  const Presentation equiv = toric_presentation(fan, BaseRingSpec::torus_equivariant(fan.rank()));
  const auto images = toric_evaluation_map(fan);
  std::size_t nonzero = 0;
  for (const auto& r : equiv.relations) {
    const auto img = evaluate_relation(r.poly, images);
    for (const auto& v : img.values)
      if (!v.is_zero()) {
        ++nonzero;
        break;
      }
  }
  checks.push_back(check_json("relations_vanish", nonzero == 0, std::to_string(nonzero) + " nonzero images"));
  const std::size_t img_rank = evaluation_image_rank(fan, q.basis_monomials);
  checks.push_back(
      check_json("evaluation_rank", img_rank == fan.cone_count(), std::to_string(img_rank) + " independent images"));
  for (const auto& c : checks) ok = ok && c["passed"].get<bool>();
  return checks;
}

int cmd_present_toric(const Options& o, std::ostream& out) {
  if (o.fan_file.empty()) throw InputError("--fan is required");
  const Fan fan = fan_from_json(read_json_file(o.fan_file));
  Json result = to_json(toric_presentation(fan, base_of(o)));
  bool ok = true;
  if (o.verify) result["verify"] = toric_verification(fan, ok);
  out << result.dump(2) << '\n';
  return ok ? 0 : kVerificationFailed;
}

// Associativity of the product rules over the base Laurent ring, all triples.
std::size_t flag_associativity_failures(const Presentation& p) {
  using Vec = std::map<std::size_t, LaurentPoly>;
  std::map<std::pair<std::size_t, std::size_t>, const Vec*> rules;
  for (const auto& r : p.products) {
    rules[{r.v, r.vp}] = &r.coeffs;
    rules[{r.vp, r.v}] = &r.coeffs;
  }
  const std::size_t n = p.base.base_rank();
  auto mul = [&](const Vec& a, const Vec& b) {
    Vec out;
    for (const auto& [x, cx] : a)
      for (const auto& [y, cy] : b)
        for (const auto& [w, c] : *rules.at({x, y})) {
          auto it = out.try_emplace(w, LaurentPoly::zero(n)).first;
          it->second = it->second + cx * cy * c;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
  };
  std::size_t bad = 0;
  for (auto a : p.basis)
    for (auto b : p.basis)
      for (auto c : p.basis) {
        const Vec ea{{a, LaurentPoly::one(n)}}, eb{{b, LaurentPoly::one(n)}}, ec{{c, LaurentPoly::one(n)}};
        if (mul(mul(ea, eb), ec) != mul(ea, mul(eb, ec))) ++bad;
      }
  return bad;
}

int cmd_present_flag(const Options& o, std::ostream& out) {
  const WeylGroup g(datum_of(o));
  const RootSubset parabolic = RootSubset::parse(o.parabolic, g.datum().semisimple_rank());
  const Presentation p = flag_presentation(g, parabolic, base_of(o));
  Json result = to_json(p, &g);
  bool ok = true;
  if (o.verify) {
    const std::size_t expected = g.minimal_coset_reps(parabolic).size();
    Json checks = Json::array();
    checks.push_back(check_json("basis_rank", p.basis.size() == expected,
                                std::to_string(p.basis.size()) + " vs |W^I| = " + std::to_string(expected)));
    const std::size_t bad = flag_associativity_failures(p);
    checks.push_back(check_json("associativity", bad == 0, std::to_string(bad) + " failing triples"));
    for (const auto& c : checks) ok = ok && c["passed"].get<bool>();
    result["verify"] = checks;
  }
  out << result.dump(2) << '\n';
  return ok ? 0 : kVerificationFailed;
}

// ---- regcomp ----

int cmd_regcomp_build(const Options& o, std::ostream& out) {
  const RegCompModel model(datum_of(o), subdivision_of(o));
  out << to_json(model).dump(2) << '\n';
  return 0;
}

int cmd_regcomp_mul(const Options& o, std::ostream& out) {
  if (o.a_file.empty() || o.b_file.empty()) throw InputError("--a and --b are required");
  const RegCompModel model(datum_of(o), subdivision_of(o));
  const KModuleElement a = kelement_from_json(read_json_file(o.a_file), model);
  const KModuleElement b = kelement_from_json(read_json_file(o.b_file), model);
  out << to_json(multiply(model, a, b), model).dump(2) << '\n';
  return 0;
}

int cmd_regcomp_verify(const Options& o, std::ostream& out) {
  const RegCompModel model(datum_of(o), subdivision_of(o));
  const VerifyReport r = verify_model(model, verify_options(o));
  Json result = to_json(r);
  result["type"] = model.datum().label();
  result["seed"] = o.seed;
  out << result.dump(2) << '\n';
  return r.passed() ? 0 : kVerificationFailed;
}

// ---- verify all ----

int cmd_verify_all(const Options& o, std::ostream& out) {
  const WeylGroup g(datum_of(o));
  const auto all = g.datum().simple_roots();
  Json checks = Json::array();

  bool cosets = true, cells = true;
  std::vector<int> seen(g.order(), 0);
  for (auto s : subsets_of(all)) {
    cosets = cosets && g.minimal_coset_reps(s).size() * g.parabolic_subgroup(s).size() == g.order();
    for (auto w : g.c_cell(s)) ++seen[w];
  }
  for (int c : seen) cells = cells && c == 1;
  checks.push_back(check_json("weyl.coset_factorisation", cosets, "|W^I| |W_I| = |W| = " + std::to_string(g.order())));
  checks.push_back(check_json("weyl.c_partition", cells));

  const SteinbergSolver solver(g);
  const StructureTable table = structure_table(solver);
  checks.push_back(check_json("steinberg.basis_size", solver.basis(all).entries.size() == g.order()));
  checks.push_back(check_json("steinberg.table_certified", table.size() == g.order() * g.order(),
                              std::to_string(table.size()) + " products"));

  bool flag = true;
  for (auto s : subsets_of(all)) {
    const Presentation p = flag_presentation(solver, s, BaseRingSpec::point());
    flag = flag && p.basis.size() == g.minimal_coset_reps(s).size();
  }
  checks.push_back(check_json("flag.rank", flag));

  const RegCompModel model(g.datum(), subdivision_of(o));
  for (const auto& c : verify_model(model, verify_options(o)).checks) checks.push_back(check_json("regcomp." + c.name, c.passed, c.detail));

  bool ok = true;
  for (const auto& c : checks) ok = ok && c["passed"].get<bool>();
  const Json result = {{"type", g.datum().label()}, {"seed", o.seed}, {"passed", ok}, {"checks", checks}};
  out << result.dump(2) << '\n';
  return ok ? 0 : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Equivariant K-theory of toric, flag and regular compactification bundles", "eqk"};
  app.require_subcommand(1);
  std::function<int(const Options&, std::ostream&)> action;
  auto bind = [&](CLI::App* sub, int (*fn)(const Options&, std::ostream&)) {
    sub->callback([&action, fn] { action = fn; });
  };

  auto* rootsys = app.add_subcommand("rootsys", "Root datum, Weyl group, cosets and C-cells");
  add_type(rootsys, o);
  bind(rootsys, cmd_rootsys);

  auto* st = app.add_subcommand("steinberg", "Steinberg bases, expansions and structure constants");
  st->require_subcommand(1);
  auto* st_basis = st->add_subcommand("basis", "Basis of the W_P-invariants over the W-invariants");
  auto* st_expand = st->add_subcommand("expand", "Expand a W_P-invariant in the Steinberg basis");
  auto* st_table = st->add_subcommand("table", "All structure constants a^w_{v,v'}");
  for (auto* s : {st_basis, st_expand}) {
    add_type(s, o);
    s->add_option("--parabolic", o.parabolic, "Invariance set P as 1-based indices, e.g. \"1,2\"")->capture_default_str();
  }
  st_expand->add_option("--poly", o.poly_file, "Laurent polynomial JSON file");
  st_expand->add_option("--monomial", o.monomial, "Exponent of a single monomial, e.g. \"1,0\"");
  add_type(st_table, o);
  st_table->add_flag("--serial", o.serial, "Use the serial reference kernel");
  bind(st_basis, cmd_steinberg_basis);
  bind(st_expand, cmd_steinberg_expand);
  bind(st_table, cmd_steinberg_table);

  auto* gkm = app.add_subcommand("gkm", "Localization ring membership");
  gkm->require_subcommand(1);
  auto* gkm_check = gkm->add_subcommand("check", "Check the divisibility congruences of a piecewise element");
  gkm_check->add_option("--model", o.model, "curves | wonderful | Z")
      ->check(CLI::IsMember({"curves", "wonderful", "Z"}))
      ->capture_default_str();
  gkm_check->add_option("--element", o.element_file, "Piecewise element JSON file");
  gkm_check->add_option("--curves", o.curves_file, "Curve model JSON file (curves)");
  gkm_check->add_option("--fan", o.fan_file, "Smooth fan JSON file (curves)");
  gkm_check->add_option("--subdivision", o.subdivision_file, "Smooth subdivision of the positive chamber");
  add_type(gkm_check, o);
  bind(gkm_check, cmd_gkm_check);

  auto* present = app.add_subcommand("present", "Generator/relation presentations");
  present->require_subcommand(1);
  auto* pt = present->add_subcommand("toric", "Presentation of a smooth complete toric bundle");
  pt->add_option("--fan", o.fan_file, "Fan JSON file");
  auto* pf = present->add_subcommand("flag", "Presentation of a flag bundle");
  add_type(pf, o);
  pf->add_option("--parabolic", o.parabolic, "Parabolic subset I as 1-based indices")->capture_default_str();
  for (auto* s : {pt, pf}) {
    s->add_option("--base", o.base_file, "Base ring JSON file (default: the point)");
    s->add_flag("--verify", o.verify, "Run the rank and evaluation cross-checks");
  }
  bind(pt, cmd_present_toric);
  bind(pf, cmd_present_flag);

  auto* rc = app.add_subcommand("regcomp", "Regular compactification model");
  rc->require_subcommand(1);
  auto* rc_build = rc->add_subcommand("build", "Basis, lambda factors and structure constants");
  auto* rc_mul = rc->add_subcommand("mul", "Multiply two module elements");
  auto* rc_verify = rc->add_subcommand("verify", "Ring axioms and the embedding oracle");
  for (auto* s : {rc_build, rc_mul, rc_verify}) {
    add_type(s, o);
    s->add_option("--subdivision", o.subdivision_file, "Smooth subdivision of the positive chamber");
  }
  rc_mul->add_option("--a", o.a_file, "Left factor JSON file");
  rc_mul->add_option("--b", o.b_file, "Right factor JSON file");
  add_seed(rc_verify, o);
  bind(rc_build, cmd_regcomp_build);
  bind(rc_mul, cmd_regcomp_mul);
  bind(rc_verify, cmd_regcomp_verify);

  auto* verify = app.add_subcommand("verify", "Verification suites");
  verify->require_subcommand(1);
  auto* v_all = verify->add_subcommand("all", "Weyl, Steinberg, flag and regcomp checks for one root datum");
  add_type(v_all, o);
  add_seed(v_all, o);
  v_all->add_option("--subdivision", o.subdivision_file, "Smooth subdivision of the positive chamber");
  bind(v_all, cmd_verify_all);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    return action(o, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return 1;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return 3;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace eqk

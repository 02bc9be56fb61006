// Acceptance run: one PASS/FAIL line per criterion, with its wall-clock limit.
// Usage: eqk_acceptance [path-to-eqk]   (criterion 9 runs the CLI twice)

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>

#include "eqk/cli.hpp"
#include "eqk/gkm.hpp"
#include "eqk/presentations.hpp"
#include "eqk/regcomp.hpp"
#include "eqk/steinberg.hpp"

using namespace eqk;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

LaurentPoly e1(Coord k) { return LaurentPoly::monomial(LatticeVector{k}); }

Outcome weyl_combinatorics(double& worst) {
  const std::vector<std::pair<const char*, std::size_t>> data = {
      {"A1", 2}, {"A1xA1", 4}, {"A2", 6}, {"B2", 8}, {"A3", 24}};
  std::ostringstream detail;
  bool ok = true;
  for (const auto& [label, order] : data) {
    const auto t0 = std::chrono::steady_clock::now();
    const WeylGroup g(RootDatum::from_label(label));
    bool good = g.order() == order;
    std::vector<int> seen(g.order(), 0);
    for (auto s : subsets_of(g.datum().simple_roots())) {
      good = good && g.minimal_coset_reps(s).size() * g.parabolic_subgroup(s).size() == g.order();
      for (auto w : g.c_cell(s)) ++seen[w];
    }
    for (int c : seen) good = good && c == 1;
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    worst = std::max(worst, dt);
    ok = ok && good;
    detail << label << ":" << g.order() << (good ? "" : "!") << " ";
  }
  return {ok, detail.str() + "(slowest datum " + std::to_string(worst) + " s)"};
}

Outcome steinberg_a1() {
  const WeylGroup g(RootDatum::from_label("A1"));
  const SteinbergSolver solver(g);
  const auto s = *g.find_word("s1");
  const bool basis = solver.f(0) == LaurentPoly::one(1) && solver.f(s) == e1(-1);
  const auto c = solver.expand(e1(1), g.datum().simple_roots());
  const bool coeffs = c.at(0) == e1(1) + e1(-1) && c.at(s) == LaurentPoly::constant(1, -1);
  const bool remult = recombine(solver, c) == e1(1);
  return {basis && coeffs && remult, "f_1 = " + solver.f(0).str() + ", f_s = " + solver.f(s).str() + "; c_1 = " +
                                         c.at(0).str() + ", c_s = " + c.at(s).str()};
}

Outcome structure_constants_a2() {
  const WeylGroup g(RootDatum::from_label("A2"));
  const SteinbergSolver solver(g);
  const StructureTable t = structure_table(solver);
  const auto all = g.datum().simple_roots();
  std::size_t certified = 0;
  for (const auto& [key, coeffs] : t) {
    const RootSubset cells = g.right_descents(key.first) | g.right_descents(key.second);
    bool ok = recombine(solver, coeffs) == solver.f(key.first) * solver.f(key.second);
    for (const auto& [w, c] : coeffs) ok = ok && is_invariant(g, c, all) && g.right_descents(w).is_subset_of(cells);
    if (ok) ++certified;
  }
  return {t.size() == 36 && certified == 36, std::to_string(certified) + "/" + std::to_string(t.size()) + " products certified"};
}

Outcome gkm_rings() {
  std::mt19937_64 rng(0);
  std::size_t checked = 0, failures = 0;
  for (const Fan& fan : {fan_p1(), fan_p2(), fan_p1xp1()}) {
    const CurveModel m = curve_model_from_fan(fan);
    std::vector<PiecewiseElement> members;
    for (int k = 0; k < 100; ++k) members.push_back(random_Y_member(m, rng));
    for (std::size_t k = 0; k < members.size(); ++k) {
      const auto& a = members[k];
      const auto& b = members[(k + 1) % members.size()];
      for (const auto& x : {a, pointwise_add(a, b), pointwise_mul(a, b), random_family(m, rng)}) {
        bool conj = true;
        for (const auto& c : m.curves) conj = conj && member_of_Yij(x, c);
        const bool in = member_of_Y(x, m);
        if (in != conj) ++failures;
        ++checked;
      }
      if (!member_of_Y(a, m) || !member_of_Y(pointwise_add(a, b), m) || !member_of_Y(pointwise_mul(a, b), m)) ++failures;
    }
  }
  return {failures == 0, std::to_string(checked) + " elements over P1, P2, P1xP1; " + std::to_string(failures) + " failures"};
}

Outcome toric_presentations() {
  std::ostringstream detail;
  bool ok = true;
  const std::vector<std::pair<const char*, Fan>> fans = {{"P1", fan_p1()}, {"P2", fan_p2()}, {"P1xP1", fan_p1xp1()}};
  for (const auto& [name, fan] : fans) {
    const QuotientInfo q = quotient_info(toric_presentation(fan, BaseRingSpec::point()));
    const std::size_t img = evaluation_image_rank(fan, q.basis_monomials);
    const auto images = toric_evaluation_map(fan);
    bool zero = true;
    for (const auto& r : toric_presentation(fan, BaseRingSpec::torus_equivariant(fan.rank())).relations)
      for (const auto& v : evaluate_relation(r.poly, images).values) zero = zero && v.is_zero();
    ok = ok && q.rank == fan.cone_count() && img == fan.cone_count() && zero;
    detail << name << ": rank " << q.rank << ", image rank " << img << (zero ? "" : ", nonzero relation image") << "; ";
  }
  return {ok, detail.str()};
}

Outcome flag_presentations() {
  struct Case {
    const char* label;
    const char* parabolic;
    std::size_t expected;
  };
  std::ostringstream detail;
  bool ok = true;
  for (const Case& c : {Case{"A1", "", 2}, Case{"A2", "", 6}, Case{"A2", "1", 3}}) {
    const WeylGroup g(RootDatum::from_label(c.label));
    const auto p = flag_presentation(g, RootSubset::parse(c.parabolic, g.datum().semisimple_rank()), BaseRingSpec::point());
    const std::size_t r = quotient_rank(p);
    ok = ok && r == c.expected && r == g.minimal_coset_reps(p.parabolic).size();
    detail << c.label << " I={" << c.parabolic << "}: " << r << "; ";
  }
  return {ok, detail.str()};
}

Outcome regcomp_a1() {
  const RegCompModel m(RootDatum::from_label("A1"));
  const std::size_t s = *m.group().find_word("s1");
  const bool size = m.basis().size() == 2;
  bool identity = true;
  for (auto v : m.basis())
    identity = identity && multiply(m, m.one(), m.basis_element(v)) == m.basis_element(v) &&
               multiply(m, m.basis_element(v), m.one()) == m.basis_element(v);
  const LaurentPoly lambda = m.lambda(RootSubset::all(1));
  KModuleElement expected = m.zero();
  expected.coefficients.at(s) = m.k_constant(lambda * embed_second(e1(1) + e1(-1)));
  expected.coefficients.at(0) = m.k_constant(-(lambda * lambda));
  const bool square = multiply(m, m.basis_element(s), m.basis_element(s)) == expected;
  const auto pairs = oracle_pairs(m, 0, 50);
  const std::size_t hom = homomorphism_failures(m, pairs);
  bool z = true;
  for (const auto& [a, b] : pairs) z = z && member_of_Z(embed_to_Z(m, a), m.group(), m.positive_fan());
  const std::size_t rank = basis_image_rank(m);
  std::ostringstream detail;
  detail << "basis " << m.basis().size() << ", identity " << identity << ", f_s^2 " << square << ", hom failures "
         << hom << "/" << pairs.size() << ", Z " << z << ", image rank " << rank;
  return {size && identity && square && hom == 0 && pairs.size() >= 50 && z && rank == 2, detail.str()};
}

Outcome mutation_sensitivity() {
  const RootDatum d = RootDatum::from_label("A1");
  const RegCompModel clean(d);
  const auto pairs = oracle_pairs(clean, 0, 50);
  std::size_t mutants = 0, caught = 0;
  for (const auto& [key, coeffs] : clean.structure_table())
    for (const auto& [w, c] : coeffs) {
      RegCompModel bad = clean;
      bad.corrupt_structure_constant(key.first, key.second, w, 1);
      ++mutants;
      if (homomorphism_failures(bad, pairs) > 0) ++caught;
    }
  for (auto subset : subsets_of(d.simple_roots())) {
    RegCompModel bad = clean;
    bad.corrupt_lambda(subset, 1);
    ++mutants;
    if (homomorphism_failures(bad, pairs) > 0) ++caught;
  }
  const bool baseline = homomorphism_failures(clean, pairs) == 0;
  return {baseline && caught == mutants,
          std::to_string(caught) + "/" + std::to_string(mutants) + " single corruptions detected"};
}

std::string capture(const std::string& command) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  return out;
}

Outcome determinism(const std::string& exe) {
  std::string a, b;
  if (exe.empty()) {
    std::ostringstream o1, o2, err;
    run({"verify", "all", "--type", "A1", "--seed", "0"}, o1, err);
    run({"verify", "all", "--type", "A1", "--seed", "0"}, o2, err);
    a = o1.str();
    b = o2.str();
  } else {
    const std::string cmd = "'" + exe + "' verify all --type A1 --seed 0";
    a = capture(cmd);
    b = capture(cmd);
  }
  const bool passed = !a.empty() && a == b && a.find("\"passed\": true") != std::string::npos;
  return {passed, std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different") +
                      (exe.empty() ? " (in-process)" : " (two processes)")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string exe = argc > 1 ? argv[1] : "";
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
    const char* limit_text;
  };
  double weyl_worst = 0;
  const std::vector<Criterion> criteria = {
      {1, "Weyl combinatorics", 1, [&] { return weyl_combinatorics(weyl_worst); }, "1 s per datum"},
      {2, "Steinberg basis (A1)", 1, steinberg_a1, "1 s"},
      {3, "Structure constants (A2)", 120, structure_constants_a2, "120 s"},
      {4, "GKM rings", 30, gkm_rings, "30 s"},
      {5, "Toric presentations", 30, toric_presentations, "30 s"},
      {6, "Flag presentations", 30, flag_presentations, "30 s"},
      {7, "Regular compactification (A1)", 60, regcomp_a1, "60 s"},
      {8, "Mutation sensitivity", 60, mutation_sensitivity, "60 s"},
      {9, "Determinism", 60, [&] { return determinism(exe); }, "none stated; 60 s"},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.id == 1 ? weyl_worst < c.limit : dt < c.limit;
    const bool pass = o.passed && in_time;
    if (!pass) ++failed;
    std::printf("[%s] %d %-30s %8.3f s (limit %s)  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, dt, c.limit_text,
                o.detail.c_str(), in_time ? "" : "  [over time limit]");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

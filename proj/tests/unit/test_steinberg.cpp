#include <gtest/gtest.h>

#include <random>

#include "eqk/errors.hpp"
#include "eqk/gkm.hpp"
#include "eqk/steinberg.hpp"

using namespace eqk;

namespace {

LaurentPoly e(std::initializer_list<Coord> v) { return LaurentPoly::monomial(LatticeVector(v)); }

std::size_t word(const WeylGroup& g, const char* w) { return *g.find_word(w); }

}  // namespace

TEST(Steinberg, PV) {
  const WeylGroup a1(RootDatum::from_label("A1"));
  EXPECT_EQ(p_v(a1, 0), LaurentPoly::one(1));
  EXPECT_EQ(p_v(a1, 1), e({1}));
  const WeylGroup a2(RootDatum::from_label("A2"));
  EXPECT_EQ(p_v(a2, word(a2, "s1")), e({1, 0}));
}

TEST(Steinberg, BasisElements) {
  const WeylGroup a1(RootDatum::from_label("A1"));
  EXPECT_EQ(steinberg_f(a1, RootSubset{}, 0), LaurentPoly::one(1));
  EXPECT_EQ(steinberg_f(a1, RootSubset::all(1), 0), LaurentPoly::one(1));
  EXPECT_EQ(steinberg_f(a1, RootSubset{}, 1), e({-1}));
  EXPECT_THROW(steinberg_f(a1, RootSubset::all(1), 1), InputError);
  const WeylGroup a2(RootDatum::from_label("A2"));
  EXPECT_EQ(steinberg_f(a2, RootSubset{}, word(a2, "s1")), e({-1, 1}));
  EXPECT_EQ(modified_f(a1, 1), e({-1}));
}

TEST(Steinberg, ExpansionExamples) {
  const WeylGroup a1(RootDatum::from_label("A1"));
  const SteinbergSolver solver(a1);
  const auto all = RootSubset::all(1);
  const auto c = solver.expand(e({1}), all);
  EXPECT_EQ(c.at(0), e({1}) + e({-1}));
  EXPECT_EQ(c.at(1), LaurentPoly::constant(1, -1));
  // a W-invariant over the one-element basis of the trivial cell set
  const auto inv = solver.expand(e({1}) + e({-1}), RootSubset{});
  ASSERT_EQ(inv.size(), 1u);
  EXPECT_EQ(inv.at(0), e({1}) + e({-1}));
  // f_v expands to the unit vector at v
  const auto unit = solver.expand(e({-1}), all);
  EXPECT_EQ(unit.at(0), LaurentPoly::zero(1));
  EXPECT_EQ(unit.at(1), LaurentPoly::one(1));
  EXPECT_THROW(solver.expand(e({1}), RootSubset{}), InputError);
}

TEST(Steinberg, A1StructureConstants) {
  const WeylGroup a1(RootDatum::from_label("A1"));
  const SteinbergSolver solver(a1);
  const auto a = solver.structure_constants(1, 1);
  EXPECT_EQ(a.at(1), e({1}) + e({-1}));
  EXPECT_EQ(a.at(0), LaurentPoly::constant(1, -1));
  const auto unit = solver.structure_constants(0, 1);
  EXPECT_EQ(unit.at(1), LaurentPoly::one(1));
  EXPECT_EQ(unit.at(0), LaurentPoly::zero(1));
}

TEST(SteinbergProperty, UnitRowAndSupport) {
  for (const char* label : {"A1", "A1xA1", "A2", "B2"}) {
    const WeylGroup g(RootDatum::from_label(label));
    const SteinbergSolver solver(g);
    const StructureTable t = structure_table(solver);
    EXPECT_EQ(t.size(), g.order() * g.order());
    const auto all = g.datum().simple_roots();
    for (const auto& [key, coeffs] : t) {
      const auto [v, vp] = key;
      const RootSubset cells = g.right_descents(v) | g.right_descents(vp);
      for (const auto& [w, c] : coeffs) {
        EXPECT_TRUE(g.right_descents(w).is_subset_of(cells));
        EXPECT_TRUE(is_invariant(g, c, all)) << label;
        if (v == 0) EXPECT_EQ(c, w == vp ? LaurentPoly::one(g.datum().rank()) : LaurentPoly::zero(g.datum().rank()));
      }
      EXPECT_EQ(recombine(solver, coeffs), solver.f(v) * solver.f(vp)) << label;
    }
  }
}

TEST(SteinbergProperty, BasisSizesPerParabolic) {
  for (const char* label : {"A1", "A2", "B2", "A3"}) {
    const WeylGroup g(RootDatum::from_label(label));
    const SteinbergSolver solver(g);
    const auto all = g.datum().simple_roots();
    for (auto p : subsets_of(all)) {
      const auto b = solver.basis(all - p);
      EXPECT_EQ(b.entries.size(), g.minimal_coset_reps(p).size()) << label << " P=" << p.str();
      for (const auto& entry : b.entries) EXPECT_TRUE(is_invariant(g, entry.f, p));
    }
  }
}

TEST(SteinbergProperty, RandomExpansionsRecombine) {
  const WeylGroup g(RootDatum::from_label("A2"));
  const SteinbergSolver solver(g);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_laurent(2, rng, 3, 2, 3);
    const auto c = solver.expand(p, g.datum().simple_roots());
    EXPECT_EQ(recombine(solver, c), p);
    for (const auto& [v, cv] : c) EXPECT_TRUE(is_invariant(g, cv, g.datum().simple_roots()));
  }
}

TEST(SteinbergProperty, SerialAndParallelTablesAgree) {
  for (const char* label : {"A2", "B2"}) {
    const WeylGroup g(RootDatum::from_label(label));
    const SteinbergSolver solver(g);
    EXPECT_EQ(structure_table(solver), structure_table_serial(solver)) << label;
  }
}

TEST(Steinberg, CentralCoordinates) {
  const WeylGroup g(RootDatum::from_label("A1", 1));
  const SteinbergSolver solver(g);
  const auto c = solver.expand(e({1, 1}), g.datum().simple_roots());
  EXPECT_EQ(recombine(solver, c), e({1, 1}));
  EXPECT_EQ(c.at(0), e({1, 1}) + e({1, -1}));
}

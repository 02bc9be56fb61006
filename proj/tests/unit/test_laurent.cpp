#include <gtest/gtest.h>

#include <random>

#include "eqk/errors.hpp"
#include "eqk/gkm.hpp"
#include "eqk/laurent.hpp"

using namespace eqk;

namespace {

LaurentPoly e(std::initializer_list<Coord> v) { return LaurentPoly::monomial(LatticeVector(v)); }

}  // namespace

TEST(Laurent, Arithmetic) {
  EXPECT_EQ(e({0, 0}), LaurentPoly::one(2));
  EXPECT_EQ(e({1, 2}) * e({-3, 1}), e({-2, 3}));
  const LatticeVector alpha{2, -1};
  EXPECT_EQ(one_minus_exp_neg(alpha) * (LaurentPoly::one(2) + LaurentPoly::monomial(-alpha)),
            one_minus_exp_neg(2 * alpha));
  EXPECT_EQ((e({1}) - e({1})).size(), 0u);
  EXPECT_THROW(e({1}) + e({1, 0}), InputError);
  EXPECT_EQ((e({-1}) + LaurentPoly::constant(1, -3) + LaurentPoly::monomial(LatticeVector{1}, 2)).str(),
            "e^(-1) - 3 + 2 e^(1)");
}

TEST(Laurent, WeylAction) {
  const WeylGroup a1(RootDatum::from_label("A1"));
  const LaurentPoly f = e({1}) + e({-1});
  EXPECT_EQ(weyl_act(a1, 0, e({1})), e({1}));
  EXPECT_EQ(weyl_act(a1, 1, e({1})), e({-1}));
  EXPECT_EQ(weyl_act(a1, 1, f), f);
  EXPECT_TRUE(is_invariant(a1, LaurentPoly::one(1), RootSubset::all(1)));
  EXPECT_TRUE(is_invariant(a1, f, RootSubset::all(1)));
  EXPECT_FALSE(is_invariant(a1, e({1}), RootSubset::all(1)));
}

TEST(Laurent, OrbitSums) {
  const WeylGroup a1(RootDatum::from_label("A1"));
  const auto all1 = a1.parabolic_subgroup(RootSubset::all(1));
  EXPECT_EQ(orbit_sum(a1, LatticeVector{0}, all1), LaurentPoly::one(1));
  EXPECT_EQ(orbit_sum(a1, LatticeVector{1}, all1), e({1}) + e({-1}));
  const WeylGroup a2(RootDatum::from_label("A2"));
  const LaurentPoly o = orbit_sum(a2, LatticeVector{1, 0}, a2.parabolic_subgroup(RootSubset::all(2)));
  EXPECT_EQ(o, e({1, 0}) + e({-1, 1}) + e({0, -1}));
}

TEST(Laurent, DivideExact) {
  const LatticeVector chi{1, 1};
  EXPECT_EQ(divide_exact(one_minus_exp_neg(chi), chi), LaurentPoly::one(2));
  EXPECT_EQ(divide_exact(one_minus_exp_neg(2 * chi), chi), LaurentPoly::one(2) + LaurentPoly::monomial(-chi));
  EXPECT_FALSE(divide_exact(LaurentPoly::one(2) - e({1, -1}), chi));
  EXPECT_FALSE(divide_exact(LaurentPoly::one(2), chi));
  EXPECT_EQ(divide_exact(LaurentPoly::zero(2), chi), LaurentPoly::zero(2));
  EXPECT_THROW(divide_exact(LaurentPoly::one(2), LatticeVector{0, 0}), InputError);
  // non-primitive characters
  const LatticeVector two{2, 0};
  EXPECT_FALSE(divide_exact(one_minus_exp_neg(LatticeVector{1, 0}), two));
  EXPECT_EQ(divide_exact(one_minus_exp_neg(LatticeVector{4, 0}), two), LaurentPoly::one(2) + e({-2, 0}));
}

TEST(Laurent, Augmentation) {
  EXPECT_EQ(augmentation(LaurentPoly::one(1)), 1);
  EXPECT_EQ(augmentation(e({1}) + e({-1})), 2);
  EXPECT_EQ(augmentation(one_minus_exp_neg(LatticeVector{2})), 0);
}

TEST(Laurent, WeylCharacter) {
  const WeylGroup a2(RootDatum::from_label("A2"));
  EXPECT_EQ(augmentation(weyl_character(a2, LatticeVector{1, 1})), 8);
  EXPECT_EQ(augmentation(weyl_character(a2, LatticeVector{2, 0})), 6);
  const WeylGroup a1(RootDatum::from_label("A1"));
  EXPECT_EQ(weyl_character(a1, LatticeVector{2}), e({2}) + LaurentPoly::one(1) + e({-2}));
}

TEST(Laurent, Embeddings) {
  EXPECT_EQ(embed_first(e({1, 2})), e({1, 2, 0, 0}));
  EXPECT_EQ(embed_second(e({1, 2})), e({0, 0, 1, 2}));
}

TEST(LaurentProperty, RingAxioms) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_laurent(2, rng), b = random_laurent(2, rng), c = random_laurent(2, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + LaurentPoly::zero(2), a);
    EXPECT_EQ(a * LaurentPoly::one(2), a);
    EXPECT_EQ(a - a, LaurentPoly::zero(2));
    EXPECT_EQ(augmentation(a * b), augmentation(a) * augmentation(b));
  }
}

TEST(LaurentProperty, DivisionRoundTrip) {
  std::mt19937_64 rng(11);
  const std::vector<LatticeVector> chis = {{1, 0}, {1, -1}, {2, 3}, {0, -2}};
  for (int trial = 0; trial < 100; ++trial) {
    const auto q = random_laurent(2, rng);
    for (const auto& chi : chis) EXPECT_EQ(divide_exact(q * one_minus_exp_neg(chi), chi), q);
  }
}

TEST(LaurentProperty, WeylActionIsRingHomomorphism) {
  const WeylGroup b2(RootDatum::from_label("B2"));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_laurent(2, rng), b = random_laurent(2, rng);
    for (std::size_t w = 0; w < b2.order(); ++w)
      EXPECT_EQ(weyl_act(b2, w, a * b), weyl_act(b2, w, a) * weyl_act(b2, w, b));
  }
}

#include <gtest/gtest.h>

#include "eqk/errors.hpp"
#include "eqk/fan.hpp"

using namespace eqk;

namespace {

Fan a2_subdivision() { return Fan(2, {{2, 1}, {1, 1}, {1, 2}}, {{0, 1}, {1, 2}}); }

}  // namespace

TEST(Fan, Smoothness) {
  EXPECT_TRUE(is_smooth(fan_p1()));
  EXPECT_TRUE(is_smooth(fan_p2()));
  EXPECT_TRUE(is_smooth(fan_p1xp1()));
  EXPECT_FALSE(is_smooth(Cone{{{1, 0}, {1, 2}}}, 2));
}

TEST(Fan, Validation) {
  EXPECT_THROW(Fan(2, {{2, 0}, {0, 1}}, {{0, 1}}), InputError);
  EXPECT_THROW(Fan(2, {{1, 0}, {0, 1}}, {{0, 2}}), InputError);
  EXPECT_THROW(Fan(2, {{1, 0}, {2, 1}, {0, 1}}, {{0, 1, 2}}), InputError);
}

TEST(Fan, CommonFacet) {
  const auto p1 = common_facet(fan_p1(), 0, 1);
  ASSERT_TRUE(p1);
  EXPECT_TRUE(p1->rays.empty());
  EXPECT_EQ(p1->chi, (LatticeVector{1}));

  const Fan p2 = fan_p2();
  const auto f = common_facet(p2, 0, 1);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->rays, (std::vector<std::size_t>{1}));
  EXPECT_EQ(dot(f->chi, LatticeVector{0, 1}), 0);
  EXPECT_EQ(f->chi, (LatticeVector{1, 0}));

  // opposite quadrants of P1 x P1 meet only in the origin
  EXPECT_FALSE(common_facet(fan_p1xp1(), 0, 2));
}

TEST(Fan, FacetOrthogonalToRoot) {
  const RootDatum a1 = RootDatum::from_label("A1");
  EXPECT_TRUE(facet_orthogonal_to_root(positive_chamber(a1), a1.simple_root(0)));
  const RootDatum a2 = RootDatum::from_label("A2");
  const Cone chamber = positive_chamber(a2);
  EXPECT_TRUE(facet_orthogonal_to_root(chamber, a2.simple_root(0)));
  EXPECT_TRUE(facet_orthogonal_to_root(chamber, a2.simple_root(1)));
  const Fan inner(2, {{2, 1}, {3, 2}, {1, 1}, {1, 2}}, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_FALSE(facet_orthogonal_to_root(inner.cone(1), a2.simple_root(0)));
  EXPECT_FALSE(facet_orthogonal_to_root(inner.cone(1), a2.simple_root(1)));
}

TEST(Fan, DualBasisCharacter) {
  EXPECT_EQ(dual_basis_character(fan_p1().cone(0), 0), (LatticeVector{1}));
  const Fan p2 = fan_p2();
  EXPECT_EQ(dual_basis_character(p2.cone(0), 0), (LatticeVector{1, 0}));
  const Cone c = p2.cone(1);  // rays (0,1), (-1,-1)
  EXPECT_EQ(dual_basis_character(c, 1), (LatticeVector{-1, 0}));
  EXPECT_THROW(dual_basis_character(Cone{{{1, 0}, {1, 2}}}, 0), InputError);
}

TEST(Fan, Completeness) {
  EXPECT_TRUE(is_complete(fan_p1()));
  EXPECT_TRUE(is_complete(fan_p2()));
  EXPECT_TRUE(is_complete(fan_p1xp1()));
  EXPECT_FALSE(is_complete(Fan(2, {{1, 0}, {0, 1}}, {{0, 1}})));
}

TEST(Fan, WeylChamberFans) {
  const WeylGroup a1(RootDatum::from_label("A1"));
  const auto f1 = weyl_chamber_fan(a1);
  EXPECT_EQ(f1.positive.cone_count(), 1u);
  EXPECT_EQ(f1.full.cone_count(), 2u);

  const WeylGroup a1a1(RootDatum::from_label("A1xA1"));
  const auto f2 = weyl_chamber_fan(a1a1);
  EXPECT_EQ(f2.positive.cone_count(), 1u);
  EXPECT_EQ(f2.full.cone_count(), 4u);
  EXPECT_TRUE(is_smooth(f2.full));

  const WeylGroup a2(RootDatum::from_label("A2"));
  EXPECT_FALSE(is_smooth(positive_chamber(a2.datum()), 2));
  EXPECT_THROW(weyl_chamber_fan(a2), InputError);
  const auto f3 = weyl_chamber_fan(a2, a2_subdivision());
  EXPECT_EQ(f3.positive.cone_count(), 2u);
  EXPECT_EQ(f3.full.cone_count(), 12u);
  EXPECT_TRUE(is_smooth(f3.full));
  EXPECT_TRUE(is_complete(f3.full));

  // a subdivision that leaves a gap
  EXPECT_THROW(weyl_chamber_fan(a2, Fan(2, {{2, 1}, {1, 1}}, {{0, 1}})), InputError);
  // central torus
  EXPECT_THROW(weyl_chamber_fan(WeylGroup(RootDatum::from_label("A1", 1))), InputError);
}

TEST(Fan, CoweightAction) {
  const WeylGroup a2(RootDatum::from_label("A2"));
  for (std::size_t w = 0; w < a2.order(); ++w)
    for (const auto& lambda : {LatticeVector{1, 0}, LatticeVector{-2, 3}})
      for (const auto& n : {LatticeVector{2, 1}, LatticeVector{1, 1}})
        EXPECT_EQ(dot(a2.act(w, lambda), act_on_coweight(a2, w, n)), dot(lambda, n));
}

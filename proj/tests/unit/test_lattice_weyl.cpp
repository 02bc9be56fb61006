#include <gtest/gtest.h>

#include <set>

#include "eqk/errors.hpp"
#include "eqk/lattice_weyl.hpp"

using namespace eqk;

namespace {

const std::vector<std::pair<std::string, std::size_t>> kOrders = {
    {"A1", 2}, {"A1xA1", 4}, {"A2", 6}, {"B2", 8}, {"A3", 24}};

}  // namespace

TEST(Weyl, GroupOrders) {
  for (const auto& [label, order] : kOrders) EXPECT_EQ(WeylGroup(RootDatum::from_label(label)).order(), order) << label;
}

TEST(Weyl, CartanConvention) {
  const auto b2 = RootDatum::from_label("B2");
  EXPECT_EQ(b2.simple_root(0), (LatticeVector{2, -2}));
  EXPECT_EQ(b2.simple_root(1), (LatticeVector{-1, 2}));
  EXPECT_THROW(RootDatum::from_label("G2"), InputError);
}

TEST(Weyl, LexminReducedWords) {
  const WeylGroup g(RootDatum::from_label("A2"));
  std::vector<std::string> words;
  for (std::size_t w = 0; w < g.order(); ++w) words.push_back(g.element(w).word_string());
  EXPECT_EQ(words, (std::vector<std::string>{"e", "s1", "s2", "s1s2", "s2s1", "s1s2s1"}));
  EXPECT_EQ(g.find_word("s2s1s2"), g.find_word("s1s2s1"));
  EXPECT_FALSE(g.find_word("s3"));
}

TEST(Weyl, MinimalCosetReps) {
  const WeylGroup a1(RootDatum::from_label("A1"));
  EXPECT_EQ(a1.minimal_coset_reps(RootSubset::all(1)), (std::vector<std::size_t>{0}));
  const WeylGroup a2(RootDatum::from_label("A2"));
  EXPECT_EQ(a2.minimal_coset_reps(RootSubset{}).size(), 6u);
  EXPECT_EQ(a2.minimal_coset_reps(RootSubset::single(0)).size(), 3u);
}

TEST(Weyl, CPartition) {
  const WeylGroup a1(RootDatum::from_label("A1"));
  EXPECT_EQ(a1.c_cell(RootSubset{}), (std::vector<std::size_t>{0}));
  EXPECT_EQ(a1.c_cell(RootSubset::all(1)), (std::vector<std::size_t>{*a1.find_word("s1")}));
  const WeylGroup a2(RootDatum::from_label("A2"));
  std::size_t total = 0;
  for (auto s : subsets_of(RootSubset::all(2))) total += a2.c_cell(s).size();
  EXPECT_EQ(total, 6u);
}

TEST(Weyl, Action) {
  const WeylGroup a1(RootDatum::from_label("A1"));
  EXPECT_EQ(a1.act(0, LatticeVector{1}), (LatticeVector{1}));
  EXPECT_EQ(a1.act(1, LatticeVector{1}), (LatticeVector{-1}));
  const WeylGroup a2(RootDatum::from_label("A2"));
  EXPECT_EQ(a2.act(*a2.find_word("s1"), LatticeVector{1, 0}), (LatticeVector{-1, 1}));
  const WeylGroup c(RootDatum::from_label("A1", 1));
  EXPECT_EQ(c.act(1, LatticeVector{0, 1}), (LatticeVector{0, -1}));
  EXPECT_EQ(c.act(1, LatticeVector{1, 0}), (LatticeVector{1, 0}));
}

TEST(WeylProperty, CosetFactorisationAndPartition) {
  for (const auto& [label, order] : kOrders) {
    const WeylGroup g(RootDatum::from_label(label));
    std::vector<int> seen(order, 0);
    for (auto s : subsets_of(g.datum().simple_roots())) {
      EXPECT_EQ(g.minimal_coset_reps(s).size() * g.parabolic_subgroup(s).size(), order) << label << " " << s.str();
      for (auto w : g.c_cell(s)) {
        ++seen[w];
        EXPECT_EQ(g.right_descents(w), s);
      }
    }
    for (int c : seen) EXPECT_EQ(c, 1) << label;
  }
}

TEST(WeylProperty, ElementsPermuteRoots) {
  for (const auto& [label, order] : kOrders) {
    const WeylGroup g(RootDatum::from_label(label));
    const std::set<LatticeVector> roots(g.roots().begin(), g.roots().end());
    EXPECT_EQ(roots.size(), 2 * g.positive_root_count());
    for (std::size_t w = 0; w < order; ++w) {
      std::set<LatticeVector> image;
      for (const auto& r : roots) image.insert(g.act(w, r));
      EXPECT_EQ(image, roots);
      EXPECT_EQ(g.inversion_count(w), g.element(w).length);
    }
  }
}

TEST(WeylProperty, MultiplicationIsConsistent) {
  const WeylGroup g(RootDatum::from_label("B2"));
  for (std::size_t a = 0; a < g.order(); ++a) {
    EXPECT_EQ(g.multiply(a, g.inverse(a)), WeylGroup::identity());
    for (std::size_t b = 0; b < g.order(); ++b)
      EXPECT_EQ(g.element(g.multiply(a, b)).matrix, g.element(a).matrix * g.element(b).matrix);
  }
}

TEST(RootSubset, Parse) {
  EXPECT_EQ(RootSubset::parse("", 2), RootSubset{});
  EXPECT_EQ(RootSubset::parse("1, 2", 2), RootSubset::all(2));
  EXPECT_EQ(RootSubset::parse("2", 3).str(), "2");
  EXPECT_THROW(RootSubset::parse("3", 2), InputError);
  EXPECT_THROW(RootSubset::parse("x", 2), InputError);
}

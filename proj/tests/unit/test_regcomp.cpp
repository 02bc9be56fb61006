#include <gtest/gtest.h>

#include "eqk/errors.hpp"
#include "eqk/regcomp.hpp"

using namespace eqk;

namespace {

LaurentPoly e(std::initializer_list<Coord> v) { return LaurentPoly::monomial(LatticeVector(v)); }

Fan a2_subdivision() { return Fan(2, {{2, 1}, {1, 1}, {1, 2}}, {{0, 1}, {1, 2}}); }

bool all_ones(const PiecewiseElement& p) {
  for (const auto& v : p.values)
    if (v != LaurentPoly::one(v.rank())) return false;
  return true;
}

}  // namespace

TEST(RegComp, EulerClasses) {
  const auto a1 = RootDatum::from_label("A1");
  EXPECT_EQ(mu(a1, RootSubset{}), LaurentPoly::one(1));
  EXPECT_EQ(mu(a1, RootSubset::all(1)), LaurentPoly::one(1) - e({-2}));
  const auto a2 = RootDatum::from_label("A2");
  EXPECT_EQ(mu(a2, RootSubset::all(2)), one_minus_exp_neg(a2.simple_root(0)) * one_minus_exp_neg(a2.simple_root(1)));
  EXPECT_EQ(lambda_I(a1, RootSubset::all(1)), LaurentPoly::one(2) - e({-2, 0}));
}

TEST(RegComp, A1Model) {
  const RegCompModel m(RootDatum::from_label("A1"));
  ASSERT_EQ(m.basis().size(), 2u);
  const KModuleElement fs = m.basis_element(1);
  for (auto v : m.basis()) {
    EXPECT_EQ(multiply(m, m.one(), m.basis_element(v)), m.basis_element(v));
    EXPECT_EQ(multiply(m, m.basis_element(v), m.one()), m.basis_element(v));
  }
  const LaurentPoly lambda = m.lambda(RootSubset::all(1));
  KModuleElement expected = m.zero();
  expected.coefficients.at(1) = m.k_constant(lambda * embed_second(e({1}) + e({-1})));
  expected.coefficients.at(0) = m.k_constant(-(lambda * lambda));
  EXPECT_EQ(multiply(m, fs, fs), expected);
}

TEST(RegComp, EmbeddingOracles) {
  const RegCompModel m(RootDatum::from_label("A1"));
  EXPECT_TRUE(all_ones(embed_to_Z(m, m.one())));
  const KModuleElement fs = m.basis_element(1);
  const auto img = embed_to_Z(m, fs);
  EXPECT_EQ(pointwise_mul(img, img), embed_to_Z(m, multiply(m, fs, fs)));
  EXPECT_TRUE(member_of_Z(img, m.group(), m.positive_fan()));
  EXPECT_EQ(basis_image_rank(m), 2u);
  EXPECT_EQ(homomorphism_failures(m, oracle_pairs(m, 0, 50)), 0u);
}

TEST(RegComp, OnlyTheCanonicalConventionSurvives) {
  const RegCompModel m(RootDatum::from_label("A1xA1"));
  const auto pairs = oracle_pairs(m, 0, 20);
  std::size_t survivors = 0;
  for (int bits = 0; bits < 8; ++bits) {
    const EmbedConvention conv{(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0};
    bool z = true;
    for (const auto& [a, b] : pairs) z = z && member_of_Z(embed_to_Z(m, a, conv), m.group(), m.positive_fan());
    const bool ok = homomorphism_failures(m, pairs, conv) == 0 && z && basis_image_rank(m, 0, conv) == m.basis().size();
    if (ok) {
      ++survivors;
      EXPECT_EQ(conv, EmbedConvention{}) << conv.str();
    }
  }
  EXPECT_EQ(survivors, 1u);
}

TEST(RegComp, MutationsAreDetected) {
  const RootDatum d = RootDatum::from_label("A1");
  const RegCompModel clean(d);
  const auto pairs = oracle_pairs(clean, 0, 50);
  for (const auto& [key, coeffs] : clean.structure_table())
    for (const auto& [w, c] : coeffs) {
      RegCompModel bad = clean;
      bad.corrupt_structure_constant(key.first, key.second, w, 1);
      EXPECT_GT(homomorphism_failures(bad, pairs), 0u);
    }
  for (auto s : subsets_of(d.simple_roots())) {
    RegCompModel bad = clean;
    bad.corrupt_lambda(s, 1);
    EXPECT_GT(homomorphism_failures(bad, pairs), 0u) << s.str();
  }
}

TEST(RegComp, SerialOracleMatches) {
  const RegCompModel m(RootDatum::from_label("A1xA1"));
  const auto pairs = oracle_pairs(m, 3, 10);
  EXPECT_EQ(homomorphism_failures(m, pairs), homomorphism_failures_serial(m, pairs));
  RegCompModel bad = m;
  bad.corrupt_lambda(RootSubset::all(2), 1);
  EXPECT_EQ(homomorphism_failures(bad, pairs), homomorphism_failures_serial(bad, pairs));
}

TEST(RegComp, VerifyA1AndA1xA1) {
  for (const char* label : {"A1", "A1xA1"}) {
    const RegCompModel m(RootDatum::from_label(label));
    const auto r = verify_model(m);
    for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << label << " " << c.name << ": " << c.detail;
  }
}

TEST(RegComp, VerifyA2WithSubdivision) {
  const RegCompModel m(RootDatum::from_label("A2"), a2_subdivision());
  EXPECT_EQ(m.cone_count(), 2u);
  VerifyOptions o;
  o.sample_pairs = 10;
  o.sample_triples = 4;
  const auto r = verify_model(m, o);
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(RegComp, RejectsForeignElements) {
  const RegCompModel a1(RootDatum::from_label("A1"));
  const RegCompModel a1a1(RootDatum::from_label("A1xA1"));
  EXPECT_THROW(multiply(a1, a1.one(), a1a1.one()), InputError);
}

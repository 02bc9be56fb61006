#include <gtest/gtest.h>

#include "eqk/errors.hpp"
#include "eqk/int_lattice.hpp"
#include "eqk/rational_linalg.hpp"

using namespace eqk;

TEST(IntLattice, DeterminantAndInverse) {
  const IntMatrix m = IntMatrix::from_columns({{2, 1}, {1, 1}}, 2);
  EXPECT_EQ(determinant(m), 1);
  const auto inv = unimodular_inverse(m);
  ASSERT_TRUE(inv);
  EXPECT_EQ(m * *inv, IntMatrix::identity(2));
  EXPECT_FALSE(unimodular_inverse(IntMatrix::from_columns({{1, 0}, {1, 2}}, 2)));
  EXPECT_EQ(determinant(IntMatrix(0, 0)), 1);
}

TEST(IntLattice, ElementaryDivisors) {
  EXPECT_EQ(elementary_divisors(IntMatrix::from_columns({{2, 1}, {1, 2}}, 2)), (std::vector<Coord>{1, 3}));
  EXPECT_EQ(elementary_divisors(IntMatrix::from_columns({{2, 0}, {0, 4}}, 2)), (std::vector<Coord>{2, 4}));
  EXPECT_EQ(elementary_divisors(IntMatrix::from_columns({{1, 0, 0}, {0, 1, 0}}, 3)), (std::vector<Coord>{1, 1}));
}

TEST(IntLattice, PrimitiveSplit) {
  for (const LatticeVector chi : {LatticeVector{4, 6}, LatticeVector{0, -3}, LatticeVector{2, -1, 5}}) {
    const auto ps = primitive_split(chi);
    EXPECT_EQ(ps.multiplicity, gcd_of(chi));
    LatticeVector target(chi.rank());
    target[0] = ps.multiplicity;
    EXPECT_EQ(ps.transform * chi, target);
    EXPECT_EQ(ps.transform * ps.inverse, IntMatrix::identity(chi.rank()));
  }
}

TEST(IntLattice, PrimitiveNormal) {
  const LatticeVector n = primitive_normal({{2, 4}}, 2);
  EXPECT_EQ(dot(n, LatticeVector{2, 4}), 0);
  EXPECT_EQ(gcd_of(n), 1);
  // rank 1: the complement of nothing is the whole line
  const LatticeVector n1 = primitive_normal({}, 1);
  EXPECT_EQ(n1[0] * n1[0], 1);
  EXPECT_THROW(primitive_normal({{1, 0, 0}}, 3), InputError);
}

TEST(RationalLinalg, RankAndSolve) {
  const std::vector<SparseRow> rows = {{{0, 1}, {1, 1}}, {{0, 1}, {1, -1}}, {{0, 2}}};
  EXPECT_EQ(rank(rows, 2), 2u);
  const auto x = solve_exact(rows, {Rational(3), Rational(1), Rational(4)}, 2);
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], 2);
  EXPECT_EQ((*x)[1], 1);
  EXPECT_FALSE(solve_exact(rows, {Rational(3), Rational(1), Rational(5)}, 2));
  const auto d = solve_dense({{Rational(2), Rational(1)}, {Rational(1), Rational(3)}}, {Rational(1), Rational(2)});
  ASSERT_TRUE(d);
  EXPECT_EQ((*d)[0], Rational(1, 5));
  EXPECT_EQ((*d)[1], Rational(3, 5));
}

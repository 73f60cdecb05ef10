#include "scc/ell.hpp"
#include "scc/error.hpp"
#include "scc/expansion.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace scc;

namespace {

TruncTensor mono(int genus, int bound, Sequence seq, Rational c = 1) {
  return TruncTensor::monomial(genus, bound, std::move(seq), c);
}

}  // namespace

TEST(Theta0, Generator) {
  const int g = 1;
  TruncTensor expected = TruncTensor::one(g, 2) + mono(g, 2, {0}) + mono(g, 2, {0, 1}, Rational(1, 2)) -
                         mono(g, 2, {1, 0}, Rational(1, 2)) + mono(g, 2, {0, 0}, Rational(1, 2));
  EXPECT_EQ(theta0(parse_word("x1", g), 2), expected);
  EXPECT_EQ(theta0(Word(g), 2), TruncTensor::one(g, 2));
}

TEST(Theta0, DegreeThreeIsUnknown) {
  TruncTensor t = theta0(parse_word("x1 y1", 1), 3);
  EXPECT_EQ(t.degree_bound(), 3);
  EXPECT_EQ(t.known_through(), 2);
  EXPECT_TRUE(t.degree_part(3).is_zero());
  EXPECT_EQ(theta0(parse_word("x1 y1", 1), 2).known_through(), 2);
  EXPECT_THROW(theta0(Word(1), 1), DomainError);
}

TEST(Theta0, MultiplicativeModDegreeThree) {
  test::Gen gen(61);
  for (int i = 0; i < 500; ++i) {
    const int g = gen.uniform(1, 3);
    Word u = gen.word(g, 15), v = gen.word(g, 15);
    ASSERT_EQ(theta0(multiply(u, v), 2), trunc_mul(theta0(u, 2), theta0(v, 2)));
  }
}

TEST(LTheta, LowDegrees) {
  test::Gen gen(62);
  for (int i = 0; i < 500; ++i) {
    const int g = gen.uniform(1, 3);
    Word a = gen.word(g, 15);
    HVec abs_a = abelianize(a);
    TruncTensor L = L_theta(a, 3);
    EXPECT_EQ(L.known_through(), 3);
    TruncTensor lin = TruncTensor::from_hvec(abs_a, 3);
    ASSERT_TRUE(L.degree_part(0).is_zero());
    ASSERT_TRUE(L.degree_part(1).is_zero());
    ASSERT_EQ(L.degree_part(2), trunc_mul(lin, lin));
    // Degree three: the cyclic form against the exterior product.
    ASSERT_EQ(L.degree_part(3), embed3(wedge3(abs_a, ell(a)), 3));
    // Explicit 1/2 N(|a| l(a) + l(a) |a|).
    TruncTensor e = embed2(ell(a), 3);
    ASSERT_EQ(L.degree_part(3), Rational(1, 2) * cyclic_N(trunc_mul(lin, e) + trunc_mul(e, lin)));
  }
}

TEST(LTheta, InversionAndConjugationInvariance) {
  test::Gen gen(63);
  for (int i = 0; i < 300; ++i) {
    const int g = gen.uniform(1, 3);
    Word a = gen.word(g, 12), c = gen.word(g, 12);
    TruncTensor L = L_theta(a, 3);
    ASSERT_EQ(L_theta(invert(a), 3), L);
    ASSERT_EQ(L_theta(conjugate(c, a), 3), L);
  }
}

TEST(LTheta, Bounds) {
  Word a = parse_word("x1", 1);
  EXPECT_THROW(L_theta(a, 4), DomainError);
  EXPECT_EQ(L_theta(a, 2), mono(1, 2, {0, 0}));
  EXPECT_TRUE(L_theta(a, 1).is_zero());
}

TEST(JohnsonTwist, ClassicalDegreeOne) {
  Word x1 = parse_word("x1", 1);
  EXPECT_EQ(johnson_twist(x1, theta0(parse_word("y1", 1), 2)).degree_part(1), mono(1, 2, {1}) + mono(1, 2, {0}));
  EXPECT_EQ(johnson_twist(x1, TruncTensor::one(1, 3)), TruncTensor::one(1, 3));

  test::Gen gen(64);
  for (int i = 0; i < 200; ++i) {
    const int g = gen.uniform(1, 3);
    Word a = gen.word(g, 12);
    HVec abs_a = abelianize(a);
    for (int q = 0; q < basis_size(g); ++q) {
      HVec x = HVec::basis(g, q);
      TruncTensor image = johnson_twist(a, TruncTensor::from_hvec(x, 2));
      ASSERT_EQ(image.linear_part(), x + intersection(abs_a, x) * abs_a);
    }
  }
}

TEST(JohnsonTwist, IsAnAlgebraMapThroughDegreeTwo) {
  test::Gen gen(65);
  for (int i = 0; i < 200; ++i) {
    const int g = gen.uniform(1, 2);
    Word a = gen.word(g, 10);
    TruncTensor u = gen.tensor(g, 2, 0), v = gen.tensor(g, 2, 0);
    ASSERT_EQ(johnson_twist(a, trunc_mul(u, v)), trunc_mul(johnson_twist(a, u), johnson_twist(a, v)));
  }
}

TEST(JohnsonTwist, MarkerAndBounds) {
  Word a = parse_word("x1 y2", 2);
  TruncTensor out = johnson_twist(a, theta0(parse_word("y1", 2), 3));
  EXPECT_LE(out.known_through(), 2);
  EXPECT_THROW(johnson_twist(a, TruncTensor::one(2, 4)), DomainError);
  EXPECT_THROW(johnson_twist(a, TruncTensor::one(1, 2)), DomainError);
}

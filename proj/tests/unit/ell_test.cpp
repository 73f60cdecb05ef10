#include "scc/ell.hpp"
#include "scc/error.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace scc;

namespace {

HVec vec(int genus, std::initializer_list<int> coords) {
  std::vector<Rational> c;
  for (int x : coords) c.emplace_back(x);
  return HVec(genus, c);
}

Wedge2 half_wedge(int genus, std::initializer_list<std::pair<int, int>> pairs, int sign = 1) {
  Wedge2 w(genus);
  for (auto [i, j] : pairs) w.add(i, j, Rational(sign, 2));
  return w;
}

// Group-like element of a generator through degree 2, written out by hand:
// 1 + X + (l(s) + 1/2 XX) with l(x_j) = 1/2 X_j^Y_j and l(y_j) = -1/2 X_j^Y_j.
TruncTensor letter_expansion(int genus, const Letter& s) {
  const int xj = 2 * (s.index - 1), yj = xj + 1;
  const int self = s.kind == Kind::X ? xj : yj;
  const Rational half = s.kind == Kind::X ? Rational(1, 2) : Rational(-1, 2);
  TruncTensor t = TruncTensor::one(genus, 2);
  t.add({static_cast<std::uint8_t>(self)}, 1);
  t.add({static_cast<std::uint8_t>(xj), static_cast<std::uint8_t>(yj)}, half);
  t.add({static_cast<std::uint8_t>(yj), static_cast<std::uint8_t>(xj)}, -half);
  t.add({static_cast<std::uint8_t>(self), static_cast<std::uint8_t>(self)}, Rational(1, 2));
  if (s.sign > 0) return t;
  // (1 + u)^-1 = 1 - u + u^2 mod degree 3.
  TruncTensor u = t - TruncTensor::one(genus, 2);
  return TruncTensor::one(genus, 2) - u + trunc_mul(u, u);
}

// l via the multiplicative path: product of letter expansions, then the
// antisymmetric half of the degree-2 part.
Wedge2 magnus_ell(const Word& w) {
  const int g = w.genus();
  TruncTensor prod = TruncTensor::one(g, 2);
  for (const Letter& s : w.letters()) prod = trunc_mul(prod, letter_expansion(g, s));
  Wedge2 out(g);
  HVec a = abelianize(w);
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      const Rational tij = prod.coeff({static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)});
      const Rational tji = prod.coeff({static_cast<std::uint8_t>(j), static_cast<std::uint8_t>(i)});
      // The symmetric half must be 1/2 |w||w|.
      if (tij + tji != a[i] * a[j]) throw std::logic_error("symmetric part");
      if (i < j) out.add(i, j, (tij - tji) / 2);
    }
  }
  return out;
}

bool half_integral(const Wedge2& w) {
  for (const auto& [key, c] : w.terms()) {
    if (!is_integer(Rational(2) * c)) return false;
  }
  return true;
}

}  // namespace

TEST(Ell, Generators) {
  EXPECT_TRUE(ell(Word(2)).is_zero());
  EXPECT_EQ(ell(parse_word("x1", 2)), half_wedge(2, {{0, 1}}));
  EXPECT_EQ(ell(parse_word("y1", 2)), half_wedge(2, {{0, 1}}, -1));
  EXPECT_EQ(ell(parse_word("x2^-1", 2)), half_wedge(2, {{2, 3}}, -1));
  EXPECT_EQ(ell(parse_word("y2^-1", 2)), half_wedge(2, {{2, 3}}));
}

TEST(Ell, WorkedExample) {
  EXPECT_EQ(ell(parse_word("x1 x2 y2 x2^-1", 2)), half_wedge(2, {{0, 1}, {2, 3}, {0, 3}}));
  // -1/2 (X2^Y2 + X1^Y1 + Y2^X1)
  Wedge2 lb(2);
  lb.add(2, 3, Rational(-1, 2));
  lb.add(0, 1, Rational(-1, 2));
  lb.add(3, 0, Rational(-1, 2));
  EXPECT_EQ(ell(parse_word("y2 x1^-1", 2)), lb);
}

TEST(Ell, BoundaryIsOmega) {
  for (int g = 1; g <= 5; ++g) EXPECT_EQ(ell(boundary_word(g)), omega(g)) << g;
}

TEST(Ell, MatchesMagnusProduct) {
  test::Gen gen(41);
  for (int i = 0; i < 500; ++i) {
    const int g = gen.uniform(1, 3);
    Word w = gen.word(g, 20);
    ASSERT_EQ(ell(w), magnus_ell(w)) << format_word(w);
  }
}

TEST(Ell, CocycleAndIdentities) {
  test::Gen gen(42);
  for (int i = 0; i < 1000; ++i) {
    const int g = gen.uniform(1, 3);
    Word u = gen.word(g, 20), v = gen.word(g, 20);
    HVec au = abelianize(u), av = abelianize(v);
    ASSERT_EQ(ell(multiply(u, v)), ell(u) + ell(v) + Rational(1, 2) * wedge(au, av));
    ASSERT_EQ(ell(invert(u)), -ell(u));
    ASSERT_EQ(ell(conjugate(u, v)), ell(v) + wedge(au, av));
    ASSERT_EQ(ell(commutator(u, v)), wedge(au, av));
  }
}

TEST(Ell, InsertionInvariance) {
  test::Gen gen(43);
  for (int i = 0; i < 100; ++i) {
    const int g = gen.uniform(1, 3);
    Word w = gen.word(g, 20);
    std::vector<Letter> raw = w.letters();
    for (int k = 0; k < 20; ++k) {
      Letter s = gen.letter(g);
      auto pos = raw.begin() + gen.uniform(0, static_cast<int>(raw.size()));
      pos = raw.insert(pos, s.inverse());
      raw.insert(pos, s);
      ASSERT_EQ(ell(g, raw), ell(w));
    }
    ASSERT_EQ(Word(g, raw), w);
  }
}

TEST(Ell, HalfIntegral) {
  test::Gen gen(44);
  for (int i = 0; i < 500; ++i) {
    Word w = gen.word(gen.uniform(1, 4), 25);
    ASSERT_TRUE(half_integral(ell(w))) << format_word(w);
  }
}

TEST(Ell, SimpleCurveEigenvector) {
  test::Gen gen(45);
  for (int i = 0; i < 500; ++i) {
    const int g = gen.uniform(1, 3);
    Word c = gen.simple_curve(g);
    HVec ac = abelianize(c);
    HVec image = act2(ell(c), ac);
    // image must be a multiple of |c|; |c| is a signed basis vector.
    int k = 0;
    while (ac[k] == 0) ++k;
    Rational s = image[k] / ac[k];
    ASSERT_EQ(image, s * ac) << format_word(c);
  }
}

TEST(ObstructionVector, Examples) {
  EXPECT_EQ(obstruction_vector(parse_word("x1 x2 y2 x2^-1", 2), parse_word("y2 x1^-1", 2)), HVec::basis(2, 0));
  EXPECT_TRUE(obstruction_vector(parse_word("x1", 2), parse_word("x2^-1", 2)).is_zero());
  EXPECT_EQ(obstruction_vector(parse_word("x1", 2), parse_word("x2^-1 [y1,zeta] zeta", 2)), -HVec::basis(2, 0));
  EXPECT_THROW(obstruction_vector(parse_word("x1", 1), parse_word("x1", 2)), DomainError);
}

TEST(ObstructionVector, Definition) {
  test::Gen gen(46);
  for (int i = 0; i < 300; ++i) {
    const int g = gen.uniform(1, 3);
    Word a = gen.word(g, 12), b = gen.word(g, 12);
    ASSERT_EQ(obstruction_vector(a, b), act2(ell(a), abelianize(b)) + act2(ell(b), abelianize(a)));
    ASSERT_EQ(obstruction_vector(a, b), obstruction_vector(b, a));
  }
  EXPECT_EQ(abelianize(parse_word("x1 x2 y2 x2^-1", 2)), vec(2, {1, 0, 0, 1}));
}

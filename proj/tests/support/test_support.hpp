#pragma once

#include "scc/homology.hpp"
#include "scc/tensor.hpp"
#include "scc/wedge.hpp"
#include "scc/word.hpp"

#include <ostream>
#include <random>

namespace scc {

// Readable gtest failure messages.
inline void PrintTo(const Word& w, std::ostream* os) { *os << format_word(w); }
inline void PrintTo(const HVec& v, std::ostream* os) { *os << format_hvec(v); }
inline void PrintTo(const Wedge2& w, std::ostream* os) { *os << format_wedge(w); }
inline void PrintTo(const Wedge3& t, std::ostream* os) { *os << format_wedge(t); }
inline void PrintTo(const TruncTensor& t, std::ostream* os) { *os << format_tensor(t); }

}  // namespace scc

namespace scc::test {

/// Seeded generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  std::uint64_t next() { return engine_(); }
  bool coin() { return uniform(0, 1) == 1; }

  Word word(int genus, int max_length) {
    return random_word(genus, static_cast<std::size_t>(uniform(0, max_length)), next());
  }

  Letter letter(int genus) {
    return {coin() ? Kind::X : Kind::Y, uniform(1, genus), coin() ? 1 : -1};
  }

  std::vector<Letter> letters(int genus, int max_length) {
    std::vector<Letter> out;
    for (int k = uniform(0, max_length); k > 0; --k) out.push_back(letter(genus));
    return out;
  }

  HVec hvec(int genus, int range = 3) {
    HVec v(genus);
    for (int i = 0; i < v.dim(); ++i) v[i] = uniform(-range, range);
    return v;
  }

  Rational small_rational() { return make_rational(uniform(-4, 4), uniform(1, 3)); }

  Wedge2 wedge2(int genus, int terms = 4) {
    Wedge2 w(genus);
    const int n = basis_size(genus);
    for (int k = 0; k < terms; ++k) w.add(uniform(0, n - 1), uniform(0, n - 1), small_rational());
    return w;
  }

  TruncTensor tensor(int genus, int bound, int min_degree, int terms = 5) {
    TruncTensor t(genus, bound);
    const int n = basis_size(genus);
    for (int k = 0; k < terms; ++k) {
      Sequence s(static_cast<std::size_t>(uniform(min_degree, bound)));
      for (auto& b : s) b = static_cast<std::uint8_t>(uniform(0, n - 1));
      t.add(s, small_rational());
    }
    return t;
  }

  /// g x^{+-1} g^-1 or g y^{+-1} g^-1: a based representative of a non-separating simple closed curve.
  Word simple_curve(int genus, int conj_length = 6) {
    Word gen = Word::generator(genus, coin() ? Kind::X : Kind::Y, uniform(1, genus), coin() ? 1 : -1);
    return conjugate(word(genus, conj_length), gen);
  }

  /// b = a^e d where d is a product of `count` commutators and b is again a
  /// simple-curve class. Uses d = [a^-e, c1 ... ck] expanded as
  /// [x, c1 c2] = [x, c1] . c1 [x, c2] c1^-1, so b = c a^e c^-1.
  struct DependentPair {
    Word a;
    Word b;
    std::vector<Word> commutators;
  };

  DependentPair dependent_pair(int genus, int max_count = 3) {
    Word a = simple_curve(genus);
    const int e = coin() ? 1 : -1;
    Word x = power(a, -e);
    Word d(genus);
    Word prefix(genus);
    std::vector<Word> factors;
    for (int k = uniform(1, max_count); k > 0; --k) {
      Word c = word(genus, 5);
      Word factor = conjugate(prefix, commutator(x, c));
      factors.push_back(factor);
      d = multiply(d, factor);
      prefix = multiply(prefix, c);
    }
    return {a, multiply(power(a, e), d), factors};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace scc::test

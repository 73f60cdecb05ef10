#include "selftest.hpp"

#include "scc/ell.hpp"
#include "scc/expansion.hpp"
#include "scc/homology.hpp"
#include "scc/obstruction.hpp"
#include "scc/tensor.hpp"
#include "scc/wedge.hpp"
#include "scc/word.hpp"

#include <functional>
#include <random>

namespace scc::cli {

namespace {

constexpr std::size_t kMaxRecordedFailures = 5;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  std::uint64_t next() { return engine_(); }

  Word word(int genus, int max_length) {
    return random_word(genus, static_cast<std::size_t>(uniform(0, max_length)), next());
  }

  HVec hvec(int genus, int range = 3) {
    HVec v(genus);
    for (int i = 0; i < v.dim(); ++i) v[i] = uniform(-range, range);
    return v;
  }

  Wedge2 wedge2(int genus) {
    Wedge2 w(genus);
    const int n = basis_size(genus);
    for (int k = uniform(0, 4); k > 0; --k) w.add(uniform(0, n - 1), uniform(0, n - 1), make_rational(uniform(-4, 4), 2));
    return w;
  }

  TruncTensor tensor(int genus, int bound, int min_degree) {
    TruncTensor t(genus, bound);
    const int n = basis_size(genus);
    for (int k = uniform(0, 5); k > 0; --k) {
      Sequence s(static_cast<std::size_t>(uniform(min_degree, bound)));
      for (auto& b : s) b = static_cast<std::uint8_t>(uniform(0, n - 1));
      t.add(s, make_rational(uniform(-3, 3), uniform(1, 3)));
    }
    return t;
  }

  Word simple_curve(int genus) {
    Word gen = Word::generator(genus, uniform(0, 1) == 0 ? Kind::X : Kind::Y, uniform(1, genus),
                               uniform(0, 1) == 0 ? 1 : -1);
    return conjugate(word(genus, 6), gen);
  }

 private:
  std::mt19937_64 engine_;
};

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    if (ok) {
      ++result_.passed;
      return;
    }
    ++result_.failed;
    if (result_.failures.size() < kMaxRecordedFailures) result_.failures.push_back(describe());
  }

  // Runs `body`, converting exceptions into failures.
  void run(const std::string& label, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(false, [&] { return label + ": threw " + e.what(); });
    }
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::vector<Letter> naive_reduce(std::vector<Letter> letters) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i].cancels(letters[i + 1])) {
        letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i),
                      letters.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return letters;
}

SuiteResult word_suite(Rng& rng, int iterations) {
  Suite s("word");
  for (int it = 0; it < iterations; ++it) {
    const int g = rng.uniform(1, 3);
    s.run("word", [&] {
      Word u = rng.word(g, 12), v = rng.word(g, 12), w = rng.word(g, 12);
      s.check(parse_word(format_word(u), g) == u, [&] { return "format/parse: " + format_word(u); });
      s.check(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)),
              [&] { return "associativity: " + format_word(u); });
      s.check(multiply(u, invert(u)).empty() && multiply(invert(u), u).empty(),
              [&] { return "inverse: " + format_word(u); });
      s.check(multiply(u, Word(g)) == u && multiply(Word(g), u) == u,
              [&] { return "identity: " + format_word(u); });
      s.check(abelianize(commutator(u, v)).is_zero(), [&] { return "commutator: " + format_word(u); });

      std::vector<Letter> raw;
      for (int k = rng.uniform(0, 16); k > 0; --k) {
        raw.push_back({rng.uniform(0, 1) == 0 ? Kind::X : Kind::Y, rng.uniform(1, g),
                       rng.uniform(0, 1) == 0 ? 1 : -1});
      }
      s.check(free_reduce(raw) == naive_reduce(raw), [] { return "reduction confluence"; });
    });
  }
  return s.take();
}

SuiteResult homology_suite(Rng& rng, int iterations) {
  Suite s("homology");
  for (int it = 0; it < iterations; ++it) {
    const int g = rng.uniform(1, 3);
    s.run("homology", [&] {
      Word u = rng.word(g, 12), v = rng.word(g, 12);
      s.check(abelianize(multiply(u, v)) == abelianize(u) + abelianize(v),
              [&] { return "abelianize homomorphism: " + format_word(u); });
      s.check(abelianize(invert(u)) == -abelianize(u), [&] { return "abelianize inverse"; });
      HVec a = rng.hvec(g), b = rng.hvec(g);
      s.check(intersection(a, b) == -intersection(b, a) && intersection(a, a) == 0,
              [&] { return "antisymmetry: " + format_hvec(a); });

      // Constructed members and brute-force non-members.
      HVec u1 = rng.hvec(g, 2), u2 = rng.hvec(g, 2);
      if (rng.uniform(0, 3) == 0) u2 = Rational(rng.uniform(-2, 2)) * u1;
      int m = rng.uniform(-5, 5), n = rng.uniform(-5, 5);
      HVec target = Rational(m) * u1 + Rational(n) * u2;
      if (rng.uniform(0, 1) == 0) target[rng.uniform(0, target.dim() - 1)] += make_rational(1, rng.uniform(1, 2));
      LatticeWitness lw = lattice_member(target, u1, u2);
      bool brute = false;
      for (int i = -12; i <= 12 && !brute; ++i) {
        for (int j = -12; j <= 12 && !brute; ++j) brute = Rational(i) * u1 + Rational(j) * u2 == target;
      }
      s.check(lw.member == brute, [&] { return "lattice vs scan: v=" + format_hvec(target); });
      if (lw.member) {
        HVec rebuilt = Rational(lw.coefficients->first) * u1 + Rational(lw.coefficients->second) * u2;
        s.check(rebuilt == target, [&] { return "lattice witness: v=" + format_hvec(target); });
      }
      s.check(lattice_member(target, u2, u1).member == lw.member, [] { return "lattice symmetry"; });
    });
  }
  return s.take();
}

SuiteResult wedge_suite(Rng& rng, int iterations) {
  Suite s("wedge");
  for (int it = 0; it < iterations; ++it) {
    const int g = rng.uniform(1, 3);
    s.run("wedge", [&] {
      HVec u = rng.hvec(g), v = rng.hvec(g), z = rng.hvec(g);
      HVec expected = intersection(z, u) * v - intersection(z, v) * u;
      s.check(act2(wedge(u, v), z) == expected, [&] { return "act2 formula"; });
      s.check(act2(omega(g), z) == -z, [&] { return "omega acts as -1"; });

      Wedge2 w = rng.wedge2(g);
      Wedge2 a3 = act3(wedge3(u, w), z);
      Wedge2 b3 = intersection(z, u) * w - wedge(u, act2(w, z));
      s.check(a3 == b3, [&] { return "act3 formula"; });

      TruncTensor zt = TruncTensor::from_hvec(z, 3);
      s.check(derive(embed2(w, 3), zt).linear_part() == act2(w, z), [] { return "embed2 compatibility"; });
      Wedge3 t = wedge3(u, w);
      s.check(derive(embed3(t, 3), zt) == embed2(act3(t, z), 3), [] { return "embed3 compatibility"; });
    });
  }
  return s.take();
}

SuiteResult ell_suite(Rng& rng, int iterations) {
  Suite s("ell");
  const Rational half(1, 2);
  for (int g = 1; g <= 5; ++g) {
    s.check(ell(boundary_word(g)) == omega(g), [g] { return "l(zeta) = omega, g=" + std::to_string(g); });
  }
  for (int it = 0; it < iterations; ++it) {
    const int g = rng.uniform(1, 3);
    s.run("ell", [&] {
      Word a = rng.word(g, 20), b = rng.word(g, 20);
      HVec A = abelianize(a), B = abelianize(b);
      s.check(ell(multiply(a, b)) == ell(a) + ell(b) + half * wedge(A, B),
              [&] { return "cocycle: " + format_word(a) + " , " + format_word(b); });
      s.check(ell(invert(a)) == -ell(a), [&] { return "inverse: " + format_word(a); });
      s.check(ell(conjugate(a, b)) == ell(b) + wedge(A, B), [&] { return "conjugation: " + format_word(a); });
      s.check(ell(commutator(a, b)) == wedge(A, B), [&] { return "commutator: " + format_word(a); });

      std::vector<Letter> raw = a.letters();
      Letter l{rng.uniform(0, 1) == 0 ? Kind::X : Kind::Y, rng.uniform(1, g), 1};
      auto pos = raw.begin() + rng.uniform(0, static_cast<int>(raw.size()));
      raw.insert(pos, {l, l.inverse()});
      s.check(ell(g, raw) == ell(a), [&] { return "trivial insertion: " + format_word(a); });

      bool half_integral = true;
      const Wedge2 la = ell(a);
      for (const auto& [key, c] : la.terms()) half_integral = half_integral && is_integer(2 * c);
      s.check(half_integral, [&] { return "half-integrality: " + format_word(a); });

      Word c = rng.simple_curve(g);
      HVec C = abelianize(c);
      HVec image = act2(ell(c), C);
      s.check(wedge(C, image).is_zero(), [&] { return "l(c)|c| in Q|c|: " + format_word(c); });
    });
  }
  return s.take();
}

SuiteResult tensor_suite(Rng& rng, int iterations) {
  Suite s("tensor");
  for (int it = 0; it < iterations; ++it) {
    const int g = rng.uniform(1, 2);
    s.run("tensor", [&] {
      TruncTensor u = rng.tensor(g, 3, 0), v = rng.tensor(g, 3, 0), w = rng.tensor(g, 3, 0);
      s.check(trunc_mul(trunc_mul(u, v), w) == trunc_mul(u, trunc_mul(v, w)), [] { return "associativity"; });

      TruncTensor h = rng.tensor(g, 3, 1);
      TruncTensor one = TruncTensor::one(g, 3);
      s.check(trunc_exp(trunc_log(one + h)) == one + h, [] { return "exp(log(1+h)) = 1+h"; });
      s.check(trunc_log(trunc_exp(h)) == h, [] { return "log(exp(h)) = h"; });

      // Degree >= 2 keeps D_d from pulling truncated terms back down.
      TruncTensor d = rng.tensor(g, 3, 2);
      s.check(derive(d, trunc_mul(u, v)) == trunc_mul(derive(d, u), v) + trunc_mul(u, derive(d, v)),
              [] { return "Leibniz"; });

      Word a = rng.word(g, 12), b = rng.word(g, 12);
      s.check(theta0(multiply(a, b), 2) == trunc_mul(theta0(a, 2), theta0(b, 2)),
              [&] { return "theta0 homomorphism: " + format_word(a); });

      TruncTensor L = L_theta(a, 3);
      s.check(L.degree_part(2) == trunc_mul(TruncTensor::from_hvec(abelianize(a), 3),
                                            TruncTensor::from_hvec(abelianize(a), 3)),
              [&] { return "L2 = |a||a|: " + format_word(a); });
      s.check(L.degree_part(3) == embed3(wedge3(abelianize(a), ell(a)), 3),
              [&] { return "L3 dual path: " + format_word(a); });
      s.check(L_theta(invert(a), 3) == L && L_theta(conjugate(b, a), 3) == L,
              [&] { return "L invariance: " + format_word(a); });

      HVec A = abelianize(a);
      const int n = basis_size(g);
      for (int q = 0; q < n; ++q) {
        HVec x = HVec::basis(g, q);
        HVec twisted = johnson_twist(a, TruncTensor::from_hvec(x, 2)).linear_part();
        s.check(twisted == x + intersection(A, x) * A, [&] { return "twist on H: " + format_word(a); });
      }
    });
  }
  return s.take();
}

SuiteResult obstruction_suite(Rng& rng, int iterations) {
  Suite s("obstruction");
  for (int it = 0; it < iterations; ++it) {
    const int g = rng.uniform(1, 3);
    s.run("obstruction", [&] {
      Word a = rng.word(g, 10), b = rng.word(g, 10);
      if (intersection(abelianize(a), abelianize(b)) == 0) {
        TwistComparison cmp = twist_consistency(g, a, b);
        s.check(cmp.consistent, [&] { return "twist identity: " + format_word(a) + " , " + format_word(b); });
      }
      Word c = rng.word(g, 8), d = rng.word(g, 8);
      s.check(analyze(g, conjugate(c, a), conjugate(d, b)).verdict == analyze(g, a, b).verdict,
              [&] { return "conjugation invariance: " + format_word(a) + " , " + format_word(b); });

      Word curve = rng.simple_curve(g);
      Word other = conjugate(rng.word(g, 8), rng.uniform(0, 1) == 0 ? curve : invert(curve));
      Report r = analyze(g, curve, other);
      s.check(r.verdict == Verdict::Inconclusive,
              [&] { return "dependent class: " + format_word(curve) + " , " + format_word(other); });
    });
  }
  return s.take();
}

}  // namespace

std::vector<SuiteResult> run_selftest(std::uint64_t seed, int iterations) {
  Rng rng(seed);
  std::vector<SuiteResult> out;
  out.push_back(word_suite(rng, iterations));
  out.push_back(homology_suite(rng, iterations));
  out.push_back(wedge_suite(rng, iterations));
  out.push_back(ell_suite(rng, iterations));
  out.push_back(tensor_suite(rng, iterations));
  out.push_back(obstruction_suite(rng, iterations));
  return out;
}

}  // namespace scc::cli

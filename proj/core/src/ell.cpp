#include "scc/ell.hpp"

#include "scc/error.hpp"

namespace scc {

Wedge2 ell(int genus, std::span<const Letter> letters) {
  const Rational half(1, 2);
  Wedge2 acc(genus);
  HVec prefix(genus);
  for (const Letter& s : letters) {
    if (s.index < 1 || s.index > genus) throw DomainError("letter outside the generators of genus");
    const int x = 2 * (s.index - 1);
    // l(x^{+-1}) = +-1/2 X^Y and l(y^{+-1}) = -+1/2 X^Y.
    const int sign = s.kind == Kind::X ? s.sign : -s.sign;
    acc.add(x, x + 1, sign * half);
    // 1/2 |prefix| ^ |s|
    for (int i = 0; i < prefix.dim(); ++i) {
      if (prefix[i] != 0) acc.add(i, s.basis(), half * s.sign * prefix[i]);
    }
    prefix[s.basis()] += s.sign;
  }
  return acc;
}

Wedge2 ell(const Word& w) { return ell(w.genus(), w.letters()); }

HVec obstruction_vector(const Word& a, const Word& b) {
  if (a.genus() != b.genus()) throw DomainError("genus mismatch");
  return act2(ell(a), abelianize(b)) + act2(ell(b), abelianize(a));
}

}  // namespace scc

#pragma once

#include "scc/homology.hpp"
#include "scc/wedge.hpp"
#include "scc/word.hpp"

#include <span>

namespace scc {

/// The degree-2 logarithm l: pi -> H ^ H of the symplectic expansion theta0,
/// fixed by l(x_j) = 1/2 X_j ^ Y_j, l(y_j) = -1/2 X_j ^ Y_j and the cocycle
/// rule l(gh) = l(g) + l(h) + 1/2 |g| ^ |h|.
Wedge2 ell(const Word& w);

/// Same fold over a possibly unreduced letter sequence. Agrees with
/// ell(Word(genus, letters)) because the cocycle rule kills s s^-1 pairs.
Wedge2 ell(int genus, std::span<const Letter> letters);

/// l(a)(|b|) + l(b)(|a|).
HVec obstruction_vector(const Word& a, const Word& b);

}  // namespace scc

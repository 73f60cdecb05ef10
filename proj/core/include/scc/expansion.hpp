#pragma once

#include "scc/tensor.hpp"
#include "scc/word.hpp"

namespace scc {

/// Highest degree of L^theta(a) computable from the available expansion data.
inline constexpr int kMaxLDegree = 3;

/// theta0(w) = 1 + |w| + (l(w) + 1/2 |w||w|) through degree 2.
///
/// Degree-3 coefficients of theta0 are not determined here; with a degree
/// bound of 3 the result is marked known only through degree 2.
/// Throws DomainError if degree_bound < 2.
TruncTensor theta0(const Word& w, int degree_bound);

/// L^theta(a) = 1/2 N(l^theta(a) l^theta(a)), computed from log(theta0(a)).
/// Its degree-2 part is |a||a| and its degree-3 part is embed3(|a| ^ l(a)).
/// Throws DomainError for degree_bound > 3.
TruncTensor L_theta(const Word& a, int degree_bound);

/// Applies the total Johnson map e^{-L(a)} of the Dehn twist along a:
/// sum_k (-1)^k / k! D_L^k(u), iterated until the term vanishes.
///
/// Output degree k needs L through degree k+1, so the result is exact
/// through degree 2 at most. Throws DomainError if u's bound exceeds 3.
TruncTensor johnson_twist(const Word& a, const TruncTensor& u);

}  // namespace scc

#pragma once

#include "scc/homology.hpp"
#include "scc/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace scc {

/// A tensor monomial: 0-based basis positions (X1 = 0, Y1 = 1, ...).
using Sequence = std::vector<std::uint8_t>;

/// Element of the tensor algebra on H truncated above `degree_bound`.
///
/// Besides the bound, each value carries `known_through` <= degree_bound:
/// coefficients of degree above it are not determined by the inputs (for
/// instance the degree-3 part of an expansion whose degree-3 data is not
/// fixed). They are stored as whatever the arithmetic produced, usually
/// zero, and must not be read as exact. Every operation propagates the
/// marker conservatively.
class TruncTensor {
 public:
  using Terms = std::map<Sequence, Rational>;

  TruncTensor(int genus, int degree_bound);

  static TruncTensor scalar(int genus, int degree_bound, const Rational& c);
  static TruncTensor one(int genus, int degree_bound) { return scalar(genus, degree_bound, 1); }
  static TruncTensor from_hvec(const HVec& v, int degree_bound);
  static TruncTensor monomial(int genus, int degree_bound, Sequence seq, const Rational& c = 1);

  int genus() const { return genus_; }
  int degree_bound() const { return degree_bound_; }
  int known_through() const { return known_through_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Sequence& seq) const;
  /// Adds c to the coefficient of seq; silently drops terms above the bound.
  void add(const Sequence& seq, const Rational& c);

  /// Lowers the validity marker to min(current, k).
  TruncTensor& mark_known_through(int k);

  /// Lowest degree that may carry a nonzero coefficient (known or not).
  int lowest_degree() const;

  /// Homogeneous component of degree k.
  TruncTensor degree_part(int k) const;
  /// Components of degree <= k, re-bounded at k (k may exceed the current bound).
  TruncTensor truncated(int k) const;

  /// The degree-1 component as a vector.
  HVec linear_part() const;

  TruncTensor& operator+=(const TruncTensor& o);
  TruncTensor& operator-=(const TruncTensor& o);
  TruncTensor& operator*=(const Rational& s);
  friend TruncTensor operator+(TruncTensor a, const TruncTensor& b) { return a += b; }
  friend TruncTensor operator-(TruncTensor a, const TruncTensor& b) { return a -= b; }
  friend TruncTensor operator*(const Rational& s, TruncTensor a) { return a *= s; }

  /// Coefficient equality (genus, bound and terms). The validity marker is not compared.
  friend bool operator==(const TruncTensor& a, const TruncTensor& b) {
    return a.genus_ == b.genus_ && a.degree_bound_ == b.degree_bound_ && a.terms_ == b.terms_;
  }

 private:
  int genus_;
  int degree_bound_;
  int known_through_;
  Terms terms_;
};

/// "1/2 X1Y1 - 1/2 Y1X1"; zero prints as "0".
std::string format_tensor(const TruncTensor& t);

TruncTensor trunc_mul(const TruncTensor& u, const TruncTensor& v);

/// log(u) = sum_{k>=1} (-1)^{k-1}/k (u-1)^k. Requires constant term 1.
TruncTensor trunc_log(const TruncTensor& u);
/// exp(u) = sum_{k>=0} u^k/k!. Requires constant term 0.
TruncTensor trunc_exp(const TruncTensor& u);

/// Cyclic permutation X1 X2 ... Xk -> X2 ... Xk X1, degreewise.
TruncTensor cyclic_nu(const TruncTensor& u);
/// N = sum_{j<k} nu^j on degree k, and N = 0 on scalars.
TruncTensor cyclic_N(const TruncTensor& u);

/// Applies the derivation D_h determined by h in T_1, where
///   (X1 X2 ... Xk)(Y) = (Y . X1) X2 ... Xk
/// and D_h(Y1 ... Yp) = sum_i Y1 ... h(Yi) ... Yp. Output is truncated at
/// u's degree bound. Throws DomainError if h has a constant term.
TruncTensor derive(const TruncTensor& h, const TruncTensor& u);

}  // namespace scc

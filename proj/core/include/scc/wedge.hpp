#pragma once

#include "scc/homology.hpp"
#include "scc/tensor.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>

namespace scc {

/// Element of H ^ H, stored on basis pairs (i < j). Insertion normalizes
/// orientation, so antisymmetry is structural.
class Wedge2 {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Rational>;

  explicit Wedge2(int genus);

  /// Adds c * (e_i ^ e_j) for arbitrary basis positions i, j.
  void add(int i, int j, const Rational& c);

  int genus() const { return genus_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int i, int j) const;

  Wedge2& operator+=(const Wedge2& o);
  Wedge2& operator-=(const Wedge2& o);
  Wedge2& operator*=(const Rational& s);
  friend Wedge2 operator+(Wedge2 a, const Wedge2& b) { return a += b; }
  friend Wedge2 operator-(Wedge2 a, const Wedge2& b) { return a -= b; }
  friend Wedge2 operator-(Wedge2 a) { return a *= Rational(-1); }
  friend Wedge2 operator*(const Rational& s, Wedge2 a) { return a *= s; }
  friend bool operator==(const Wedge2&, const Wedge2&) = default;

 private:
  int genus_;
  Terms terms_;
};

/// Element of the third exterior power, stored on basis triples (i < j < k).
class Wedge3 {
 public:
  using Key = std::array<int, 3>;
  using Terms = std::map<Key, Rational>;

  explicit Wedge3(int genus);

  /// Adds c * (e_i ^ e_j ^ e_k), sorting with the permutation sign.
  void add(int i, int j, int k, const Rational& c);

  int genus() const { return genus_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Wedge3& operator+=(const Wedge3& o);
  Wedge3& operator*=(const Rational& s);
  friend Wedge3 operator+(Wedge3 a, const Wedge3& b) { return a += b; }
  friend Wedge3 operator*(const Rational& s, Wedge3 a) { return a *= s; }
  friend bool operator==(const Wedge3&, const Wedge3&) = default;

 private:
  int genus_;
  Terms terms_;
};

Wedge2 wedge(const HVec& u, const HVec& v);

/// (X ^ Y)(Z) = (Z.X) Y - (Z.Y) X, extended bilinearly.
HVec act2(const Wedge2& w, const HVec& z);

/// u ^ w as an alternating 3-vector.
Wedge3 wedge3(const HVec& u, const Wedge2& w);

/// Action of the third exterior power on H with values in H ^ H:
/// (X ^ u)(Z) = (Z.X) u - X ^ u(Z).
Wedge2 act3(const Wedge3& t, const HVec& z);

/// omega = sum_j X_j ^ Y_j.
Wedge2 omega(int genus);

/// X ^ Y -> XY - YX.
TruncTensor embed2(const Wedge2& w, int degree_bound);
/// X ^ Y ^ Z -> XYZ + YZX + ZXY - XZY - ZYX - YXZ.
TruncTensor embed3(const Wedge3& t, int degree_bound);

/// "1/2 X1^Y1 + X2^Y2"; zero prints as "0".
std::string format_wedge(const Wedge2& w);
std::string format_wedge(const Wedge3& t);

/// "X1^Y2" style key used by report serialization.
std::string wedge_basis_name(const Wedge2::Key& key);

}  // namespace scc

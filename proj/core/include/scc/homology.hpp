#pragma once

#include "scc/rational.hpp"
#include "scc/word.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace scc {

/// Number of basis vectors X1, Y1, ..., Xg, Yg of H for genus g.
inline int basis_size(int genus) { return 2 * genus; }

/// "X3" / "Y1" for a 0-based basis position.
std::string basis_name(int basis);

/// Symplectic pairing of basis vectors: X_i.Y_j = delta_ij, Y_j.X_i = -delta_ij, all others 0.
int basis_pairing(int p, int q);

/// Exact rational vector in H = H_1(Sigma_{g,1}; Q) over X1, Y1, ..., Xg, Yg.
class HVec {
 public:
  explicit HVec(int genus);
  HVec(int genus, std::vector<Rational> coords);

  static HVec basis(int genus, int index);

  int genus() const { return genus_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  const Rational& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;

  HVec& operator+=(const HVec& o);
  HVec& operator-=(const HVec& o);
  HVec& operator*=(const Rational& s);
  friend HVec operator+(HVec a, const HVec& b) { return a += b; }
  friend HVec operator-(HVec a, const HVec& b) { return a -= b; }
  friend HVec operator-(HVec a) { return a *= Rational(-1); }
  friend HVec operator*(const Rational& s, HVec a) { return a *= s; }
  friend bool operator==(const HVec&, const HVec&) = default;

 private:
  int genus_;
  std::vector<Rational> coords_;
};

/// "X1 - 1/2 Y2"; the zero vector prints as "0".
std::string format_hvec(const HVec& v);

/// Signed letter count per generator.
HVec abelianize(const Word& w);

/// u.v = sum_i (u_Xi v_Yi - u_Yi v_Xi).
Rational intersection(const HVec& u, const HVec& v);

bool is_integral(const HVec& v);

/// Membership of v in the lattice Z u1 + Z u2 with an explicit witness.
struct LatticeWitness {
  bool member = false;
  std::optional<std::pair<Integer, Integer>> coefficients;  // (m, n) with v = m u1 + n u2
};

/// Decides v in Z u1 + Z u2. u1 and u2 must be integral (DomainError otherwise).
LatticeWitness lattice_member(const HVec& v, const HVec& u1, const HVec& u2);

}  // namespace scc

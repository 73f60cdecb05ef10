#include "scc/homology.hpp"

#include "scc/error.hpp"

namespace scc {

namespace {

void check_same_genus(const HVec& u, const HVec& v) {
  if (u.genus() != v.genus()) {
    throw DomainError("genus mismatch: " + std::to_string(u.genus()) + " vs " +
                      std::to_string(v.genus()));
  }
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Bezout coefficients: s a + t b = gcd(a, b) >= 0.
void gcdext(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

int first_nonzero(const HVec& v) {
  for (int i = 0; i < v.dim(); ++i) {
    if (v[i] != 0) return i;
  }
  return -1;
}

// Integer k with w = k * u0, where w is known to be parallel to u0.
Integer multiple_of(const HVec& w, const HVec& u0) {
  int i = first_nonzero(u0);
  Rational k = w[i] / u0[i];
  return k.get_num();
}

LatticeWitness rank_one(const HVec& v, const HVec& u1, const HVec& u2) {
  // u1 = p u0, u2 = q u0 with u0 primitive; Z u1 + Z u2 = gcd(p, q) Z u0.
  const HVec& nonzero = u1.is_zero() ? u2 : u1;
  Integer content = 0;
  for (const Rational& c : nonzero.coords()) content = gcd(content, c.get_num());
  HVec u0 = nonzero;
  u0 *= Rational(Integer(1), content);

  Integer p = u1.is_zero() ? Integer(0) : multiple_of(u1, u0);
  Integer q = u2.is_zero() ? Integer(0) : multiple_of(u2, u0);

  int lead = first_nonzero(u0);
  Rational t = v[lead] / u0[lead];
  if (!(t * u0 == v) || !is_integer(t)) return {};

  Integer g, s, r;
  gcdext(p, q, g, s, r);
  Integer tt = t.get_num();
  if (tt % g != 0) return {};
  Integer k = tt / g;
  return {true, std::make_pair(Integer(k * s), Integer(k * r))};
}

}  // namespace

std::string basis_name(int basis) {
  return std::string(basis % 2 == 0 ? "X" : "Y") + std::to_string(basis / 2 + 1);
}

int basis_pairing(int p, int q) {
  if (p / 2 != q / 2) return 0;
  if (p % 2 == 0 && q == p + 1) return 1;
  if (p % 2 == 1 && q == p - 1) return -1;
  return 0;
}

HVec::HVec(int genus) : genus_(genus), coords_(static_cast<std::size_t>(basis_size(genus))) {
  if (genus < 1) throw DomainError("genus must be at least 1");
}

HVec::HVec(int genus, std::vector<Rational> coords) : genus_(genus), coords_(std::move(coords)) {
  if (genus < 1) throw DomainError("genus must be at least 1");
  if (coords_.size() != static_cast<std::size_t>(basis_size(genus))) {
    throw DomainError("HVec of genus " + std::to_string(genus) + " needs " +
                      std::to_string(basis_size(genus)) + " coordinates");
  }
}

HVec HVec::basis(int genus, int index) {
  HVec v(genus);
  v[index] = 1;
  return v;
}

bool HVec::is_zero() const { return first_nonzero(*this) < 0; }

HVec& HVec::operator+=(const HVec& o) {
  check_same_genus(*this, o);
  for (int i = 0; i < dim(); ++i) (*this)[i] += o[i];
  return *this;
}

HVec& HVec::operator-=(const HVec& o) {
  check_same_genus(*this, o);
  for (int i = 0; i < dim(); ++i) (*this)[i] -= o[i];
  return *this;
}

HVec& HVec::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

std::string format_hvec(const HVec& v) {
  std::string out;
  for (int i = 0; i < v.dim(); ++i) {
    const Rational& c = v[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + " ";
    out += basis_name(i);
  }
  return out.empty() ? "0" : out;
}

HVec abelianize(const Word& w) {
  HVec v(w.genus());
  for (const Letter& l : w.letters()) v[l.basis()] += l.sign;
  return v;
}

Rational intersection(const HVec& u, const HVec& v) {
  check_same_genus(u, v);
  Rational s = 0;
  for (int i = 0; i < u.dim(); i += 2) s += u[i] * v[i + 1] - u[i + 1] * v[i];
  return s;
}

bool is_integral(const HVec& v) {
  for (const Rational& c : v.coords()) {
    if (!is_integer(c)) return false;
  }
  return true;
}

LatticeWitness lattice_member(const HVec& v, const HVec& u1, const HVec& u2) {
  check_same_genus(v, u1);
  check_same_genus(v, u2);
  if (!is_integral(u1) || !is_integral(u2)) {
    throw DomainError("lattice generators must have integer coordinates");
  }

  if (u1.is_zero() && u2.is_zero()) {
    if (v.is_zero()) return {true, std::make_pair(Integer(0), Integer(0))};
    return {};
  }

  // Independent pair of coordinate rows, if any.
  const int n = v.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Rational det = u1[i] * u2[j] - u1[j] * u2[i];
      if (det == 0) continue;
      Rational m = (v[i] * u2[j] - v[j] * u2[i]) / det;
      Rational k = (u1[i] * v[j] - u1[j] * v[i]) / det;
      for (int r = 0; r < n; ++r) {
        if (m * u1[r] + k * u2[r] != v[r]) return {};
      }
      if (!is_integer(m) || !is_integer(k)) return {};
      return {true, std::make_pair(m.get_num(), k.get_num())};
    }
  }
  return rank_one(v, u1, u2);
}

}  // namespace scc

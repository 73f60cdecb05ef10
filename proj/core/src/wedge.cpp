#include "scc/wedge.hpp"

#include "scc/error.hpp"

namespace scc {

namespace {

void check_genus(int a, int b) {
  if (a != b) {
    throw DomainError("genus mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

void check_basis(int genus, int i) {
  if (i < 0 || i >= basis_size(genus)) throw DomainError("basis index out of range for genus");
}

template <class Terms, class Key>
void accumulate(Terms& terms, const Key& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

std::string signed_join(const std::string& acc, const Rational& c, const std::string& name) {
  std::string out = acc;
  Rational mag = abs(c);
  if (out.empty()) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (mag != 1) out += to_string(mag) + " ";
  return out + name;
}

}  // namespace

Wedge2::Wedge2(int genus) : genus_(genus) {
  if (genus < 1) throw DomainError("genus must be at least 1");
}

void Wedge2::add(int i, int j, const Rational& c) {
  check_basis(genus_, i);
  check_basis(genus_, j);
  if (i == j) return;
  if (i < j) {
    accumulate(terms_, Key{i, j}, c);
  } else {
    accumulate(terms_, Key{j, i}, Rational(-c));
  }
}

Rational Wedge2::coeff(int i, int j) const {
  if (i == j) return 0;
  auto it = terms_.find(i < j ? Key{i, j} : Key{j, i});
  if (it == terms_.end()) return 0;
  return i < j ? it->second : Rational(-it->second);
}

Wedge2& Wedge2::operator+=(const Wedge2& o) {
  check_genus(genus_, o.genus_);
  for (const auto& [k, c] : o.terms_) accumulate(terms_, k, c);
  return *this;
}

Wedge2& Wedge2::operator-=(const Wedge2& o) {
  check_genus(genus_, o.genus_);
  for (const auto& [k, c] : o.terms_) accumulate(terms_, k, Rational(-c));
  return *this;
}

Wedge2& Wedge2::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

Wedge3::Wedge3(int genus) : genus_(genus) {
  if (genus < 1) throw DomainError("genus must be at least 1");
}

void Wedge3::add(int i, int j, int k, const Rational& c) {
  check_basis(genus_, i);
  check_basis(genus_, j);
  check_basis(genus_, k);
  if (i == j || j == k || i == k) return;
  Key key{i, j, k};
  int sign = 1;
  // Three-element bubble sort, tracking transpositions.
  for (int pass = 0; pass < 2; ++pass) {
    for (int p = 0; p < 2; ++p) {
      if (key[p] > key[p + 1]) {
        std::swap(key[p], key[p + 1]);
        sign = -sign;
      }
    }
  }
  accumulate(terms_, key, Rational(sign * c));
}

Wedge3& Wedge3::operator+=(const Wedge3& o) {
  check_genus(genus_, o.genus_);
  for (const auto& [k, c] : o.terms_) accumulate(terms_, k, c);
  return *this;
}

Wedge3& Wedge3::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

Wedge2 wedge(const HVec& u, const HVec& v) {
  check_genus(u.genus(), v.genus());
  Wedge2 w(u.genus());
  for (int i = 0; i < u.dim(); ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < v.dim(); ++j) {
      if (v[j] != 0) w.add(i, j, u[i] * v[j]);
    }
  }
  return w;
}

HVec act2(const Wedge2& w, const HVec& z) {
  check_genus(w.genus(), z.genus());
  HVec out(z.genus());
  for (const auto& [key, c] : w.terms()) {
    auto [i, j] = key;
    HVec ei = HVec::basis(z.genus(), i);
    HVec ej = HVec::basis(z.genus(), j);
    Rational zi = intersection(z, ei);
    Rational zj = intersection(z, ej);
    out[j] += c * zi;
    out[i] -= c * zj;
  }
  return out;
}

Wedge3 wedge3(const HVec& u, const Wedge2& w) {
  check_genus(u.genus(), w.genus());
  Wedge3 t(u.genus());
  for (int p = 0; p < u.dim(); ++p) {
    if (u[p] == 0) continue;
    for (const auto& [key, c] : w.terms()) t.add(p, key.first, key.second, u[p] * c);
  }
  return t;
}

Wedge2 act3(const Wedge3& t, const HVec& z) {
  check_genus(t.genus(), z.genus());
  const int g = z.genus();
  Wedge2 out(g);
  for (const auto& [key, c] : t.terms()) {
    HVec x = HVec::basis(g, key[0]);
    Wedge2 u(g);
    u.add(key[1], key[2], 1);
    Rational zx = intersection(z, x);
    if (zx != 0) out += (c * zx) * u;
    out -= c * wedge(x, act2(u, z));
  }
  return out;
}

Wedge2 omega(int genus) {
  Wedge2 w(genus);
  for (int j = 0; j < genus; ++j) w.add(2 * j, 2 * j + 1, 1);
  return w;
}

TruncTensor embed2(const Wedge2& w, int degree_bound) {
  TruncTensor t(w.genus(), degree_bound);
  for (const auto& [key, c] : w.terms()) {
    auto i = static_cast<std::uint8_t>(key.first);
    auto j = static_cast<std::uint8_t>(key.second);
    t.add({i, j}, c);
    t.add({j, i}, -c);
  }
  return t;
}

TruncTensor embed3(const Wedge3& w, int degree_bound) {
  TruncTensor t(w.genus(), degree_bound);
  for (const auto& [key, c] : w.terms()) {
    auto x = static_cast<std::uint8_t>(key[0]);
    auto y = static_cast<std::uint8_t>(key[1]);
    auto z = static_cast<std::uint8_t>(key[2]);
    t.add({x, y, z}, c);
    t.add({y, z, x}, c);
    t.add({z, x, y}, c);
    t.add({x, z, y}, -c);
    t.add({z, y, x}, -c);
    t.add({y, x, z}, -c);
  }
  return t;
}

std::string wedge_basis_name(const Wedge2::Key& key) {
  return basis_name(key.first) + "^" + basis_name(key.second);
}

std::string format_wedge(const Wedge2& w) {
  std::string out;
  for (const auto& [key, c] : w.terms()) out = signed_join(out, c, wedge_basis_name(key));
  return out.empty() ? "0" : out;
}

std::string format_wedge(const Wedge3& t) {
  std::string out;
  for (const auto& [key, c] : t.terms()) {
    out = signed_join(out, c, basis_name(key[0]) + "^" + basis_name(key[1]) + "^" + basis_name(key[2]));
  }
  return out.empty() ? "0" : out;
}

}  // namespace scc

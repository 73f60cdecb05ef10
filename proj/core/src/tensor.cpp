#include "scc/tensor.hpp"

#include "scc/error.hpp"

#include <algorithm>

namespace scc {

namespace {

void check_compatible(const TruncTensor& a, const TruncTensor& b) {
  if (a.genus() != b.genus()) {
    throw DomainError("genus mismatch: " + std::to_string(a.genus()) + " vs " +
                      std::to_string(b.genus()));
  }
  if (a.degree_bound() != b.degree_bound()) {
    throw DomainError("degree bound mismatch: " + std::to_string(a.degree_bound()) + " vs " +
                      std::to_string(b.degree_bound()));
  }
}

int degree(const Sequence& s) { return static_cast<int>(s.size()); }

}  // namespace

TruncTensor::TruncTensor(int genus, int degree_bound)
    : genus_(genus), degree_bound_(degree_bound), known_through_(degree_bound) {
  if (genus < 1) throw DomainError("genus must be at least 1");
  if (degree_bound < 0) throw DomainError("degree bound must be non-negative");
}

TruncTensor TruncTensor::scalar(int genus, int degree_bound, const Rational& c) {
  TruncTensor t(genus, degree_bound);
  t.add({}, c);
  return t;
}

TruncTensor TruncTensor::from_hvec(const HVec& v, int degree_bound) {
  TruncTensor t(v.genus(), degree_bound);
  for (int i = 0; i < v.dim(); ++i) t.add({static_cast<std::uint8_t>(i)}, v[i]);
  return t;
}

TruncTensor TruncTensor::monomial(int genus, int degree_bound, Sequence seq, const Rational& c) {
  TruncTensor t(genus, degree_bound);
  t.add(seq, c);
  return t;
}

Rational TruncTensor::coeff(const Sequence& seq) const {
  auto it = terms_.find(seq);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TruncTensor::add(const Sequence& seq, const Rational& c) {
  if (c == 0 || degree(seq) > degree_bound_) return;
  for (std::uint8_t b : seq) {
    if (b >= basis_size(genus_)) throw DomainError("basis index out of range for genus");
  }
  auto [it, inserted] = terms_.try_emplace(seq, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncTensor& TruncTensor::mark_known_through(int k) {
  known_through_ = std::clamp(std::min(known_through_, k), -1, degree_bound_);
  return *this;
}

int TruncTensor::lowest_degree() const {
  int lowest = known_through_ + 1;
  for (const auto& [seq, c] : terms_) lowest = std::min(lowest, degree(seq));
  return lowest;
}

TruncTensor TruncTensor::degree_part(int k) const {
  TruncTensor out(genus_, degree_bound_);
  out.known_through_ = known_through_;
  for (const auto& [seq, c] : terms_) {
    if (degree(seq) == k) out.terms_.emplace(seq, c);
  }
  return out;
}

TruncTensor TruncTensor::truncated(int k) const {
  TruncTensor out(genus_, k);
  // known_through_ <= degree_bound_, so raising the bound leaves new degrees unknown.
  out.known_through_ = std::min(known_through_, k);
  for (const auto& [seq, c] : terms_) {
    if (degree(seq) <= k) out.terms_.emplace(seq, c);
  }
  return out;
}

HVec TruncTensor::linear_part() const {
  HVec v(genus_);
  for (const auto& [seq, c] : terms_) {
    if (seq.size() == 1) v[seq[0]] = c;
  }
  return v;
}

TruncTensor& TruncTensor::operator+=(const TruncTensor& o) {
  check_compatible(*this, o);
  for (const auto& [seq, c] : o.terms_) add(seq, c);
  known_through_ = std::min(known_through_, o.known_through_);
  return *this;
}

TruncTensor& TruncTensor::operator-=(const TruncTensor& o) {
  check_compatible(*this, o);
  for (const auto& [seq, c] : o.terms_) add(seq, -c);
  known_through_ = std::min(known_through_, o.known_through_);
  return *this;
}

TruncTensor& TruncTensor::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [seq, c] : terms_) c *= s;
  return *this;
}

std::string format_tensor(const TruncTensor& t) {
  std::string out;
  for (const auto& [seq, c] : t.terms()) {
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (seq.empty()) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + " ";
    for (std::uint8_t b : seq) out += basis_name(b);
  }
  if (out.empty()) out = "0";
  if (t.known_through() < t.degree_bound()) {
    out += " + (unknown in degree > " + std::to_string(t.known_through()) + ")";
  }
  return out;
}

TruncTensor trunc_mul(const TruncTensor& u, const TruncTensor& v) {
  check_compatible(u, v);
  const int bound = u.degree_bound();
  TruncTensor out(u.genus(), bound);
  for (const auto& [su, cu] : u.terms()) {
    for (const auto& [sv, cv] : v.terms()) {
      if (degree(su) + degree(sv) > bound) continue;
      Sequence s = su;
      s.insert(s.end(), sv.begin(), sv.end());
      out.add(s, cu * cv);
    }
  }
  out.mark_known_through(std::min(u.known_through() + v.lowest_degree(),
                                  v.known_through() + u.lowest_degree()));
  return out;
}

TruncTensor trunc_log(const TruncTensor& u) {
  if (u.coeff({}) != 1) throw DomainError("log needs constant term 1");
  TruncTensor x = u - TruncTensor::one(u.genus(), u.degree_bound());
  TruncTensor out(u.genus(), u.degree_bound());
  out.mark_known_through(u.known_through());
  TruncTensor power = x;
  for (int k = 1; k <= u.degree_bound(); ++k) {
    Rational c(k % 2 == 1 ? 1 : -1, k);
    out += c * power;
    power = trunc_mul(power, x);
  }
  return out;
}

TruncTensor trunc_exp(const TruncTensor& u) {
  if (u.coeff({}) != 0) throw DomainError("exp needs constant term 0");
  TruncTensor out = TruncTensor::one(u.genus(), u.degree_bound());
  out.mark_known_through(u.known_through());
  TruncTensor power = u;
  Integer factorial = 1;
  for (int k = 1; k <= u.degree_bound(); ++k) {
    factorial *= k;
    out += Rational(Integer(1), factorial) * power;
    power = trunc_mul(power, u);
  }
  return out;
}

TruncTensor cyclic_nu(const TruncTensor& u) {
  TruncTensor out(u.genus(), u.degree_bound());
  out.mark_known_through(u.known_through());
  for (const auto& [seq, c] : u.terms()) {
    Sequence s = seq;
    if (!s.empty()) std::rotate(s.begin(), s.begin() + 1, s.end());
    out.add(s, c);
  }
  return out;
}

TruncTensor cyclic_N(const TruncTensor& u) {
  TruncTensor out(u.genus(), u.degree_bound());
  out.mark_known_through(u.known_through());
  for (const auto& [seq, c] : u.terms()) {
    Sequence s = seq;
    for (std::size_t j = 0; j < seq.size(); ++j) {
      out.add(s, c);
      std::rotate(s.begin(), s.begin() + 1, s.end());
    }
  }
  return out;
}

TruncTensor derive(const TruncTensor& h, const TruncTensor& u) {
  if (h.genus() != u.genus()) throw DomainError("genus mismatch in derivation");
  if (h.coeff({}) != 0) throw DomainError("derivation generator must lie in T_1 (no constant term)");

  const int n = basis_size(u.genus());
  // images[q] = h(e_q), contracting the first tensor factor.
  std::vector<TruncTensor::Terms> images(static_cast<std::size_t>(n));
  for (const auto& [seq, c] : h.terms()) {
    for (int q = 0; q < n; ++q) {
      int pairing = basis_pairing(q, seq[0]);
      if (pairing == 0) continue;
      Sequence rest(seq.begin() + 1, seq.end());
      Rational& slot = images[static_cast<std::size_t>(q)][rest];
      slot += pairing * c;
    }
  }

  TruncTensor out(u.genus(), u.degree_bound());
  for (const auto& [seq, c] : u.terms()) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      for (const auto& [img, ci] : images[seq[i]]) {
        if (ci == 0) continue;
        Sequence s(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(i));
        s.insert(s.end(), img.begin(), img.end());
        s.insert(s.end(), seq.begin() + static_cast<std::ptrdiff_t>(i) + 1, seq.end());
        out.add(s, c * ci);
      }
    }
  }
  const int u_low = std::max(u.lowest_degree(), 1);
  out.mark_known_through(std::min(h.known_through() + u_low - 2,
                                  u.known_through() + h.lowest_degree() - 2));
  return out;
}

}  // namespace scc

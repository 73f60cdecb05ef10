#include "scc/expansion.hpp"

#include "scc/ell.hpp"
#include "scc/error.hpp"
#include "scc/wedge.hpp"

namespace scc {

namespace {

// D_L is nilpotent on a truncated algebra; this only guards against a bug.
constexpr int kMaxSeriesTerms = 64;

}  // namespace

TruncTensor theta0(const Word& w, int degree_bound) {
  if (degree_bound < 2) throw DomainError("theta0 needs a degree bound of at least 2");
  const HVec a = abelianize(w);
  TruncTensor lin = TruncTensor::from_hvec(a, degree_bound);
  TruncTensor out = TruncTensor::one(w.genus(), degree_bound);
  out += lin;
  out += embed2(ell(w), degree_bound);
  out += Rational(1, 2) * trunc_mul(lin, lin);
  out.mark_known_through(2);
  return out;
}

TruncTensor L_theta(const Word& a, int degree_bound) {
  if (degree_bound > kMaxLDegree) {
    throw DomainError("L^theta is available through degree " + std::to_string(kMaxLDegree) +
                      ", requested " + std::to_string(degree_bound));
  }
  const int work = std::max(degree_bound, 2);
  TruncTensor log_theta = trunc_log(theta0(a, work));
  TruncTensor out = Rational(1, 2) * cyclic_N(trunc_mul(log_theta, log_theta));
  return out.truncated(degree_bound);
}

TruncTensor johnson_twist(const Word& a, const TruncTensor& u) {
  if (a.genus() != u.genus()) throw DomainError("genus mismatch");
  if (u.degree_bound() > kMaxLDegree) {
    throw DomainError("twist action is available through degree bound " +
                      std::to_string(kMaxLDegree));
  }
  const TruncTensor L = L_theta(a, kMaxLDegree);
  TruncTensor sum = u;
  TruncTensor term = u;
  for (int k = 1; k <= kMaxSeriesTerms; ++k) {
    term = Rational(-1, k) * derive(L, term);
    if (term.is_zero()) {
      sum.mark_known_through(term.known_through());
      return sum;
    }
    sum += term;
  }
  throw InvariantViolation("derivation exponential did not terminate");
}

}  // namespace scc

#pragma once

#include "scc/homology.hpp"
#include "scc/tensor.hpp"
#include "scc/wedge.hpp"
#include "scc/word.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace scc {

enum class Verdict {
  /// |a|.|b| != 0, so the curves must meet.
  CertifiedPositiveHomological,
  /// |a|.|b| = 0 and the obstruction vector leaves Z|a| + Z|b|.
  CertifiedPositiveTheorem,
  /// |a|.|b| = 0 and the obstruction vector lies in the lattice; nothing is claimed.
  Inconclusive,
};

std::string_view to_string(Verdict v);

/// Full record of one analysis. Every value is exact.
struct Report {
  int genus = 1;
  Word a{1};
  Word b{1};
  HVec abs_a{1};
  HVec abs_b{1};
  Integer iA;
  Wedge2 ell_a{1};
  Wedge2 ell_b{1};
  // Present iff iA == 0.
  std::optional<HVec> ell_a_on_b;  // l(a)(|b|)
  std::optional<HVec> ell_b_on_a;  // l(b)(|a|)
  std::optional<HVec> obstruction;
  std::optional<LatticeWitness> lattice;
  Verdict verdict = Verdict::Inconclusive;
};

inline constexpr std::string_view kExpansionName = "theta0";
inline constexpr std::string_view kDisclaimer =
    "inputs are assumed to be classes of simple closed curves; certificates bound the "
    "geometric intersection number from below and never assert that it is zero";

/// Runs the intersection obstruction on a pair of words of equal genus.
Report analyze(int genus, const Word& a, const Word& b);
/// Parses both words first; parse errors propagate.
Report analyze(int genus, std::string_view a, std::string_view b);

/// Both sides of theta_2(t_a(b)) - theta_2(b) = |a| ^ v.
struct TwistComparison {
  bool consistent = false;
  TruncTensor twisted_difference;  // degree-2 part of e^{-L(a)}(theta0(b)) - theta0(b)
  TruncTensor closed_form;         // embed2(|a| ^ v)
};

/// Cross-checks the degree-2 twist formula against the obstruction vector.
/// Throws DomainError unless |a|.|b| = 0.
TwistComparison twist_consistency(int genus, const Word& a, const Word& b);

nlohmann::json hvec_to_json(const HVec& v);
nlohmann::json hvec_terms_to_json(const HVec& v);
nlohmann::json wedge_to_json(const Wedge2& w);
nlohmann::json report_to_json(const Report& r);
/// Human-readable layout following a worked derivation, one quantity per line.
std::string report_to_text(const Report& r);

}  // namespace scc

#include "scc/obstruction.hpp"

#include "scc/ell.hpp"
#include "scc/error.hpp"
#include "scc/expansion.hpp"

#include <sstream>

namespace scc {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedPositiveHomological:
      return "certified_positive_homological";
    case Verdict::CertifiedPositiveTheorem:
      return "certified_positive_theorem";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Report analyze(int genus, const Word& a, const Word& b) {
  if (a.genus() != genus || b.genus() != genus) {
    throw DomainError("words must be over genus " + std::to_string(genus));
  }
  Report r;
  r.genus = genus;
  r.a = a;
  r.b = b;
  r.abs_a = abelianize(a);
  r.abs_b = abelianize(b);
  r.iA = intersection(r.abs_a, r.abs_b).get_num();
  r.ell_a = ell(a);
  r.ell_b = ell(b);

  if (r.iA != 0) {
    r.verdict = Verdict::CertifiedPositiveHomological;
    return r;
  }

  r.ell_a_on_b = act2(r.ell_a, r.abs_b);
  r.ell_b_on_a = act2(r.ell_b, r.abs_a);
  r.obstruction = *r.ell_a_on_b + *r.ell_b_on_a;
  r.lattice = lattice_member(*r.obstruction, r.abs_a, r.abs_b);
  r.verdict = r.lattice->member ? Verdict::Inconclusive : Verdict::CertifiedPositiveTheorem;
  return r;
}

Report analyze(int genus, std::string_view a, std::string_view b) {
  return analyze(genus, parse_word(a, genus), parse_word(b, genus));
}

TwistComparison twist_consistency(int genus, const Word& a, const Word& b) {
  if (a.genus() != genus || b.genus() != genus) {
    throw DomainError("words must be over genus " + std::to_string(genus));
  }
  const HVec abs_a = abelianize(a);
  const HVec abs_b = abelianize(b);
  if (intersection(abs_a, abs_b) != 0) {
    throw DomainError("twist cross-check needs |a|.|b| = 0");
  }
  constexpr int kDegree = 2;
  const TruncTensor theta_b = theta0(b, kDegree);
  const TruncTensor twisted = johnson_twist(a, theta_b);
  if (twisted.known_through() < kDegree) {
    throw InvariantViolation("twisted expansion is not exact in degree 2");
  }

  TwistComparison out{false, (twisted - theta_b).degree_part(kDegree),
                      embed2(wedge(abs_a, obstruction_vector(a, b)), kDegree)};
  out.consistent = out.twisted_difference == out.closed_form;
  return out;
}

nlohmann::json hvec_to_json(const HVec& v) {
  nlohmann::json out = nlohmann::json::object();
  for (int i = 0; i < v.dim(); ++i) {
    if (v[i] != 0) out[basis_name(i)] = to_string(v[i]);
  }
  return out;
}

nlohmann::json hvec_terms_to_json(const HVec& v) {
  nlohmann::json out = nlohmann::json::array();
  for (int i = 0; i < v.dim(); ++i) {
    if (v[i] != 0) out.push_back({{"basis", basis_name(i)}, {"coeff", to_string(v[i])}});
  }
  return out;
}

nlohmann::json wedge_to_json(const Wedge2& w) {
  // Lexicographic by basis name, not by basis position.
  std::map<std::string, std::string> sorted;
  for (const auto& [key, c] : w.terms()) sorted[wedge_basis_name(key)] = to_string(c);
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [name, c] : sorted) out.push_back({{"basis", name}, {"coeff", c}});
  return out;
}

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json j;
  j["genus"] = r.genus;
  j["a"] = format_word(r.a);
  j["b"] = format_word(r.b);
  j["abs"] = {{"a", hvec_to_json(r.abs_a)}, {"b", hvec_to_json(r.abs_b)}};
  j["iA"] = r.iA.get_si();
  j["ell"] = {{"a", wedge_to_json(r.ell_a)}, {"b", wedge_to_json(r.ell_b)}};
  if (r.obstruction) {
    j["obstruction"] = hvec_terms_to_json(*r.obstruction);
  } else {
    j["obstruction"] = nullptr;
  }
  if (r.lattice) {
    nlohmann::json lat = {{"member", r.lattice->member}};
    if (r.lattice->coefficients) {
      lat["m"] = r.lattice->coefficients->first.get_str();
      lat["n"] = r.lattice->coefficients->second.get_str();
    } else {
      lat["m"] = nullptr;
      lat["n"] = nullptr;
    }
    j["lattice"] = lat;
  } else {
    j["lattice"] = nullptr;
  }
  j["verdict"] = std::string(to_string(r.verdict));
  j["expansion"] = std::string(kExpansionName);
  j["disclaimer"] = std::string(kDisclaimer);
  return j;
}

std::string report_to_text(const Report& r) {
  std::ostringstream out;
  out << "genus        " << r.genus << "\n";
  out << "a            " << format_word(r.a) << "\n";
  out << "b            " << format_word(r.b) << "\n";
  out << "|a|          " << format_hvec(r.abs_a) << "\n";
  out << "|b|          " << format_hvec(r.abs_b) << "\n";
  out << "|a|.|b|      " << r.iA.get_str() << "\n";
  out << "l(a)         " << format_wedge(r.ell_a) << "\n";
  out << "l(b)         " << format_wedge(r.ell_b) << "\n";
  if (r.obstruction) {
    out << "l(a)|b|      " << format_hvec(*r.ell_a_on_b) << "\n";
    out << "l(b)|a|      " << format_hvec(*r.ell_b_on_a) << "\n";
    out << "v            " << format_hvec(*r.obstruction) << "\n";
    if (r.lattice->member) {
      out << "lattice      v = " << r.lattice->coefficients->first.get_str() << " |a| + "
          << r.lattice->coefficients->second.get_str() << " |b|\n";
    } else {
      out << "lattice      v not in Z|a| + Z|b|\n";
    }
  }
  out << "verdict      " << to_string(r.verdict);
  switch (r.verdict) {
    case Verdict::CertifiedPositiveHomological:
      out << "  (i_G >= |i_A| > 0)";
      break;
    case Verdict::CertifiedPositiveTheorem:
      out << "  (i_G > 0)";
      break;
    case Verdict::Inconclusive:
      out << "  (no claim about i_G)";
      break;
  }
  out << "\nexpansion    " << kExpansionName << "\n";
  return out.str();
}

}  // namespace scc

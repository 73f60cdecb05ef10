#include "cli.hpp"

#include "selftest.hpp"

#include "scc/ell.hpp"
#include "scc/error.hpp"
#include "scc/obstruction.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>
#include <thread>

namespace scc::cli {

namespace {

struct CliConfig {
  int genus = 0;
  std::string a;
  std::string b;
  std::string word;
  std::string format = "text";
  std::string pairs;
  std::uint64_t seed = 1;
  int iterations = 100;
};

nlohmann::json tensor_to_json(const TruncTensor& t) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [seq, c] : t.terms()) {
    std::string name;
    for (std::uint8_t b : seq) name += basis_name(b);
    out.push_back({{"basis", name.empty() ? "1" : name}, {"coeff", to_string(c)}});
  }
  return out;
}

// Errors in batch input are reported with their line number.
class BatchLineError : public std::invalid_argument {
 public:
  BatchLineError(std::size_t line, const std::string& what)
      : std::invalid_argument("line " + std::to_string(line) + ": " + what) {}
};

std::string analyze_line(const std::string& line, std::size_t number) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  for (std::string field; std::getline(ss, field, '\t');) fields.push_back(field);
  if (fields.size() != 3) throw BatchLineError(number, "expected genus<TAB>a<TAB>b");
  int genus = 0;
  try {
    std::size_t used = 0;
    genus = std::stoi(fields[0], &used);
    if (used != fields[0].size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw BatchLineError(number, "bad genus '" + fields[0] + "'");
  }
  if (genus < 1) throw BatchLineError(number, "genus must be at least 1");
  try {
    return report_to_json(analyze(genus, fields[1], fields[2])).dump();
  } catch (const InvariantViolation&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw BatchLineError(number, e.what());
  }
}

void run_batch(const std::string& path, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open pairs file '" + path + "'");
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::size_t number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    lines.emplace_back(number, line);
  }
  // Blocks of independent lines run concurrently; output keeps input order.
  const std::size_t block = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < lines.size(); start += block) {
    std::vector<std::future<std::string>> jobs;
    for (std::size_t i = start; i < std::min(lines.size(), start + block); ++i) {
      jobs.push_back(std::async(std::launch::async, analyze_line, lines[i].second, lines[i].first));
    }
    for (auto& job : jobs) out << job.get() << "\n";
  }
}

int cmd_analyze(const CliConfig& cfg, std::ostream& out) {
  if (!cfg.pairs.empty()) {
    run_batch(cfg.pairs, out);
    return kExitOk;
  }
  if (cfg.genus < 1 || cfg.a.empty() || cfg.b.empty()) {
    throw DomainError("analyze needs --genus, --a and --b (or --pairs FILE)");
  }
  Report r = analyze(cfg.genus, cfg.a, cfg.b);
  if (cfg.format == "json") {
    out << report_to_json(r).dump(2) << "\n";
  } else {
    out << report_to_text(r);
  }
  return kExitOk;
}

int cmd_twist_check(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  Word a = parse_word(cfg.a, cfg.genus);
  Word b = parse_word(cfg.b, cfg.genus);
  TwistComparison cmp = twist_consistency(cfg.genus, a, b);
  if (cfg.format == "json") {
    nlohmann::json j = {{"genus", cfg.genus},
                        {"a", format_word(a)},
                        {"b", format_word(b)},
                        {"twisted_difference", tensor_to_json(cmp.twisted_difference)},
                        {"closed_form", tensor_to_json(cmp.closed_form)},
                        {"consistent", cmp.consistent}};
    out << j.dump(2) << "\n";
  } else {
    out << "a                         " << format_word(a) << "\n";
    out << "b                         " << format_word(b) << "\n";
    out << "theta2(t_a(b)) - theta2(b) " << format_tensor(cmp.twisted_difference) << "\n";
    out << "|a| ^ v                   " << format_tensor(cmp.closed_form) << "\n";
    out << "consistent                " << (cmp.consistent ? "true" : "false") << "\n";
  }
  if (!cmp.consistent) {
    err << "twist cross-check failed\n";
    return kExitInvariantViolation;
  }
  return kExitOk;
}

int cmd_eval(const CliConfig& cfg, std::ostream& out) {
  Word w = parse_word(cfg.word, cfg.genus);
  HVec abs = abelianize(w);
  Wedge2 l = ell(w);
  if (cfg.format == "json") {
    nlohmann::json j = {{"genus", cfg.genus},
                        {"word", format_word(w)},
                        {"abs", hvec_to_json(abs)},
                        {"ell", wedge_to_json(l)},
                        {"expansion", std::string(kExpansionName)}};
    out << j.dump(2) << "\n";
  } else {
    out << "w      " << format_word(w) << "\n";
    out << "|w|    " << format_hvec(abs) << "\n";
    out << "l(w)   " << format_wedge(l) << "\n";
  }
  return kExitOk;
}

int cmd_selftest(const CliConfig& cfg, std::ostream& out) {
  std::vector<SuiteResult> results = run_selftest(cfg.seed, cfg.iterations);
  int failed = 0;
  if (cfg.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : results) {
      j.push_back({{"suite", r.name}, {"passed", r.passed}, {"failed", r.failed}, {"failures", r.failures}});
      failed += r.failed;
    }
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << (r.failed == 0 ? "PASS " : "FAIL ") << r.name << "  passed " << r.passed << "  failed "
          << r.failed << "\n";
      for (const auto& f : r.failures) out << "    " << f << "\n";
      failed += r.failed;
    }
  }
  return failed == 0 ? kExitOk : kExitInvariantViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Intersection obstruction for simple closed curves on a surface with one boundary", "scc"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Decide the obstruction for a pair of curves");
  analyze_cmd->add_option("--genus,-g", cfg.genus, "Surface genus")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--a", cfg.a, "First word");
  analyze_cmd->add_option("--b", cfg.b, "Second word");
  analyze_cmd->add_option("--pairs", cfg.pairs, "Batch file of genus<TAB>a<TAB>b lines (JSON-lines output)");
  add_format(analyze_cmd);

  auto* twist_cmd = app.add_subcommand("twist-check", "Compare the twisted expansion with the closed form");
  twist_cmd->add_option("--genus,-g", cfg.genus, "Surface genus")->required()->check(CLI::PositiveNumber);
  twist_cmd->add_option("--a", cfg.a, "Twisting curve")->required();
  twist_cmd->add_option("--b", cfg.b, "Twisted curve")->required();
  add_format(twist_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "Print |w| and l(w)");
  eval_cmd->add_option("--genus,-g", cfg.genus, "Surface genus")->required()->check(CLI::PositiveNumber);
  eval_cmd->add_option("word", cfg.word, "Word")->required();
  add_format(eval_cmd);

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the property suites of every module");
  selftest_cmd->add_option("--seed", cfg.seed, "Random seed");
  selftest_cmd->add_option("--iterations", cfg.iterations, "Cases per suite")->check(CLI::PositiveNumber);
  add_format(selftest_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(cfg, out);
    if (twist_cmd->parsed()) return cmd_twist_check(cfg, out, err);
    if (eval_cmd->parsed()) return cmd_eval(cfg, out);
    if (selftest_cmd->parsed()) return cmd_selftest(cfg, out);
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kExitInvariantViolation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariantViolation;
  }
  return kExitInputError;
}

}  // namespace scc::cli

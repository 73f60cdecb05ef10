#include "cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = scc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(Cli, AnalyzeJsonWorkedExample) {
  Result r = run({"analyze", "--genus", "2", "--a", "x1 x2 y2 x2^-1", "--b", "y2 x1^-1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "certified_positive_theorem");
  EXPECT_EQ(j["obstruction"], nlohmann::json::parse(R"([{"basis":"X1","coeff":"1"}])"));
}

TEST(Cli, AnalyzeTextSameCurve) {
  Result r = run({"analyze", "--genus", "2", "--a", "x1", "--b", "x1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("|a|.|b|      0"), std::string::npos);
  EXPECT_NE(r.out.find("inconclusive"), std::string::npos);
}

TEST(Cli, EvalZeta) {
  Result r = run({"eval", "--genus", "2", "zeta"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("|w|    0"), std::string::npos);
  EXPECT_NE(r.out.find("l(w)   X1^Y1 + X2^Y2"), std::string::npos);
}

TEST(Cli, TwistCheck) {
  Result r = run({"twist-check", "-g", "2", "--a", "x1 x2 y2 x2^-1", "--b", "y2 x1^-1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(nlohmann::json::parse(r.out)["consistent"].get<bool>());
  Result bad = run({"twist-check", "-g", "1", "--a", "x1", "--b", "y1"});
  EXPECT_EQ(bad.code, 1);
}

TEST(Cli, InputErrorsExitOne) {
  Result token = run({"analyze", "--genus", "2", "--a", "x1 z3", "--b", "x1"});
  EXPECT_EQ(token.code, 1);
  EXPECT_NE(token.err.find("z3"), std::string::npos);
  EXPECT_EQ(run({"analyze", "--genus", "2", "--a", "x3", "--b", "x1"}).code, 1);
  EXPECT_EQ(run({"analyze", "--genus", "0", "--a", "x1", "--b", "x1"}).code, 1);
  EXPECT_EQ(run({"analyze", "--genus", "2", "--a", "x1"}).code, 1);
  EXPECT_EQ(run({"eval", "--genus", "2", "(x1"}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"analyze", "--genus", "2", "--a", "x1", "--b", "x1", "--format", "xml"}).code, 1);
  EXPECT_EQ(run({"selftest", "--iterations", "0"}).code, 1);
}

TEST(Cli, Help) {
  Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("analyze"), std::string::npos);
}

TEST(Cli, BatchPreservesOrder) {
  auto path = write_temp("scc_cli_batch.tsv",
                         "# genus\ta\tb\n"
                         "2\tx1 x2 y2 x2^-1\ty2 x1^-1\n"
                         "\n"
                         "1\tx1\ty1\n"
                         "2\tx1\tx2^-1 [y1,zeta] zeta\n");
  Result r = run({"analyze", "--pairs", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::vector<std::string> verdicts;
  for (std::string line; std::getline(lines, line);) {
    verdicts.push_back(nlohmann::json::parse(line)["verdict"]);
  }
  EXPECT_EQ(verdicts, (std::vector<std::string>{"certified_positive_theorem", "certified_positive_homological",
                                                 "inconclusive"}));
  std::filesystem::remove(path);
}

TEST(Cli, BatchErrorNamesLine) {
  auto path = write_temp("scc_cli_batch_bad.tsv", "1\tx1\ty1\n1\tx1\tq7\n");
  Result r = run({"analyze", "--pairs", path.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_NE(r.err.find("q7"), std::string::npos);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"analyze", "--pairs", "/nonexistent/pairs.tsv"}).code, 1);
}

TEST(Cli, JsonRoundTrip) {
  Result first = run({"analyze", "-g", "3", "--a", "x1 y2 x1^-1", "--b", "[x3, y1] y3", "--format", "json"});
  ASSERT_EQ(first.code, 0) << first.err;
  nlohmann::json j = nlohmann::json::parse(first.out);
  Result second = run({"analyze", "-g", "3", "--a", j["a"], "--b", j["b"], "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(second.out), j);
}

TEST(Cli, SelftestDeterministic) {
  Result a = run({"selftest", "--seed", "5", "--iterations", "20", "--format", "json"});
  Result b = run({"selftest", "--seed", "5", "--iterations", "20", "--format", "json"});
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  nlohmann::json j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j.size(), 6u);
  for (const auto& suite : j) EXPECT_EQ(suite["failed"], 0) << suite["suite"];
}

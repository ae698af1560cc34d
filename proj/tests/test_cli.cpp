#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mvml/cli.hpp"

namespace mvml {
namespace {

std::string data(const std::string& rel) { return std::string(MVML_DATA_DIR) + "/" + rel; }

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "mvml");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, EtaOfLukasiewiczThree) {
  const CliResult r = run({"formula", "eta", "--algebra", "lukasiewicz(3)", "0.5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "p + p\n");
}

TEST(Cli, ValiditySearchRefutesNormality) {
  const CliResult r = run({"search", "valid", "--algebra", "lukasiewicz(3)", "--class", "all", "--max-worlds", "2",
                     "[] (p->q) -> ([]p -> []q)"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("verdict: refuted at w0\nalgebra: lukasiewicz(3)\n", 0), 0u) << r.out;
}

TEST(Cli, ValidUpToExitsZero) {
  const CliResult r = run({"search", "valid", "--algebra", "godel(3)", "--max-worlds", "2", "[](p -> q) -> ([]p -> []q)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "verdict: valid-up-to 2\n");
}

TEST(Cli, JsonLines) {
  const CliResult r = run({"search", "local", "--algebra", "wnm5", "--class", "idem", "--premise", "[]~~p", "--format",
                     "json-lines", "[]p"});
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["verdict"], "refuted");
  EXPECT_EQ(j.begin().key(), "verdict");
  EXPECT_NE(j["model"].get<std::string>().find("R: w0 w0 = 0.75"), std::string::npos);
}

TEST(Cli, CompanionDiscard) {
  CliResult r = run({"search", "discard", "--algebra", "lukasiewicz(3)", "[](p -> q) -> ([]p -> []q)"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("verdict: discarded"), std::string::npos);
  r = run({"search", "discard", "--algebra", "godel(3)", "[](p -> q) -> ([]p -> []q)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict: inconclusive"), std::string::npos);
}

TEST(Cli, Definability) {
  const CliResult r = run({"search", "define", "--algebra", "lukasiewicz(3)", "--class", "idem", "([]p * []p) -> [](p * p)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "verdict: defines-up-to 2\n");
}

TEST(Cli, Lift) {
  const CliResult r = run({"search", "lift", "--algebra", "lukasiewicz(3)", "--delta", "p /\\ q", "--delta-args", "p,q",
                     "--epsilon", "p", "p", "q", "p /\\ q"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("conclusion: []p /\\ []q -> [](p /\\ q)"), std::string::npos) << r.out;
}

TEST(Cli, FormulaCommands) {
  CliResult r = run({"formula", "parse", "~p"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "~p\n(implies p 0)\n");
  r = run({"formula", "companion", "[][]p"});
  EXPECT_EQ(r.out, "$r1 -> $r0 -> p\n");
  r = run({"formula", "translate", "[]p"});
  EXPECT_EQ(r.out, "∀y(Rxy → Py)\n");
  r = run({"formula", "parse", "(p"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("SyntaxError"), std::string::npos);
  r = run({"formula", "parse", "--constants", "off", "@0.5"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, ModelEval) {
  CliResult r = run({"model", "eval", data("models/k_failure.mdl"), "[]q", "w0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0.5\n");
  r = run({"model", "eval", data("models/k_failure.mdl"), "[]q"});
  EXPECT_EQ(r.out, "w0: 0.5\nw1: 1\n");
  r = run({"model", "eval", data("models/missing.mdl"), "p"});
  EXPECT_EQ(r.code, 66);
}

TEST(Cli, AlgebraCommands) {
  CliResult r = run({"algebra", "check", data("algebras/heyting5.alg")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("law meet-imp: fails at (a, b, 0)"), std::string::npos);
  r = run({"algebra", "show", "mtl6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("idempotents: "), std::string::npos);
  r = run({"algebra", "check", "lukasiewicz(1)"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, CalcCommands) {
  CliResult r = run({"calc", "check", data("derivations/fusion_normality.drv")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "ok: 8 steps\n");
  r = run({"calc", "bookkeeping", "boolean2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(p <-> 0) \\/ (p <-> 1)"), std::string::npos);
  r = run({"calc", "bookkeeping", "--constants", "off", "boolean2"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 64);
  EXPECT_EQ(run({"search"}).code, 64);
  EXPECT_EQ(run({"search", "valid", "--max-worlds", "zero", "p"}).code, 64);
  EXPECT_EQ(run({"search", "valid", "--class", "sideways", "p"}).code, 64);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ReproduceSingleScenario) {
  CliResult r = run({"reproduce", "fig1_k_failure"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "PASS fig1_k_failure\n");
  r = run({"reproduce", "no_such_scenario"});
  EXPECT_EQ(r.code, 2);
}

}  // namespace
}  // namespace mvml

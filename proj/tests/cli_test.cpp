#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = bezout::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(BEZOUT_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, QuadraticPairResultant) {
  Invocation r = invoke({"resultant", "--var", "x", "--method", "sylvester", data("two_quadrics.psys")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "resultant: A^2*C'^2 - A*B*B'*C' - 2*A*C*A'*C' + A*C*B'^2 + B^2*A'*C' - B*C*A'*B' + C^2*A'^2\n");
  Invocation b = invoke({"resultant", "--var", "x", "--method", "bezoutian", data("two_quadrics.psys")});
  EXPECT_EQ(b.out, r.out);
}

TEST(Cli, IdentityCoprimePair) {
  Invocation r = invoke({"identity", data("coprime_pair.psys")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "L1 = 1, L2 = -1\n");
}

TEST(Cli, CountRemovalExample) {
  Invocation r = invoke({"count", "--vars", "2", "--degree", "3", "--remove", "u:2,x:1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "2\n");
  EXPECT_EQ(invoke({"count", "--degrees", "3,2,2"}).out, "12\n");
}

TEST(Cli, StdinInput) {
  Invocation r = invoke({"identity", "-"}, "vars: x\nx - 1\nx - 2\n");
  EXPECT_EQ(r.out, "L1 = 1, L2 = -1\n");
}

TEST(Cli, EliminateTraceNamesIntermediateObjects) {
  Invocation r = invoke({"eliminate", "--method", "somme2", "--trace", data("regrouped.psys")});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* needle : {"equation-somme: M1*F1 + M2*F2 + M3*F3", "coefficient system: 7 x 7", "final line: ",
                             "arbitrary: M2[y]*F2[x] + M3[y]*F3[x] = 0", "candidate superfluous factor"})
    EXPECT_NE(r.out.find(needle), std::string::npos) << needle;
}

TEST(Cli, GlobalFlagsAfterSubcommand) {
  Invocation a = invoke({"--format", "json", "eliminate", data("three_eq.psys")});
  Invocation b = invoke({"eliminate", data("three_eq.psys"), "--format", "json"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::ordered_json::parse(a.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["method"], "strip");
  EXPECT_EQ(j["resultant"]["(2,0,0)"], "7/1");
}

TEST(Cli, Deterministic) {
  std::vector<std::string> args{"eliminate", "--trace", "--seed", "2", "--runs", "4", data("regrouped.psys")};
  Invocation a = invoke(args), b = invoke(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Solve1762) {
  Invocation r = invoke({"solve1762", "--n", "3", "--p", "-3", "--q", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("E: x^3 - 3*x + 2 = 0"), std::string::npos);
  EXPECT_NE(r.out.find("root: -2"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({"resultant", "/nonexistent/file.psys"}).code, 2);
  EXPECT_EQ(invoke({"parse", "-"}, "vars: x\nx + z\n").code, 2);
  EXPECT_EQ(invoke({"count", "--vars", "2", "--degree", "3", "--format", "xml"}).code, 2);
  // Degenerate mathematics.
  EXPECT_EQ(invoke({"solve1762", "--n", "3", "--p", "0", "--q", "1"}).code, 3);
  EXPECT_EQ(invoke({"identity", "-"}, "vars: x\nx^2 - 1\nx - 1\n").code, 3);
  Invocation help = invoke({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("solve1762"), std::string::npos);
}

TEST(Cli, ParseEcho) {
  Invocation r = invoke({"parse", "-"}, "vars: x y\nkeep: y\nx^2 = y\n");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "vars: x y\nkeep: y\nx^2 - y = 0\n");
}

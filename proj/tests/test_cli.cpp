#include <gtest/gtest.h>

#include <sstream>

#include "defsem/cli.hpp"
#include "support.hpp"

using namespace defsem;
using namespace defsem::test;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Defenses) {
  auto r = run({"defenses", golden_path("f2.apx")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(a,a,a)\n(a,a,b)\n(a,b,c)\n(b,c,d)\n");
}

TEST(Cli, DefenseEquivalenceVerdicts) {
  EXPECT_EQ(run({"equiv", "--kind=defense", "--sem=CO", golden_path("f13.apx"), golden_path("f14.apx")}).code, 0);
  EXPECT_EQ(run({"equiv", "--kind=strong", golden_path("f13.apx"), golden_path("f14.apx")}).code, 1);
  EXPECT_EQ(run({"equiv", "--kind=defense", golden_path("f5.apx"), golden_path("f6.apx")}).code, 1);
}

TEST(Cli, GroundedOfEmpty) {
  auto r = run({"extensions", "--side=defense", "--sem=GR", golden_path("empty.apx")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{}\n");
  auto j = run({"extensions", "--side=defense", "--sem=GR", "--json", golden_path("empty.apx")});
  auto parsed = Json::parse(j.out);
  EXPECT_EQ(parsed["count"], 1);
  EXPECT_TRUE(parsed["extensions"][0]["defenses"].empty());
}

TEST(Cli, ArgumentSide) {
  auto r = run({"extensions", "--side=argument", "--sem=co", golden_path("f10.apx")});
  EXPECT_EQ(r.out, "{}\n{b}\n");
}

TEST(Cli, Contract) {
  auto j = Json::parse(run({"contract", "--json", golden_path("f2.apx")}).out);
  EXPECT_EQ(j["counts"]["removed"], 3);
  EXPECT_EQ(j["remaining"].size(), 1u);
  auto m = run({"contract", "--remove", "(a,a,a)", "--remove", "(a,a,b)", golden_path("f2.apx")});
  EXPECT_EQ(m.code, 0);
  EXPECT_NE(m.out.find("removed 2 of 4"), std::string::npos);
}

TEST(Cli, ReasonsAndSummarize) {
  auto r = run({"reasons", "--args", "a,b", golden_path("f3.apx")});
  EXPECT_NE(r.out.find("a {{}, {a}, {}}"), std::string::npos);
  EXPECT_EQ(run({"summarize", golden_path("f17.apx"), golden_path("f16.apx")}).code, 0);
  EXPECT_EQ(run({"summarize", golden_path("f16.apx"), golden_path("f16.apx")}).code, 1);
}

TEST(Cli, EdgeListInput) {
  auto r = run({"defenses", golden_path("small.edges")});
  EXPECT_EQ(r.code, 0);
  EXPECT_FALSE(r.out.empty());
}

TEST(Cli, Errors) {
  EXPECT_EQ(run({"defenses", "/nonexistent.apx"}).code, 2);
  EXPECT_EQ(run({"defenses", "--bogus", golden_path("f2.apx")}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"equiv", golden_path("f2.apx")}).code, 2);
  EXPECT_EQ(run({"extensions", "--sem=xx", golden_path("f2.apx")}).code, 2);
  auto bad = run({"reasons", "--args", "zz", golden_path("f2.apx")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("zz"), std::string::npos);
}

TEST(Cli, ExportDot) {
  auto r = run({"export-dot", golden_path("f5.apx")});
  EXPECT_EQ(r.out, to_dot(golden("f5")));
}

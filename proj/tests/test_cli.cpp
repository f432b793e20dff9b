#include <gtest/gtest.h>

#include "cli_runner.hpp"
#include "nashtoric/io.hpp"

using nashtoric::Json;

namespace {

const std::string kCusp = R"({"dimension":1,"characteristic":2,"semigroup_generators":[[2],[3]]})";
const std::string kThreefold = R"({"dimension":3,"characteristic":2,"dual_cone_rays":[[1,0,0],[0,1,0],[1,1,2]]})";

}  // namespace

TEST(Cli, EveryCommandSucceedsOnValidInput) {
  for (const char* command : {"check", "mingen", "saturate", "logjac", "newton", "blowup", "resolve", "compare"}) {
    auto r = cli::run(command, kThreefold);
    EXPECT_EQ(r.exit_code, 0) << command;
    EXPECT_TRUE(Json::accept(r.out)) << command;
  }
  auto suite = cli::run("suite --seed 3 --count 4 --entry-bound 10");
  EXPECT_EQ(suite.exit_code, 0);
  EXPECT_EQ(Json::parse(suite.out)["seed"], 3);
}

TEST(Cli, FlagsOverrideTheDocument) {
  auto r = cli::run("logjac --char 3", kCusp);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(Json::parse(r.out)["ideals"][0]["exponents"], Json::parse("[[2]]"));
  auto many = cli::run("logjac --chars 0,2,3,5", kCusp);
  EXPECT_EQ(Json::parse(many.out)["ideals"].size(), 4u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli::run("check", R"({"dimension":2,"characteristic":4,"semigroup_generators":[[1,0],[0,1]]})").exit_code, 2);
  EXPECT_EQ(cli::run("check", "not json").exit_code, 2);
  EXPECT_EQ(cli::run("check", R"({"dimension":2,"semigroup_generators":[[1,0],[-1,0],[0,1]]})").exit_code, 2);
  EXPECT_EQ(cli::run("mingen --format dot", kCusp).exit_code, 2);
  EXPECT_EQ(cli::run("resolve --no-normalize", kCusp).exit_code, 4);
  EXPECT_EQ(cli::run("resolve --max-depth 1", kThreefold).exit_code, 3);
  EXPECT_EQ(cli::run("resolve --bogus-flag", kCusp).exit_code, 2);
  EXPECT_EQ(cli::run("resolve", kCusp).exit_code, 0);
  EXPECT_EQ(cli::run("--help").exit_code, 0);
}

TEST(Cli, OutputFormats) {
  auto dot = cli::run("resolve --format dot", kThreefold);
  EXPECT_EQ(dot.exit_code, 0);
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
  auto text = cli::run("logjac --chars 0,2,3,5 --format text", kCusp);
  EXPECT_NE(text.out.find("2      <t^3>"), std::string::npos) << text.out;
}

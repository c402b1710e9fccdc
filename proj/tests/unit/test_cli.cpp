#include <gtest/gtest.h>

#include <sstream>

#include "noether/error.hpp"
#include "noether/report.hpp"
#include "noether_cli/cli.hpp"
#include "noether_cli/suites.hpp"

using namespace noether;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(NOETHER_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"sylow", "-p", "3"}).code, 2);
  EXPECT_EQ(run({"sylow", "-p", "4", "-n", "4"}).code, 2);
  EXPECT_EQ(run({"verify", "case", "7.7"}).code, 2);
  EXPECT_EQ(run({"verify", "case", "3.2", "--char", "3"}).code, 2);
  EXPECT_EQ(run({"group", "degree=3; (1,4)"}).code, 2);
  EXPECT_EQ(run({"character"}).code, 2);
  EXPECT_EQ(run({"invariants", "wreath", "--spec", data("bad_degree.json")}).code, 2);
  EXPECT_EQ(run({"invariants", "wreath", "--spec", data("missing.json")}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, CatalogList) {
  Result r = run({"catalog", "list", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["data"]["entries"].size(), 16u);
  EXPECT_EQ(j["data"]["entries"][12]["order"], 120);
  Result text = run({"catalog", "list"});
  EXPECT_NE(text.out.find("G13  order 120"), std::string::npos);
}

TEST(Cli, SylowCheck) {
  Result r = run({"sylow", "-p", "3", "-n", "9", "--check", "--json"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["data"]["order"], 81);
  EXPECT_EQ(j["claims"].size(), 3u);
  Result text = run({"sylow", "-p", "2", "-n", "4"});
  EXPECT_NE(text.out.find("order 8"), std::string::npos);
}

TEST(Cli, WreathAndGroup) {
  EXPECT_EQ(run({"wreath", "--g", "S3", "--h", "S2", "--expect", "G4"}).code, 0);
  EXPECT_EQ(run({"wreath", "--g", "S3", "--h", "S2", "--expect", "G5"}).code, 1);
  Result g = run({"group", "G13"});
  EXPECT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("order 120, transitive"), std::string::npos);
}

TEST(Cli, VerifyCase) {
  Result r = run({"verify", "case", "3.2", "--char", "2", "--json"});
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["case"], "case3.2");
  EXPECT_TRUE(j["oracle_runs"].is_array());
  for (const auto& c : j["claims"]) {
    EXPECT_TRUE(c.contains("kind"));
    EXPECT_TRUE(c.contains("statement"));
    EXPECT_TRUE(c.contains("status"));
    EXPECT_TRUE(c.contains("detail"));
    EXPECT_TRUE(c.contains("anchor"));
  }
  EXPECT_EQ(run({"verify", "case", "3.2", "--negative-control"}).code, 1);
}

TEST(Cli, VerifyRho) {
  EXPECT_EQ(run({"verify", "rho"}).code, 0);
  EXPECT_EQ(run({"verify", "rho", "--negative-control"}).code, 1);
  EXPECT_EQ(run({"character", "--id", "G13"}).code, 0);
  EXPECT_EQ(run({"character", "--all", "--json"}).code, 0);
}

TEST(Cli, InvariantSpecs) {
  Result ex = run({"invariants", "wreath", "--spec", data("example_wreath.json"), "--json"});
  ASSERT_EQ(ex.code, 0) << ex.out << ex.err;
  auto j = nlohmann::json::parse(ex.out);
  EXPECT_EQ(j["data"]["generators"].size(), 14u);
  EXPECT_EQ(j["data"]["group_order"], 18);
  EXPECT_EQ(run({"invariants", "wreath", "--spec", data("example_wreath.json"), "--negative-control"}).code, 1);
  EXPECT_EQ(run({"invariants", "wreath", "--spec", data("example_wreath.json"), "--char", "4"}).code, 2);
  Result d4 = run({"invariants", "wreath", "--spec", data("dihedral_wreath.json"), "--max-degree", "5"});
  EXPECT_EQ(d4.code, 0) << d4.out << d4.err;
}

TEST(Cli, VerifyAllIsDeterministicAndRoundTrips) {
  Result a = run({"verify", "all", "--json"});
  Result b = run({"verify", "all", "--json"});
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  Report r = report_from_json(j);
  EXPECT_EQ(to_json(r).dump(2) + "\n", a.out);
  for (std::size_t i = 1; i < r.claims.size(); ++i) EXPECT_LT(r.claims[i - 1].id, r.claims[i].id);
  EXPECT_EQ(r.count(Status::fail), 0u);
  EXPECT_EQ(run({"verify", "all", "--negative-control"}).code, 1);
}

TEST(Suites, ResolveGroup) {
  EXPECT_EQ(cli::resolve_group("S4").order(), 24u);
  EXPECT_EQ(cli::resolve_group("C5").order(), 5u);
  EXPECT_EQ(cli::resolve_group("g12").order(), 18u);
  EXPECT_EQ(cli::resolve_group("degree=3; (1,2)").order(), 2u);
  EXPECT_THROW(cli::resolve_group("Q8"), ParseError);
}

TEST(Suites, ClassicalSylowGenerators) {
  auto g = cli::classical_sylow_generators(3);
  EXPECT_EQ(g[0].to_string(), "(1,4,7)");
  EXPECT_EQ(g[1].to_string(), "(1,2,3)(4,5,6)(7,8,9)");
}

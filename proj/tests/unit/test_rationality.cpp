#include <gtest/gtest.h>

#include <map>

#include "noether/case_script.hpp"
#include "noether/error.hpp"
#include "noether/oracles.hpp"
#include "noether/parse.hpp"
#include "noether/rationality.hpp"

using namespace noether;

namespace {

nlohmann::json small_script() {
  return nlohmann::json::parse(R"json({
    "id": "swap",
    "title": "S2 on two variables",
    "characteristic": {"rule": "any", "default": 0},
    "base_vars": ["x1", "x2"],
    "actions": [["tau", "(1,2)"]],
    "defs": [["s", "x1+x2"], ["p", "x1*x2"], ["r", "x1/x2"]],
    "claims": [
      {"kind": "table", "action": "tau", "images": [["r", "1/r"]]},
      {"kind": "invariance", "symbols": ["s", "p"], "actions": ["tau"]},
      {"kind": "invariance", "symbols": ["r"], "actions": ["tau"], "expected": false},
      {"kind": "identity", "lhs": "s^2 - 4*p", "rhs": "(x1-x2)^2"},
      {"kind": "relation", "word": "tau^2", "on": ["x1", "x2"]}
    ]
  })json");
}

std::map<Status, std::size_t> tally(const Report& r) {
  std::map<Status, std::size_t> t;
  for (const auto& c : r.claims) ++t[c.status];
  return t;
}

}  // namespace

TEST(Words, Parsing) {
  auto w = parse_word("lambda2^-1*sigma*(tau*sigma)^2");
  std::vector<Letter> want{{"lambda2", true}, {"sigma", false}, {"tau", false}, {"sigma", false}, {"tau", false}, {"sigma", false}};
  EXPECT_EQ(w, want);
  auto inv = parse_word("(tau*sigma)^-1");
  EXPECT_EQ(inv, (std::vector<Letter>{{"sigma", true}, {"tau", true}}));
  EXPECT_THROW(parse_word("sigma*"), ParseError);
  EXPECT_THROW(parse_word("(sigma"), ParseError);
  EXPECT_THROW(parse_word(""), ParseError);
}

TEST(Words, ElementarySymmetricValues) {
  ExprParser p(Field(), VarList::indexed("x", 2));
  auto e = elementary_symmetric_values({p.parse("x1"), p.parse("x2")});
  ASSERT_EQ(e.size(), 3u);
  EXPECT_EQ(e[0], p.parse("1"));
  EXPECT_EQ(e[1], p.parse("x1 + x2"));
  EXPECT_EQ(e[2], p.parse("x1*x2"));
}

TEST(CaseScript, ValidationAndRoundTrip) {
  CaseScript s = case_script_from_json(small_script());
  EXPECT_EQ(s.defs.size(), 3u);
  CaseScript again = case_script_from_json(to_json(s));
  EXPECT_EQ(to_json(again), to_json(s));

  auto bad = small_script();
  bad["defs"].push_back({"s", "x1"});
  EXPECT_THROW(case_script_from_json(bad), ParseError);
  bad = small_script();
  bad["defs"][0][1] = "q + 1";
  EXPECT_THROW(case_script_from_json(bad), ParseError);
  bad = small_script();
  bad["claims"].push_back({{"kind", "magic"}});
  EXPECT_THROW(case_script_from_json(bad), ParseError);
  bad = small_script();
  bad["actions"][0][1] = "(1,2";
  EXPECT_THROW(case_script_from_json(bad), ParseError);
}

TEST(CaseScript, BuiltinIds) {
  const auto& ids = builtin_case_ids();
  EXPECT_EQ(ids.size(), 9u);
  EXPECT_EQ(normalize_case_id("3.2"), "case3.2");
  EXPECT_EQ(normalize_case_id("case3.2"), "case3.2");
  EXPECT_THROW(normalize_case_id("3.7"), DomainError);
  for (const auto& id : ids) EXPECT_EQ(load_case(id).id, id);
}

TEST(Verifier, SmallScript) {
  Report r = verify_case(case_script_from_json(small_script()));
  EXPECT_EQ(r.case_id, "swap");
  EXPECT_EQ(r.count(Status::fail), 0u) << to_text(r);
  EXPECT_EQ(r.claims.size(), 6u);
}

TEST(Verifier, WrongClaimsFail) {
  auto j = small_script();
  j["claims"][0]["images"][0][1] = "r";
  j["claims"][3]["rhs"] = "(x1+x2)^2";
  Report r = verify_case(case_script_from_json(j));
  EXPECT_EQ(r.count(Status::fail), 2u) << to_text(r);
  EXPECT_EQ(r.exit_code(), 1);
}

TEST(Verifier, CharacteristicRule) {
  EXPECT_THROW(verify_case("3.2", VerifyOptions{.characteristic = 3}), DomainError);
  EXPECT_THROW(verify_case("3.1", VerifyOptions{.characteristic = 2}), DomainError);
  EXPECT_NO_THROW(verify_case("3.1", VerifyOptions{.characteristic = 5}));
}

TEST(Verifier, BuiltinCasesPass) {
  for (const auto& id : builtin_case_ids()) {
    Report r = verify_case(id);
    EXPECT_EQ(r.count(Status::fail), 0u) << id << "\n" << to_text(r);
    EXPECT_EQ(r.count(Status::inconclusive), 0u) << id;
    EXPECT_FALSE(r.claims.empty());
    for (const auto& c : r.claims) {
      EXPECT_EQ(c.id.rfind(id + ":", 0), 0u) << c.id;
      EXPECT_EQ(c.anchor.rfind(id + ":", 0), 0u) << c.anchor;
    }
  }
}

TEST(Verifier, CubicTowerCertifiesDegreeSix) {
  Report r = verify_case("3.2");
  bool found = false;
  for (const auto& c : r.claims) {
    if (c.kind == "tower" && c.status == Status::certified_modulo_cited_theorem && c.detail.find("tower bound 6") != std::string::npos) {
      found = true;
    }
  }
  EXPECT_TRUE(found) << to_text(r);
}

TEST(Verifier, OracleClaimsAreInconclusiveInPositiveCharacteristic) {
  Report r = verify_case("4.1", VerifyOptions{.characteristic = 5});
  auto t = tally(r);
  EXPECT_EQ(t[Status::fail], 0u) << to_text(r);
  EXPECT_GE(t[Status::inconclusive], 2u);
}

TEST(Verifier, Deterministic) {
  VerifyOptions o;
  o.seed = 9;
  EXPECT_EQ(to_json(verify_case("4.1", o)).dump(), to_json(verify_case("4.1", o)).dump());
  Report r = verify_case("4.1", o);
  EXPECT_EQ(r.seed, 9u);
  EXPECT_EQ(to_json(report_from_json(to_json(r))).dump(), to_json(r).dump());
}

TEST(Oracles, FiberCountOfSymmetricFunctions) {
  ExprParser p(Field(), VarList::indexed("x", 3));
  std::vector<RatFunc> maps{p.parse("x1+x2+x3"), p.parse("x1*x2+x1*x3+x2*x3"), p.parse("x1*x2*x3")};
  FiberCountResult f = generic_fiber_count(maps, 101, 10, 0);
  EXPECT_EQ(f.modal_count, 6u);
  EXPECT_GE(f.modal_frequency, 7u);
  EXPECT_EQ(f.counts.size(), 10u);
  EXPECT_EQ(generic_fiber_count(maps, 101, 10, 0).counts, f.counts);
  std::vector<RatFunc> four{maps[0], maps[1], maps[2], maps[0]};
  EXPECT_THROW(generic_fiber_count(four, 101, 10, 0), DomainError);
}

TEST(Oracles, Jacobian) {
  ExprParser p(Field(), VarList::indexed("x", 3));
  std::vector<RatFunc> indep{p.parse("x1+x2+x3"), p.parse("x1*x2+x1*x3+x2*x3"), p.parse("x1*x2*x3")};
  JacobianResult j = jacobian_independence(indep, 0);
  EXPECT_EQ(j.verdict, Independence::independent);
  EXPECT_EQ(j.rank, 3u);
  std::vector<RatFunc> dep{p.parse("x1+x2"), p.parse("(x1+x2)^2"), p.parse("x3")};
  EXPECT_NE(jacobian_independence(dep, 0).verdict, Independence::independent);
}

TEST(Report, StatusText) {
  for (Status s : {Status::pass, Status::fail, Status::certified_modulo_cited_theorem, Status::inconclusive}) {
    EXPECT_EQ(status_from_string(to_string(s)), s);
  }
  EXPECT_EQ(to_string(Status::certified_modulo_cited_theorem), "certified-modulo-cited-theorem");
  EXPECT_THROW(status_from_string("maybe"), ParseError);
}

// One line per acceptance criterion; exit status 1 if any line fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "noether/case_script.hpp"
#include "noether/catalog.hpp"
#include "noether/character.hpp"
#include "noether/oracles.hpp"
#include "noether/parse.hpp"
#include "noether/rationality.hpp"
#include "noether_cli/suites.hpp"
#include "properties.hpp"

using namespace noether;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::size_t count_prefix(const Report& r, const std::string& prefix) {
  std::size_t n = 0;
  for (const auto& c : r.claims) n += c.id.rfind(prefix, 0) == 0;
  return n;
}

bool has_passing(const Report& r, const std::string& id) {
  for (const auto& c : r.claims) {
    if (c.id == id) return c.status == Status::pass;
  }
  return false;
}

std::string failures(const Report& r) {
  std::string out;
  for (const auto& c : r.claims) {
    if (c.status == Status::fail) out += (out.empty() ? "" : ", ") + c.id;
  }
  return out;
}

Outcome catalog_suite() {
  Outcome o;
  Report r = cli::catalog_report();
  o.require(r.ok(), "failing: " + failures(r));
  o.require(catalog().size() == 16, "catalog size");
  o.require(count_prefix(r, "catalog:G") == 16 * 2 + 4, "expected 36 per-entry claims");
  o.require(has_passing(r, "catalog:nonconjugate"), "non-conjugacy");
  for (const char* id : {"G5", "G7", "G10", "G14"}) o.require(has_passing(r, std::string("catalog:") + id + ":even-part"), id);
  o.require(catalog_entry("G13").order == 120, "|G13| = 120");
  if (o.ok) o.detail = std::to_string(r.claims.size()) + " claims";
  return o;
}

Outcome wreath_sylow_suite() {
  Outcome o;
  Report w = cli::wreath_fixtures_report();
  Report s = cli::sylow_fixtures_report();
  o.require(w.ok() && s.ok(), "failing: " + failures(w) + " " + failures(s));
  o.require(count_prefix(w, "wreath:") == 5 + 3, "five order claims and three conjugacy claims");
  for (const char* id : {"wreath:S2-wr-S3:conjugate", "wreath:C3-wr-C2:conjugate", "wreath:S3-wr-C2:conjugate"}) {
    o.require(has_passing(w, id), id);
  }
  for (const char* id : {"sylow:2:4:order", "sylow:2:6:order", "sylow:3:9:order", "sylow:2:8:order", "sylow:3:9:classical"}) {
    o.require(has_passing(s, id), id);
  }
  if (o.ok) o.detail = std::to_string(w.claims.size() + s.claims.size()) + " claims";
  return o;
}

Outcome example_suite() {
  Outcome o;
  Report r = cli::example_wreath_report(6);
  o.require(r.ok(), "failing: " + failures(r));
  o.require(count_prefix(r, "example:pipeline:degree:") == 7, "pipeline degrees 0..6");
  o.require(count_prefix(r, "example:published:") == 14 + 1 + 7, "published generators");
  o.require(has_passing(r, "example:control"), "negative control");
  if (o.ok) o.detail = "degrees 0..6 over F7, control fails at degree 5";
  return o;
}

Outcome polarization_suite() {
  Outcome o;
  Report r = cli::polarization_report();
  o.require(r.ok(), "failing: " + failures(r));
  for (const char* id : {"polarization:f2:m2", "polarization:f2:m3", "polarization:counts", "polarization:specialization"}) {
    o.require(has_passing(r, id), id);
  }
  o.require(count_prefix(r, "polarization:vector-invariants:degree:") == 7, "vector invariants to degree 6");
  return o;
}

Outcome rationality_suite() {
  Outcome o;
  const std::set<std::string> kinds{"table", "invariance", "tower"};
  std::size_t checked = 0;
  for (const char* id : {"case2", "case3.1", "case3.2", "case4.1", "case4.2", "case5.1", "case5.2", "thm31-step5"}) {
    Report r = verify_case(id);
    o.require(r.ok(), std::string(id) + " failing: " + failures(r));
    for (const auto& c : r.claims) {
      if (!kinds.count(c.kind)) continue;
      ++checked;
      o.require(c.status == Status::pass || (c.kind == "tower" && c.status == Status::certified_modulo_cited_theorem),
                c.id + " is " + to_string(c.status));
    }
    if (std::string(id) == "case3.2") {
      bool bound = false;
      for (const auto& c : r.claims) {
        bound = bound || (c.kind == "tower" && c.status == Status::certified_modulo_cited_theorem &&
                          c.detail.find("tower bound 6") != std::string::npos);
      }
      o.require(bound, "case3.2 cubic tower does not certify the bound 6");
    }
  }
  ExprParser p(Field(), VarList::indexed("x", 3));
  std::vector<RatFunc> maps{p.parse("x1+x2+x3"), p.parse("x1*x2+x1*x3+x2*x3"), p.parse("x1*x2*x3")};
  FiberCountResult f = generic_fiber_count(maps, 101, 10, 0);
  o.require(f.modal_count == 6 && f.modal_frequency >= 7,
            "fiber modal " + std::to_string(f.modal_count) + " in " + std::to_string(f.modal_frequency) + "/10");
  if (o.ok) {
    o.detail = std::to_string(checked) + " table/invariance/tower claims; fiber 6 in " + std::to_string(f.modal_frequency) + "/10 at p = 101";
  }
  return o;
}

Outcome embedding_suite() {
  Outcome o;
  Report r = cli::embedding_fixtures_report();
  o.require(r.ok(), "failing: " + failures(r));
  for (const auto& e : catalog()) {
    o.require(has_passing(r, "embedding:" + e.id + ":equivariant") && has_passing(r, "embedding:" + e.id + ":injective"), e.id);
  }
  o.require(has_passing(r, "embedding:control"), "intransitive control accepted");
  return o;
}

Outcome character_suite() {
  Outcome o;
  Report rho = cli::rho_report(false);
  Report chars = cli::characters_report();
  o.require(rho.ok(), "failing: " + failures(rho));
  o.require(chars.ok(), "failing: " + failures(chars));
  o.require(count_prefix(rho, "rho:relation:") == 10, "ten relations");
  for (const char* id : {"rho:image:order", "rho:image:g13", "rho:image:g14", "character:G13:0-inner-products",
                         "character:G14:0-inner-products"}) {
    o.require(has_passing(rho, id) || has_passing(chars, id), id);
  }
  for (const auto& e : catalog()) o.require(has_passing(chars, "character:" + e.id + ":1-trivial"), e.id + " Burnside count");
  return o;
}

Outcome property_suite() {
  Outcome o;
  auto check = [&](const char* name, const noether::testing::PropertyResult& r, std::size_t min_trials) {
    o.require(r.ok(), std::string(name) + ": " + std::to_string(r.failures) + " failures, first " + r.first_failure);
    o.require(r.trials >= min_trials, std::string(name) + ": only " + std::to_string(r.trials) + " trials");
    return r.trials;
  };
  std::size_t a = check("group axioms", noether::testing::group_axioms(100, 1), 100);
  std::size_t b = check("reynolds", noether::testing::reynolds_properties(100, 2), 100);
  std::size_t c = check("molien", noether::testing::molien_vs_orbits(6), 16 * 7);
  std::size_t d = check("substitution", noether::testing::substitution_homomorphism(100, 3), 100);
  if (o.ok) {
    o.detail = std::to_string(a) + " + " + std::to_string(b) + " + " + std::to_string(c) + " + " + std::to_string(d) + " checks";
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "catalog", 60, catalog_suite},
      {2, "wreath and sylow", 60, wreath_sylow_suite},
      {3, "wreath invariant ring example over F7", 300, example_suite},
      {4, "polarization", 60, polarization_suite},
      {5, "rationality scripts", 60, rationality_suite},
      {6, "regular embedding", 60, embedding_suite},
      {7, "characters", 30, character_suite},
      {8, "randomized properties", 300, property_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs < c.limit_seconds;
    bool ok = o.ok && in_time;
    if (!ok) ++failed;
    std::printf("criterion %d %-40s %s  %.2fs (limit %.0fs)%s%s\n", c.number, c.name, ok ? "PASS" : "FAIL", secs, c.limit_seconds,
                o.detail.empty() ? "" : "  ", o.detail.c_str());
  }
  std::printf("%d of 8 criteria passed\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}

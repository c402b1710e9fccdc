#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "noether/invariants.hpp"
#include "noether/linear_action.hpp"
#include "noether/perm_group.hpp"
#include "noether/rationality.hpp"
#include "noether/report.hpp"

namespace noether::cli {

/// "degree=6; (1,2,3)(4,5,6) (1,4)", a catalog id "G5", or "S<n>" / "C<n>".
PermGroup resolve_group(const std::string& text);

/// Orders, transitivity, pairwise non-conjugacy and the index-2 intersections with A6.
Report catalog_report();

/// Order |H|^m |G| and, when given, conjugacy in S_mn to a catalog entry.
Report wreath_report(const std::string& g, const std::string& h, const std::optional<std::string>& expect_conjugate = {});
/// The fixed wreath fixtures (S2 wr S3, C3 wr C2, S3 wr C2, C2 wr C3, C2 wr C2).
Report wreath_fixtures_report();

/// Explicit generators of C_p wr C_p on p^2 points: (1, 1+p, ..., 1+(p-1)p) and the product of the p block cycles.
std::vector<Permutation> classical_sylow_generators(std::uint64_t p);
Report sylow_report(std::uint64_t p, std::size_t n, bool check);
Report sylow_fixtures_report();

Report embedding_report(const PermGroup& g, const std::string& name);
/// All catalog entries plus the intransitive control <(1,2)>, which must be rejected.
Report embedding_fixtures_report();
Report product_embedding_report(const PermGroup& a, const PermGroup& b);

/// The three polarized forms of e_2 for N = 2, counts, specialization, S2 vector invariants.
Report polarization_report();

/// A wreath invariant-ring problem as read from a spec file.
struct WreathProblem {
  std::size_t m = 0, n = 0, N = 0;
  Field field;
  PermGroup g = PermGroup::trivial(1);
  std::optional<LinearAction> h;
  std::vector<MultiPoly> F;      // generators of k[y]^H in n variables
  std::vector<MultiPoly> Hgens;  // generators of k[X]^G in m*N variables
  std::vector<std::string> claimed;  // optional explicit generator list in x variables
  VarList xvars;
  std::map<std::string, Scalar> constants;
};

/// Throws ParseError on malformed input. `characteristic` overrides the file's field.
WreathProblem wreath_problem_from_json(const nlohmann::json& j, std::optional<std::uint64_t> characteristic = {});
WreathProblem load_wreath_problem(const std::string& path, std::optional<std::uint64_t> characteristic = {});
/// The example S2 wr <diag(1, w, w^2)> on 6 variables over F7 with w = 2, with its published generator list.
const nlohmann::json& example_wreath_problem();

struct InvariantsOptions {
  int max_degree = kDefaultMaxDegree;
  /// Drop the last claimed (or generated) generator.
  bool negative_control = false;
};

/// Runs the pipeline (or the claimed list) through verify_invariant_generators, one claim per degree.
Report invariants_report(const WreathProblem& p, const InvariantsOptions& opts);
/// The example problem: pipeline, each published generator, the published list, and the one-generator-short control.
Report example_wreath_report(int max_degree = kDefaultMaxDegree);

Report molien_report(const PermGroup& g, int max_degree);

Report rho_report(bool negative_control = false);
Report characters_report();

struct AllOptions {
  VerifyOptions verify;
  bool negative_control = false;
};
Report verify_all(const AllOptions& opts);

}  // namespace noether::cli

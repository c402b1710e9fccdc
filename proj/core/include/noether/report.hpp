#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace noether {

enum class Status { pass, fail, certified_modulo_cited_theorem, inconclusive };

std::string to_string(Status s);
/// Throws ParseError on unknown text.
Status status_from_string(std::string_view s);

struct Claim {
  std::string id;
  std::string kind;
  std::string statement;
  /// Stable locator of the checked statement, e.g. "case3.2:sigma(z1)".
  std::string anchor;
  Status status = Status::pass;
  std::string detail;

  friend bool operator==(const Claim&, const Claim&) = default;
};

struct Report {
  std::string command;
  /// Id of the verified case script, empty for other reports.
  std::string case_id;
  std::uint64_t seed = 0;
  std::vector<Claim> claims;
  nlohmann::json oracle_runs = nlohmann::json::array();
  /// Constructed objects (generator lists, tables) for commands that build things.
  nlohmann::json data;

  void add(Claim c) { claims.push_back(std::move(c)); }
  void merge(const Report& other);
  /// Canonical order: by claim id.
  void sort();
  std::size_t count(Status s) const;
  bool ok() const { return count(Status::fail) == 0; }
  /// 0 iff no claim failed, otherwise 1.
  int exit_code() const { return ok() ? 0 : 1; }
};

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
/// One line per claim plus a summary line.
std::string to_text(const Report& r);

}  // namespace noether

#include "noether/report.hpp"

#include <algorithm>
#include <sstream>

#include "noether/error.hpp"

namespace noether {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::certified_modulo_cited_theorem:
      return "certified-modulo-cited-theorem";
    case Status::inconclusive:
      return "inconclusive";
  }
  return "fail";
}

Status status_from_string(std::string_view s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "certified-modulo-cited-theorem") return Status::certified_modulo_cited_theorem;
  if (s == "inconclusive") return Status::inconclusive;
  throw ParseError("unknown status '" + std::string(s) + "'");
}

void Report::merge(const Report& other) {
  claims.insert(claims.end(), other.claims.begin(), other.claims.end());
  for (const auto& run : other.oracle_runs) oracle_runs.push_back(run);
}

void Report::sort() {
  std::stable_sort(claims.begin(), claims.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(claims.begin(), claims.end(), [s](const Claim& c) { return c.status == s; }));
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : r.claims) {
    claims.push_back({{"id", c.id},
                      {"kind", c.kind},
                      {"statement", c.statement},
                      {"anchor", c.anchor},
                      {"status", to_string(c.status)},
                      {"detail", c.detail}});
  }
  nlohmann::json out{{"command", r.command},
                     {"seed", r.seed},
          {"claims", claims},
          {"oracle_runs", r.oracle_runs},
          {"summary",
           {{"pass", r.count(Status::pass)},
            {"fail", r.count(Status::fail)},
            {"certified-modulo-cited-theorem", r.count(Status::certified_modulo_cited_theorem)},
            {"inconclusive", r.count(Status::inconclusive)}}},
          {"exit_code", r.exit_code()}};
  if (!r.case_id.empty()) out["case"] = r.case_id;
  if (!r.data.is_null()) out["data"] = r.data;
  return out;
}

Report report_from_json(const nlohmann::json& j) {
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.case_id = j.value("case", "");
    if (j.contains("data")) r.data = j["data"];
    for (const auto& c : j.at("claims")) {
      r.claims.push_back(Claim{c.at("id").get<std::string>(), c.at("kind").get<std::string>(),
                               c.at("statement").get<std::string>(), c.at("anchor").get<std::string>(),
                               status_from_string(c.at("status").get<std::string>()), c.at("detail").get<std::string>()});
    }
    r.oracle_runs = j.value("oracle_runs", nlohmann::json::array());
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  for (const auto& c : r.claims) {
    os << '[' << to_string(c.status) << "] " << c.id << "  " << c.statement;
    if (!c.detail.empty()) os << "  -- " << c.detail;
    os << '\n';
  }
  os << r.claims.size() << " claims: " << r.count(Status::pass) << " pass, " << r.count(Status::fail) << " fail, "
     << r.count(Status::certified_modulo_cited_theorem) << " certified-modulo-cited-theorem, "
     << r.count(Status::inconclusive) << " inconclusive (seed " << r.seed << ")\n";
  return os.str();
}

}  // namespace noether

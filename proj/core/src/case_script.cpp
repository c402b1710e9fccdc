#include "noether/case_script.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "noether/error.hpp"
#include "noether/parse.hpp"
#include "noether/permutation.hpp"

namespace noether {

bool CharacteristicRule::allows(std::uint64_t c) const {
  bool listed = std::find(values.begin(), values.end(), c) != values.end();
  switch (kind) {
    case Kind::any:
      return true;
    case Kind::equal:
      return listed;
    case Kind::not_in:
      return !listed;
  }
  return false;
}

std::string CharacteristicRule::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::any:
      return "any characteristic";
    case Kind::equal:
      os << "char = ";
      break;
    case Kind::not_in:
      os << "char not in ";
      break;
  }
  if (values.size() == 1 && kind == Kind::equal) {
    os << values[0];
  } else {
    os << '{';
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? ", " : "") << values[i];
    os << '}';
  }
  return os.str();
}

const std::vector<std::string>& claim_kinds() {
  static const std::vector<std::string> kinds{"table",  "invariance", "identity",     "tower",
                                              "relation", "monomial", "birational",  "catalog",
                                              "independence", "fiber", "cited"};
  return kinds;
}

namespace {

std::vector<NamedText> named_pairs(const nlohmann::json& j, const std::string& field) {
  std::vector<NamedText> out;
  if (!j.is_array()) throw ParseError("'" + field + "' must be an array of [name, text] pairs");
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string()) {
      throw ParseError("'" + field + "' entries must be [name, text] pairs, got " + item.dump());
    }
    out.push_back({item[0].get<std::string>(), item[1].get<std::string>()});
  }
  return out;
}

nlohmann::json named_pairs_json(const std::vector<NamedText>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : v) out.push_back({p.name, p.text});
  return out;
}

}  // namespace

CaseScript case_script_from_json(const nlohmann::json& j) {
  CaseScript s;
  try {
    s.id = j.at("id").get<std::string>();
    s.title = j.value("title", "");
    if (s.id.empty()) throw ParseError("script id is empty");

    const auto& ch = j.at("characteristic");
    std::string rule = ch.at("rule").get<std::string>();
    if (rule == "any") {
      s.characteristic.kind = CharacteristicRule::Kind::any;
    } else if (rule == "eq") {
      s.characteristic.kind = CharacteristicRule::Kind::equal;
    } else if (rule == "ne") {
      s.characteristic.kind = CharacteristicRule::Kind::not_in;
    } else {
      throw ParseError("characteristic rule must be any, eq or ne, got '" + rule + "'");
    }
    s.characteristic.values = ch.value("values", std::vector<std::uint64_t>{});
    s.characteristic.default_characteristic = ch.value("default", std::uint64_t{0});
    if (!s.characteristic.allows(s.characteristic.default_characteristic)) {
      throw ParseError("default characteristic violates the script's own rule");
    }

    s.base_vars = j.at("base_vars").get<std::vector<std::string>>();
    s.actions = named_pairs(j.at("actions"), "actions");
    s.defs = named_pairs(j.value("defs", nlohmann::json::array()), "defs");
    if (j.contains("coordinates")) {
      Coordinates c;
      c.symbols = j["coordinates"].at("symbols").get<std::vector<std::string>>();
      c.inverse = named_pairs(j["coordinates"].at("inverse"), "coordinates.inverse");
      s.coordinates = std::move(c);
    }
    for (const auto& c : j.at("claims")) {
      std::string kind = c.at("kind").get<std::string>();
      const auto& kinds = claim_kinds();
      if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) throw ParseError("unknown claim kind '" + kind + "'");
      s.claims.push_back({kind, c});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed case script: " + std::string(e.what()));
  }

  // Names: base variables, then definitions, all distinct.
  std::vector<std::string> names = s.base_vars;
  VarList base(s.base_vars);
  for (const auto& a : s.actions) {
    try {
      Permutation::parse(a.text, s.base_vars.size());
    } catch (const Error& e) {
      throw ParseError("action '" + a.name + "': " + e.what());
    }
  }
  // Definitions may only use earlier symbols; parsing over the default field proves it.
  Field field = Field::of_characteristic(s.characteristic.default_characteristic);
  for (const auto& d : s.defs) {
    if (std::find(names.begin(), names.end(), d.name) != names.end()) throw ParseError("symbol '" + d.name + "' defined twice");
    try {
      ExprParser(field, VarList(names)).parse(d.text);
    } catch (const Error& e) {
      throw ParseError("definition of '" + d.name + "': " + e.what());
    }
    names.push_back(d.name);
  }
  if (s.coordinates) {
    VarList all(names);
    std::set<std::string> covered;
    for (const auto& sym : s.coordinates->symbols) {
      if (!all.index_of(sym)) throw ParseError("coordinate symbol '" + sym + "' is not defined");
      covered.insert(sym);
    }
    VarList coord(s.coordinates->symbols);
    for (const auto& inv : s.coordinates->inverse) {
      if (!base.index_of(inv.name)) throw ParseError("inverse given for '" + inv.name + "', which is not a base variable");
      if (!covered.insert(inv.name).second) throw ParseError("base variable '" + inv.name + "' covered twice");
      try {
        ExprParser(field, coord).parse(inv.text);
      } catch (const Error& e) {
        throw ParseError("inverse of '" + inv.name + "': " + e.what());
      }
    }
    for (const auto& b : s.base_vars) {
      if (!covered.count(b)) throw ParseError("coordinates do not determine base variable '" + b + "'");
    }
  }
  return s;
}

nlohmann::json to_json(const CaseScript& s) {
  nlohmann::json ch;
  switch (s.characteristic.kind) {
    case CharacteristicRule::Kind::any:
      ch["rule"] = "any";
      break;
    case CharacteristicRule::Kind::equal:
      ch["rule"] = "eq";
      break;
    case CharacteristicRule::Kind::not_in:
      ch["rule"] = "ne";
      break;
  }
  ch["values"] = s.characteristic.values;
  ch["default"] = s.characteristic.default_characteristic;
  nlohmann::json j{{"id", s.id},
                   {"title", s.title},
                   {"characteristic", ch},
                   {"base_vars", s.base_vars},
                   {"actions", named_pairs_json(s.actions)},
                   {"defs", named_pairs_json(s.defs)}};
  if (s.coordinates) {
    j["coordinates"] = {{"symbols", s.coordinates->symbols}, {"inverse", named_pairs_json(s.coordinates->inverse)}};
  }
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : s.claims) claims.push_back(c.args);
  j["claims"] = claims;
  return j;
}

CaseScript load_case_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open case script " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return case_script_from_json(j);
}

std::string normalize_case_id(std::string_view id) {
  std::string s(id);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  const auto& ids = builtin_case_ids();
  if (std::find(ids.begin(), ids.end(), s) != ids.end()) return s;
  if (std::find(ids.begin(), ids.end(), "case" + s) != ids.end()) return "case" + s;
  throw DomainError("unknown case '" + std::string(id) + "'");
}

CaseScript load_case(std::string_view id) {
  std::string_view src = builtin_case_source(normalize_case_id(id));
  return case_script_from_json(nlohmann::json::parse(src));
}

}  // namespace noether

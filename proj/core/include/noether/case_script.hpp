#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace noether {

/// Which characteristics a script is valid in.
struct CharacteristicRule {
  enum class Kind { any, equal, not_in };
  Kind kind = Kind::any;
  std::vector<std::uint64_t> values;
  std::uint64_t default_characteristic = 0;

  bool allows(std::uint64_t c) const;
  /// "char = 2", "char not in {2, 3}", "any characteristic".
  std::string describe() const;
};

struct NamedText {
  std::string name;
  std::string text;
};

/// A birational change of variables: the symbols are defined in terms of the base
/// variables, and `inverse` expresses every base variable outside `symbols` through them.
struct Coordinates {
  std::vector<std::string> symbols;
  std::vector<NamedText> inverse;
};

/// One claim; `args` holds the kind-specific fields exactly as written in the script.
struct ScriptClaim {
  std::string kind;
  nlohmann::json args;
};

/// A replayable transcription of a change-of-variables argument:
///   base variables, actions given by permutations of them, ordered definitions of
///   new symbols, an optional coordinate system, and claims about all of these.
struct CaseScript {
  std::string id;
  std::string title;
  CharacteristicRule characteristic;
  std::vector<std::string> base_vars;
  /// label -> permutation of the base variables in cycle notation.
  std::vector<NamedText> actions;
  /// name -> expression in base variables and earlier names.
  std::vector<NamedText> defs;
  std::optional<Coordinates> coordinates;
  std::vector<ScriptClaim> claims;
};

/// Claim kinds understood by the verifier.
const std::vector<std::string>& claim_kinds();

/// Parses and structurally validates a script (unique names, known claim kinds,
/// definitions referring only to earlier symbols, parseable permutations).
/// Throws ParseError with the offending field.
CaseScript case_script_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CaseScript& s);
CaseScript load_case_file(const std::filesystem::path& path);

/// Ids of the built-in scripts in canonical order.
const std::vector<std::string>& builtin_case_ids();
/// "3.2" and "case3.2" both name case3.2. Throws DomainError for unknown ids.
std::string normalize_case_id(std::string_view id);
CaseScript load_case(std::string_view id);
/// Raw JSON text of a built-in script.
std::string_view builtin_case_source(std::string_view id);

}  // namespace noether

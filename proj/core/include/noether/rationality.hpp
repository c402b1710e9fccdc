#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "noether/case_script.hpp"
#include "noether/ratfunc.hpp"
#include "noether/report.hpp"

namespace noether {

struct VerifyOptions {
  /// Field characteristic; the script's default when unset.
  std::optional<std::uint64_t> characteristic;
  /// Prime and trial count for the fiber-count oracle.
  std::uint64_t prime = 101;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  unsigned degree_cap = kDefaultDegreeCap;
};

/// Replays every claim of the script and reports one entry per checked statement.
/// Throws DomainError when the requested characteristic violates the script's rule.
Report verify_case(const CaseScript& script, const VerifyOptions& opts = {});
Report verify_case(std::string_view id, const VerifyOptions& opts = {});

/// A word in action labels: "sigma", "lambda2^-1*sigma*lambda1*sigma^-1", "(tau*sigma)^2".
struct Letter {
  std::string label;
  bool inverse = false;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Expands powers and parentheses into a flat list of letters. Throws ParseError.
std::vector<Letter> parse_word(std::string_view text);

/// Elementary symmetric polynomials e_0..e_r of the given values.
std::vector<RatFunc> elementary_symmetric_values(const std::vector<RatFunc>& values);

}  // namespace noether

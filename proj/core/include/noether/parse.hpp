#pragma once

#include <map>
#include <string>
#include <string_view>

#include "noether/ratfunc.hpp"

namespace noether {

/// Parses arithmetic text such as "3*x1^2*x2 - 1/2*x3" or "y2*y3/y1" over a fixed
/// variable list. Supports + - * / ^ (integer exponents, negative allowed), parentheses,
/// integer literals, and named constants (e.g. w = 2 for a cube root of unity in F7).
class ExprParser {
 public:
  ExprParser(Field field, VarList vars, std::map<std::string, Scalar> constants = {});

  RatFunc parse(std::string_view text) const;
  /// Throws ParseError when the text is not a polynomial.
  MultiPoly parse_poly(std::string_view text) const;

  const Field& field() const { return field_; }
  const VarList& vars() const { return vars_; }

 private:
  Field field_;
  VarList vars_;
  std::map<std::string, Scalar> constants_;
};

}  // namespace noether

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "noether/field.hpp"

namespace noether {

using Exponent = std::vector<std::uint16_t>;

/// Graded reverse lexicographic order, ascending.
struct GrevlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

unsigned total_degree(const Exponent& e);

/// Ordered variable names used for parsing and printing.
class VarList {
 public:
  VarList() = default;
  explicit VarList(std::vector<std::string> names);
  /// prefix1 .. prefixN, e.g. indexed("x", 3) = x1 x2 x3.
  static VarList indexed(const std::string& prefix, std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

 private:
  std::vector<std::string> names_;
};

/// Sparse polynomial over a Field; zero coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, Scalar, GrevlexLess>;

  MultiPoly() = default;
  MultiPoly(Field field, std::size_t nvars) : field_(field), nvars_(nvars) {}

  static MultiPoly constant(Field field, std::size_t nvars, const Scalar& c);
  static MultiPoly variable(Field field, std::size_t nvars, std::size_t index);
  static MultiPoly monomial(Field field, Exponent e, const Scalar& c);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  /// Total degree, -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  std::optional<Scalar> constant_value() const;
  /// Largest term in grevlex order. Requires a nonzero polynomial.
  const std::pair<const Exponent, Scalar>& leading_term() const;

  MultiPoly homogeneous_component(int d) const;
  std::map<int, MultiPoly> homogeneous_components() const;

  /// Adds c * x^e in place.
  void add_term(const Exponent& e, const Scalar& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  MultiPoly scaled(const Scalar& c) const;
  MultiPoly pow(unsigned k) const;

  /// Quotient when d divides this polynomial exactly, otherwise nullopt.
  std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;
  MultiPoly derivative(std::size_t var) const;
  Scalar evaluate(std::span<const Scalar> point) const;

  /// Moves variable i to index map[i] in a ring with new_nvars variables.
  MultiPoly remap(std::size_t new_nvars, std::span<const std::size_t> map) const;
  /// Polynomial composition: variable i replaced by images[i].
  MultiPoly compose(std::span<const MultiPoly> images) const;

  /// Per-variable minimum exponent over all terms.
  Exponent min_exponents() const;
  /// Divides every term by x^e; each term must be divisible.
  MultiPoly shifted_down(const Exponent& e) const;

  std::string to_string(const VarList& vars) const;
  /// Uses x1..xn.
  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const MultiPoly& o) const;

  Field field_;
  std::size_t nvars_ = 0;
  Terms terms_;
};

}  // namespace noether

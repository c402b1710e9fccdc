#pragma once

#include <span>
#include <string>
#include <vector>

#include "noether/poly.hpp"

namespace noether {

/// Default bound on the degree of numerator and denominator produced by substitution.
inline constexpr unsigned kDefaultDegreeCap = 12;

/// Quotient num/den of polynomials. There is no canonical form: arithmetic does
/// cheap cancellations (constants, monomial factors, exact divisibility) and
/// equality is decided by cross-multiplication.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(MultiPoly num);
  /// Throws ZeroDenominator when den is the zero polynomial.
  RatFunc(MultiPoly num, MultiPoly den);

  static RatFunc constant(Field field, std::size_t nvars, const Scalar& c);
  static RatFunc variable(Field field, std::size_t nvars, std::size_t index);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const Field& field() const { return num_.field(); }
  std::size_t nvars() const { return num_.nvars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.constant_value().has_value(); }

  RatFunc inverse() const;
  RatFunc pow(long k) const;
  RatFunc derivative(std::size_t var) const;
  /// Throws ZeroDenominator when the denominator vanishes at the point.
  Scalar evaluate(std::span<const Scalar> point) const;
  RatFunc remap(std::size_t new_nvars, std::span<const std::size_t> map) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const;

  /// "num" when the denominator is 1, otherwise "(num)/(den)".
  std::string to_string(const VarList& vars) const;
  std::string to_string() const;

 private:
  void normalize();

  MultiPoly num_;
  MultiPoly den_;
};

/// a.num * b.den == b.num * a.den.
bool ratfunc_eq(const RatFunc& a, const RatFunc& b);
inline bool operator==(const RatFunc& a, const RatFunc& b) { return ratfunc_eq(a, b); }

/// Ring map given by the image of each variable; images share one target ring.
struct SubstitutionAction {
  std::string label;
  std::vector<RatFunc> images;

  static SubstitutionAction identity(Field field, std::size_t nvars, std::string label = "id");
  /// x_i -> x_{p(i)}, which makes permutation composition a homomorphism.
  static SubstitutionAction from_permutation(Field field, std::span<const std::uint32_t> images_1based, std::string label);
};

/// f(images). Throws ZeroDenominator or CapExceeded when the result's degree exceeds the cap.
RatFunc substitute(const MultiPoly& f, std::span<const RatFunc> images, unsigned degree_cap = kDefaultDegreeCap);
RatFunc substitute(const RatFunc& f, std::span<const RatFunc> images, unsigned degree_cap = kDefaultDegreeCap);
inline RatFunc substitute(const RatFunc& f, const SubstitutionAction& a, unsigned degree_cap = kDefaultDegreeCap) {
  return substitute(f, a.images, degree_cap);
}

/// The action "first inner, then outer": (outer o inner)(f) = outer(inner(f)).
SubstitutionAction compose(const SubstitutionAction& outer, const SubstitutionAction& inner,
                           unsigned degree_cap = kDefaultDegreeCap);

}  // namespace noether

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace noether {

/// Field elements are stored as GMP rationals. Over F_p they are kept as the
/// integer representatives 0..p-1.
using Scalar = mpq_class;

bool is_prime(std::uint64_t n);

/// Q (characteristic 0) or F_p with p < 2^61.
class Field {
 public:
  Field() = default;  // Q

  static Field rationals() { return Field(); }
  /// Throws DomainError unless p is a prime below 2^61.
  static Field prime(std::uint64_t p);
  /// 0 gives Q, otherwise F_c.
  static Field of_characteristic(std::uint64_t c);

  std::uint64_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  /// Maps a rational into the field; over F_p the denominator must be invertible.
  Scalar normalize(const mpq_class& q) const;
  Scalar from_int(long v) const { return normalize(mpq_class(v)); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  Scalar pow(const Scalar& a, long long k) const;

  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }
  bool is_one(const Scalar& a) const { return a == 1; }

  /// Coefficient text: integers or a/b over Q, 0..p-1 over F_p.
  std::string to_string(const Scalar& a) const;

  /// "Q" or "F7".
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

}  // namespace noether

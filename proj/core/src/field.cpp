#include "noether/field.hpp"

#include "noether/error.hpp"

namespace noether {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1u) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1u;
  }
  return r;
}

std::uint64_t residue(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1u;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit inputs.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ull << 61)) throw DomainError("field modulus must be below 2^61");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::of_characteristic(std::uint64_t c) { return c == 0 ? rationals() : prime(c); }

Scalar Field::normalize(const mpq_class& q) const {
  if (p_ == 0) {
    mpq_class r(q);
    r.canonicalize();
    return r;
  }
  std::uint64_t num = residue(q.get_num(), p_);
  std::uint64_t den = residue(q.get_den(), p_);
  if (den == 0) throw DomainError("denominator of " + q.get_str() + " vanishes in " + name());
  std::uint64_t v = mulmod(num, powmod(den, p_ - 2, p_), p_);
  return Scalar(static_cast<unsigned long>(v));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a + b;
  std::uint64_t v = a.get_num().get_ui() + b.get_num().get_ui();
  if (v >= p_) v -= p_;
  return Scalar(static_cast<unsigned long>(v));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a - b;
  std::uint64_t x = a.get_num().get_ui();
  std::uint64_t y = b.get_num().get_ui();
  return Scalar(static_cast<unsigned long>(x >= y ? x - y : x + p_ - y));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a * b;
  return Scalar(static_cast<unsigned long>(mulmod(a.get_num().get_ui(), b.get_num().get_ui(), p_)));
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  std::uint64_t x = a.get_num().get_ui();
  return Scalar(static_cast<unsigned long>(x == 0 ? 0 : p_ - x));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw DomainError("division by zero in " + name());
  if (p_ == 0) return 1 / a;
  return Scalar(static_cast<unsigned long>(powmod(a.get_num().get_ui(), p_ - 2, p_)));
}

Scalar Field::pow(const Scalar& a, long long k) const {
  Scalar base = k < 0 ? inv(a) : a;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Scalar r = 1;
  while (e) {
    if (e & 1u) r = mul(r, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return r;
}

std::string Field::to_string(const Scalar& a) const { return a.get_str(); }

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

}  // namespace noether

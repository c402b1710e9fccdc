#include "noether/ratfunc.hpp"

#include <algorithm>
#include <map>

#include "noether/error.hpp"

namespace noether {

namespace {

bool is_one(const MultiPoly& p) {
  auto c = p.constant_value();
  return c && *c == 1;
}

}  // namespace

RatFunc::RatFunc(MultiPoly num) : num_(std::move(num)), den_(MultiPoly::constant(num_.field(), num_.nvars(), 1)) {}

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (!(num_.field() == den_.field()) || num_.nvars() != den_.nvars()) {
    throw DomainError("numerator and denominator live in different rings");
  }
  normalize();
}

RatFunc RatFunc::constant(Field field, std::size_t nvars, const Scalar& c) {
  return RatFunc(MultiPoly::constant(field, nvars, c));
}

RatFunc RatFunc::variable(Field field, std::size_t nvars, std::size_t index) {
  return RatFunc(MultiPoly::variable(field, nvars, index));
}

void RatFunc::normalize() {
  if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  const Field& f = num_.field();
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(f, num_.nvars(), 1);
    return;
  }
  if (auto c = den_.constant_value()) {
    if (*c != 1) num_ = num_.scaled(f.inv(*c));
    den_ = MultiPoly::constant(f, num_.nvars(), 1);
    return;
  }
  Exponent a = num_.min_exponents();
  Exponent b = den_.min_exponents();
  bool shift = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = std::min(a[i], b[i]);
    shift = shift || a[i] != 0;
  }
  if (shift) {
    num_ = num_.shifted_down(a);
    den_ = den_.shifted_down(a);
  }
  if (auto c = den_.constant_value()) {
    if (*c != 1) num_ = num_.scaled(f.inv(*c));
    den_ = MultiPoly::constant(f, num_.nvars(), 1);
    return;
  }
  if (auto q = num_.divide_exact(den_)) {
    num_ = std::move(*q);
    den_ = MultiPoly::constant(f, num_.nvars(), 1);
    return;
  }
  Scalar lc = den_.leading_term().second;
  if (lc != 1) {
    Scalar k = f.inv(lc);
    num_ = num_.scaled(k);
    den_ = den_.scaled(k);
  }
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw ZeroDenominator("inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  RatFunc out;
  out.num_ = num_.pow(static_cast<unsigned>(k));
  out.den_ = den_.pow(static_cast<unsigned>(k));
  return out;
}

RatFunc RatFunc::derivative(std::size_t var) const {
  MultiPoly n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
  return RatFunc(std::move(n), den_ * den_);
}

Scalar RatFunc::evaluate(std::span<const Scalar> point) const {
  Scalar d = den_.evaluate(point);
  if (Field::is_zero(d)) throw ZeroDenominator("denominator vanishes at the evaluation point");
  return field().div(num_.evaluate(point), d);
}

RatFunc RatFunc::remap(std::size_t new_nvars, std::span<const std::size_t> map) const {
  RatFunc out;
  out.num_ = num_.remap(new_nvars, map);
  out.den_ = den_.remap(new_nvars, map);
  return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  if (is_one(a.den_)) return RatFunc(a.num_ * b.den_ + b.num_, b.den_);
  if (is_one(b.den_)) return RatFunc(a.num_ + b.num_ * a.den_, a.den_);
  if (a.den_.degree() >= b.den_.degree()) {
    if (auto q = a.den_.divide_exact(b.den_)) return RatFunc(a.num_ + b.num_ * *q, a.den_);
  } else {
    if (auto q = b.den_.divide_exact(a.den_)) return RatFunc(a.num_ * *q + b.num_, b.den_);
  }
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc(MultiPoly(a.field(), a.nvars()));
  MultiPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!is_one(ad)) {
    if (auto q = bn.divide_exact(ad)) {
      bn = std::move(*q);
      ad = MultiPoly::constant(a.field(), a.nvars(), 1);
    }
  }
  if (!is_one(bd)) {
    if (auto q = an.divide_exact(bd)) {
      an = std::move(*q);
      bd = MultiPoly::constant(a.field(), a.nvars(), 1);
    }
  }
  return RatFunc(an * bn, ad * bd);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

std::string RatFunc::to_string(const VarList& vars) const {
  if (is_one(den_)) return num_.to_string(vars);
  return "(" + num_.to_string(vars) + ")/(" + den_.to_string(vars) + ")";
}

std::string RatFunc::to_string() const { return to_string(VarList::indexed("x", nvars())); }

bool ratfunc_eq(const RatFunc& a, const RatFunc& b) {
  if (!(a.field() == b.field()) || a.nvars() != b.nvars()) throw DomainError("comparing rational functions from different rings");
  if (a.den() == b.den()) return a.num() == b.num();
  return a.num() * b.den() == b.num() * a.den();
}

SubstitutionAction SubstitutionAction::identity(Field field, std::size_t nvars, std::string label) {
  SubstitutionAction s{std::move(label), {}};
  for (std::size_t i = 0; i < nvars; ++i) s.images.push_back(RatFunc::variable(field, nvars, i));
  return s;
}

SubstitutionAction SubstitutionAction::from_permutation(Field field, std::span<const std::uint32_t> images_1based,
                                                        std::string label) {
  SubstitutionAction s{std::move(label), {}};
  std::size_t n = images_1based.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (images_1based[i] < 1 || images_1based[i] > n) throw DomainError("permutation image out of range");
    s.images.push_back(RatFunc::variable(field, n, images_1based[i] - 1));
  }
  return s;
}

namespace {

void check_cap(const RatFunc& r, unsigned cap) {
  int d = std::max(r.num().degree(), r.den().degree());
  if (d > static_cast<int>(cap)) {
    throw CapExceeded("substitution result has degree " + std::to_string(d) + ", above the cap " + std::to_string(cap));
  }
}

}  // namespace

RatFunc substitute(const MultiPoly& f, std::span<const RatFunc> images, unsigned degree_cap) {
  if (images.size() != f.nvars()) {
    throw DomainError("substitution needs " + std::to_string(f.nvars()) + " images, got " + std::to_string(images.size()));
  }
  if (images.empty()) return RatFunc(f);
  const Field& field = f.field();
  std::size_t target = images[0].nvars();
  for (const auto& im : images) {
    if (im.nvars() != target || !(im.field() == field)) throw DomainError("substitution images live in different rings");
  }

  std::vector<std::size_t> rational;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i].is_polynomial()) rational.push_back(i);
  }
  if (rational.empty()) {
    std::vector<MultiPoly> polys;
    for (const auto& im : images) polys.push_back(im.num());
    RatFunc r(f.compose(polys));
    check_cap(r, degree_cap);
    return r;
  }

  // Terms whose exponents agree on the variables with nontrivial denominators share
  // the denominator prod den_i^e_i, so their numerators are summed as polynomials first.
  std::vector<std::vector<MultiPoly>> num_pow(images.size());
  std::vector<std::vector<MultiPoly>> den_pow(images.size());
  auto power = [&](std::vector<std::vector<MultiPoly>>& cache, std::size_t i, unsigned e, const MultiPoly& base) -> const MultiPoly& {
    auto& pw = cache[i];
    if (pw.empty()) pw.push_back(MultiPoly::constant(field, target, 1));
    while (pw.size() <= e) pw.push_back(pw.back() * base);
    return pw[e];
  };
  std::map<Exponent, MultiPoly> groups;
  for (const auto& [e, c] : f.terms()) {
    MultiPoly term = MultiPoly::constant(field, target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) term = term * power(num_pow, i, e[i], images[i].num());
    }
    Exponent key(rational.size());
    for (std::size_t k = 0; k < rational.size(); ++k) key[k] = e[rational[k]];
    auto it = groups.try_emplace(key, field, target).first;
    it->second += term;
  }

  std::vector<RatFunc> parts;
  for (auto& [key, numer] : groups) {
    MultiPoly den = MultiPoly::constant(field, target, 1);
    for (std::size_t k = 0; k < rational.size(); ++k) {
      if (key[k]) den = den * power(den_pow, rational[k], key[k], images[rational[k]].den());
    }
    parts.emplace_back(std::move(numer), std::move(den));
  }
  // Largest denominators first so later ones tend to divide the running denominator.
  std::stable_sort(parts.begin(), parts.end(),
                   [](const RatFunc& a, const RatFunc& b) { return a.den().degree() > b.den().degree(); });
  RatFunc sum = RatFunc::constant(field, target, 0);
  for (const auto& p : parts) sum = sum + p;
  check_cap(sum, degree_cap);
  return sum;
}

RatFunc substitute(const RatFunc& f, std::span<const RatFunc> images, unsigned degree_cap) {
  RatFunc n = substitute(f.num(), images, degree_cap);
  if (f.is_polynomial()) return n;
  RatFunc d = substitute(f.den(), images, degree_cap);
  if (d.is_zero()) throw ZeroDenominator("substitution sends the denominator " + f.den().to_string() + " to zero");
  RatFunc r = n / d;
  check_cap(r, degree_cap);
  return r;
}

SubstitutionAction compose(const SubstitutionAction& outer, const SubstitutionAction& inner, unsigned degree_cap) {
  SubstitutionAction out{outer.label + "*" + inner.label, {}};
  for (const auto& im : inner.images) out.images.push_back(substitute(im, outer.images, degree_cap));
  return out;
}

}  // namespace noether

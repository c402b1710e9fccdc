#include "noether/poly.hpp"

#include <algorithm>
#include <sstream>

#include "noether/error.hpp"

namespace noether {

unsigned total_degree(const Exponent& e) {
  unsigned d = 0;
  for (auto v : e) d += v;
  return d;
}

bool GrevlexLess::operator()(const Exponent& a, const Exponent& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // Same degree: the larger monomial has the smaller exponent in the last differing variable.
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

VarList::VarList(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw ParseError("duplicate variable name '" + names_[i] + "'");
    }
  }
}

VarList VarList::indexed(const std::string& prefix, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return VarList(std::move(names));
}

std::optional<std::size_t> VarList::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

MultiPoly MultiPoly::constant(Field field, std::size_t nvars, const Scalar& c) {
  MultiPoly p(field, nvars);
  p.add_term(Exponent(nvars, 0), field.normalize(c));
  return p;
}

MultiPoly MultiPoly::variable(Field field, std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw DomainError("variable index out of range");
  Exponent e(nvars, 0);
  e[index] = 1;
  MultiPoly p(field, nvars);
  p.add_term(e, Scalar(1));
  return p;
}

MultiPoly MultiPoly::monomial(Field field, Exponent e, const Scalar& c) {
  MultiPoly p(field, e.size());
  p.add_term(e, field.normalize(c));
  return p;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.rbegin()->first));
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

std::optional<Scalar> MultiPoly::constant_value() const {
  if (terms_.empty()) return Scalar(0);
  if (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0) return terms_.begin()->second;
  return std::nullopt;
}

const std::pair<const Exponent, Scalar>& MultiPoly::leading_term() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return *terms_.rbegin();
}

MultiPoly MultiPoly::homogeneous_component(int d) const {
  MultiPoly out(field_, nvars_);
  for (const auto& [e, c] : terms_) {
    if (static_cast<int>(total_degree(e)) == d) out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

std::map<int, MultiPoly> MultiPoly::homogeneous_components() const {
  std::map<int, MultiPoly> out;
  for (const auto& [e, c] : terms_) {
    int d = static_cast<int>(total_degree(e));
    auto it = out.try_emplace(d, field_, nvars_).first;
    it->second.terms_.emplace_hint(it->second.terms_.end(), e, c);
  }
  return out;
}

void MultiPoly::add_term(const Exponent& e, const Scalar& c) {
  if (e.size() != nvars_) throw DomainError("exponent length does not match variable count");
  if (Field::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (Field::is_zero(it->second)) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (!(field_ == o.field_)) throw DomainError("polynomials over different fields: " + field_.name() + " vs " + o.field_.name());
  if (nvars_ != o.nvars_) {
    throw DomainError("polynomials in different rings: " + std::to_string(nvars_) + " vs " + std::to_string(o.nvars_) + " variables");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, field_.neg(c));
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.field_, a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      out.add_term(e, a.field_.mul(ca, cb));
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(field_, nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, field_.neg(c));
  return out;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
  MultiPoly out(field_, nvars_);
  Scalar k = field_.normalize(c);
  if (Field::is_zero(k)) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, field_.mul(v, k));
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(field_, nvars_, 1);
  MultiPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
  check_compatible(d);
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  MultiPoly quotient(field_, nvars_);
  MultiPoly rem = *this;
  const auto& [ld, lc] = d.leading_term();
  Scalar lc_inv = field_.inv(lc);
  Exponent q(nvars_);
  while (!rem.is_zero()) {
    const auto& [lr, rc] = rem.leading_term();
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (lr[i] < ld[i]) return std::nullopt;
      q[i] = static_cast<std::uint16_t>(lr[i] - ld[i]);
    }
    Scalar qc = field_.mul(rc, lc_inv);
    MultiPoly step = monomial(field_, q, qc);
    quotient.add_term(q, qc);
    rem -= step * d;
  }
  return quotient;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= nvars_) throw DomainError("variable index out of range");
  MultiPoly out(field_, nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] = static_cast<std::uint16_t>(f[var] - 1);
    out.add_term(f, field_.mul(c, field_.from_int(e[var])));
  }
  return out;
}

Scalar MultiPoly::evaluate(std::span<const Scalar> point) const {
  if (point.size() != nvars_) throw DomainError("evaluation point has the wrong length");
  Scalar total = 0;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i]) t = field_.mul(t, field_.pow(point[i], e[i]));
    }
    total = field_.add(total, t);
  }
  return total;
}

MultiPoly MultiPoly::remap(std::size_t new_nvars, std::span<const std::size_t> map) const {
  if (map.size() != nvars_) throw DomainError("variable map has the wrong length");
  MultiPoly out(field_, new_nvars);
  for (const auto& [e, c] : terms_) {
    Exponent f(new_nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      if (map[i] >= new_nvars) throw DomainError("variable map target out of range");
      f[map[i]] = static_cast<std::uint16_t>(f[map[i]] + e[i]);
    }
    out.add_term(f, c);
  }
  return out;
}

MultiPoly MultiPoly::compose(std::span<const MultiPoly> images) const {
  if (images.size() != nvars_) throw DomainError("composition needs one image per variable");
  if (nvars_ == 0) return *this;
  std::size_t target = images[0].nvars();
  for (const auto& im : images) {
    if (im.nvars() != target || !(im.field() == field_)) throw DomainError("composition images live in different rings");
  }
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  MultiPoly out(field_, target);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(field_, target, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(field_, target, 1));
      while (pw.size() <= e[i]) pw.push_back(pw.back() * images[i]);
      term = term * pw[e[i]];
    }
    out += term;
  }
  return out;
}

Exponent MultiPoly::min_exponents() const {
  Exponent m(nvars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
    }
  }
  return m;
}

MultiPoly MultiPoly::shifted_down(const Exponent& s) const {
  MultiPoly out(field_, nvars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (f[i] < s[i]) throw DomainError("monomial shift below zero");
      f[i] = static_cast<std::uint16_t>(f[i] - s[i]);
    }
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

std::string MultiPoly::to_string(const VarList& vars) const {
  if (vars.size() != nvars_) throw DomainError("variable list does not match the ring");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool negative = field_.is_rational() && sgn(c) < 0;
    Scalar mag = negative ? Scalar(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool is_const = total_degree(e) == 0;
    bool need_star = false;
    if (is_const || mag != 1) {
      os << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      if (need_star) os << '*';
      os << vars[i];
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

std::string MultiPoly::to_string() const { return to_string(VarList::indexed("x", nvars_)); }

}  // namespace noether

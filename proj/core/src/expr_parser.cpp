#include <cctype>

#include "noether/error.hpp"
#include "noether/parse.hpp"

namespace noether {

namespace {

class Reader {
 public:
  Reader(const ExprParser& p, const std::map<std::string, Scalar>& constants, std::string_view text)
      : p_(p), constants_(constants), s_(text) {}

  RatFunc run() {
    RatFunc r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc constant(const Scalar& c) const { return RatFunc::constant(p_.field(), p_.vars().size(), c); }

  RatFunc expr() {
    RatFunc r = term();
    for (;;) {
      if (accept('+')) {
        r = r + term();
      } else if (accept('-')) {
        r = r - term();
      } else {
        return r;
      }
    }
  }

  RatFunc term() {
    RatFunc r = unary();
    for (;;) {
      if (accept('*')) {
        r = r * unary();
      } else if (accept('/')) {
        RatFunc d = unary();
        if (d.is_zero()) fail("division by zero");
        r = r / d;
      } else {
        return r;
      }
    }
  }

  RatFunc unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  long exponent() {
    bool paren = accept('(');
    bool neg = accept('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    if (pos_ - start > 4) fail("exponent too large");
    long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (paren && !accept(')')) fail("expected ')'");
    return neg ? -e : e;
  }

  RatFunc power() {
    RatFunc base = atom();
    if (accept('^')) {
      long e = exponent();
      if (e < 0 && base.is_zero()) fail("zero raised to a negative power");
      return base.pow(e);
    }
    return base;
  }

  RatFunc atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class z(std::string(s_.substr(start, pos_ - start)));
      return constant(p_.field().normalize(mpq_class(z)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\'')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (auto idx = p_.vars().index_of(name)) return RatFunc::variable(p_.field(), p_.vars().size(), *idx);
      auto it = constants_.find(name);
      if (it != constants_.end()) return constant(it->second);
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const ExprParser& p_;
  const std::map<std::string, Scalar>& constants_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprParser::ExprParser(Field field, VarList vars, std::map<std::string, Scalar> constants)
    : field_(field), vars_(std::move(vars)) {
  for (auto& [name, value] : constants) {
    if (vars_.index_of(name)) throw ParseError("constant '" + name + "' shadows a variable");
    constants_.emplace(name, field_.normalize(value));
  }
}

RatFunc ExprParser::parse(std::string_view text) const { return Reader(*this, constants_, text).run(); }

MultiPoly ExprParser::parse_poly(std::string_view text) const {
  RatFunc r = parse(text);
  if (!r.is_polynomial()) throw ParseError("expected a polynomial, got \"" + std::string(text) + "\"");
  return r.num();
}

}  // namespace noether

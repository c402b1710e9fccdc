#include "noether/rationality.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "noether/catalog.hpp"
#include "noether/error.hpp"
#include "noether/linalg.hpp"
#include "noether/oracles.hpp"
#include "noether/parse.hpp"
#include "noether/perm_group.hpp"
#include "noether/permutation.hpp"

namespace noether {

namespace {

using nlohmann::json;
using Strings = std::vector<std::string>;

std::string join(const Strings& v, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

class WordParser {
 public:
  explicit WordParser(std::string_view t) : t_(t) {}

  std::vector<Letter> run() {
    auto w = word();
    skip();
    if (pos_ != t_.size()) fail("unexpected character");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("word '" + std::string(t_) + "': " + msg + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < t_.size() && t_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::vector<Letter> word() {
    auto w = factor();
    while (eat('*')) {
      auto f = factor();
      w.insert(w.end(), f.begin(), f.end());
    }
    return w;
  }
  std::vector<Letter> factor() {
    std::vector<Letter> base;
    skip();
    if (eat('(')) {
      base = word();
      if (!eat(')')) fail("missing ')'");
    } else {
      std::size_t start = pos_;
      while (pos_ < t_.size() && (std::isalnum(static_cast<unsigned char>(t_[pos_])) || t_[pos_] == '_')) ++pos_;
      if (pos_ == start) fail("expected an action label");
      base.push_back({std::string(t_.substr(start, pos_ - start)), false});
    }
    if (!eat('^')) return base;
    skip();
    bool neg = false;
    if (pos_ < t_.size() && t_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
    if (pos_ == start || pos_ - start > 4) fail("bad exponent");
    int k = std::stoi(std::string(t_.substr(start, pos_ - start)));
    std::vector<Letter> unit = base;
    if (neg) {
      std::reverse(unit.begin(), unit.end());
      for (auto& l : unit) l.inverse = !l.inverse;
    }
    std::vector<Letter> out;
    for (int i = 0; i < k; ++i) out.insert(out.end(), unit.begin(), unit.end());
    return out;
  }

  std::string_view t_;
  std::size_t pos_ = 0;
};

std::vector<bool> used_variables(const RatFunc& f) {
  std::vector<bool> used(f.nvars(), false);
  for (const MultiPoly* p : {&f.num(), &f.den()}) {
    for (const auto& [e, c] : p->terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i]) used[i] = true;
      }
    }
  }
  return used;
}

class CaseVerifier {
 public:
  CaseVerifier(const CaseScript& s, const VerifyOptions& opts) : s_(s), opts_(opts) {
    std::uint64_t c = opts.characteristic.value_or(s.characteristic.default_characteristic);
    if (!s.characteristic.allows(c)) {
      throw DomainError(s.id + " requires " + s.characteristic.describe() + ", got char " + std::to_string(c));
    }
    field_ = Field::of_characteristic(c);
    Strings names = s.base_vars;
    for (const auto& d : s.defs) names.push_back(d.name);
    symbols_ = VarList(names);
    parser_.emplace(field_, symbols_);
    for (const auto& d : s.defs) def_expr_.emplace(*symbols_.index_of(d.name), parser_->parse(d.text));
    for (const auto& a : s.actions) perm_.emplace(a.name, Permutation::parse(a.text, s.base_vars.size()));
    layer_ = s.base_vars;
    report_.case_id = s.id;
    report_.seed = opts.seed;
  }

  Report run() {
    collect_tables();
    if (s_.coordinates) {
      std::vector<std::pair<std::string, std::string>> inverse;
      for (const auto& inv : s_.coordinates->inverse) inverse.emplace_back(inv.name, inv.text);
      std::size_t before = report_.count(Status::fail);
      check_birational(0, s_.base_vars, s_.coordinates->symbols, inverse, s_.base_vars);
      if (report_.count(Status::fail) == before) layer_ = s_.coordinates->symbols;
    }
    for (std::size_t i = 0; i < s_.claims.size(); ++i) run_claim(i + 1, s_.claims[i]);
    report_.sort();
    return std::move(report_);
  }

 private:
  // ---- claim bookkeeping -------------------------------------------------

  std::string claim_id(std::size_t index, const std::string& kind, std::size_t sub = 0) const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%03zu", index);
    std::string id = s_.id + ":" + buf + ":" + kind;
    if (sub) {
      std::snprintf(buf, sizeof buf, "%02zu", sub);
      id += std::string(":") + buf;
    }
    return id;
  }

  void add(std::size_t index, const std::string& kind, std::size_t sub, std::string statement, std::string anchor,
           Status st, std::string detail = {}) {
    report_.add(Claim{claim_id(index, kind, sub), kind, std::move(statement), s_.id + ":" + anchor, st, std::move(detail)});
  }

  void run_claim(std::size_t index, const ScriptClaim& c) {
    const json& a = c.args;
    try {
      if (c.kind == "table") return check_table(index, a);
      if (c.kind == "invariance") return check_invariance(index, a);
      if (c.kind == "identity") return check_identity(index, a);
      if (c.kind == "tower") return check_tower(index, a);
      if (c.kind == "relation") return check_relation(index, a);
      if (c.kind == "monomial") return check_monomial(index, a);
      if (c.kind == "birational") {
        std::vector<std::pair<std::string, std::string>> inverse;
        for (const auto& p : a.at("inverse")) inverse.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
        return check_birational(index, a.at("from").get<Strings>(), a.at("to").get<Strings>(), inverse, layer_);
      }
      if (c.kind == "catalog") return check_catalog(index, a);
      if (c.kind == "independence") return check_independence(index, a);
      if (c.kind == "fiber") return check_fiber(index, a);
      if (c.kind == "cited") {
        return add(index, "cited", 0, a.at("statement").get<std::string>(), "cited", Status::certified_modulo_cited_theorem,
                   "closing step rests on: " + a.at("reference").get<std::string>());
      }
      throw ParseError("unknown claim kind '" + c.kind + "'");
    } catch (const json::exception& e) {
      add(index, c.kind, 0, a.dump(), c.kind, Status::fail, std::string("malformed claim: ") + e.what());
    } catch (const Error& e) {
      add(index, c.kind, 0, a.dump(), c.kind, Status::fail, e.what());
    }
  }

  // ---- symbols and expansion ---------------------------------------------

  std::size_t symbol(const std::string& name) const {
    auto i = symbols_.index_of(name);
    if (!i) throw ParseError("unknown symbol '" + name + "'");
    return *i;
  }

  RatFunc parse(const std::string& text) const { return parser_->parse(text); }

  /// Parses text using only the listed symbols; throws ParseError otherwise.
  RatFunc parse_in(const Strings& vars, const std::string& text) const { return ExprParser(field_, VarList(vars)).parse(text); }

  /// The symbol as a rational function of the symbols in V.
  const RatFunc& expand_to(const Strings& V, std::size_t sym) {
    auto& memo = memo_[V];
    if (auto it = memo.find(sym); it != memo.end()) return it->second;
    const std::string& name = symbols_[sym];
    auto pos = std::find(V.begin(), V.end(), name);
    if (pos != V.end()) {
      return memo.emplace(sym, RatFunc::variable(field_, V.size(), static_cast<std::size_t>(pos - V.begin()))).first->second;
    }
    std::string key = join(V) + "|" + name;
    if (!in_progress_.insert(key).second) {
      throw DomainError("cannot express '" + name + "' through {" + join(V) + "}: circular definition");
    }
    RatFunc out;
    try {
      if (auto d = def_expr_.find(sym); d != def_expr_.end()) {
        out = expand_expr_uncached(V, d->second);
      } else if (const RatFunc* inv = inverse_of(sym)) {
        out = expand_expr_uncached(V, *inv);
      } else {
        throw DomainError("cannot express '" + name + "' through {" + join(V) + "}");
      }
    } catch (...) {
      in_progress_.erase(key);
      throw;
    }
    in_progress_.erase(key);
    return memo_[V].emplace(sym, std::move(out)).first->second;
  }

  const RatFunc* inverse_of(std::size_t sym) {
    if (!s_.coordinates) return nullptr;
    if (inverse_expr_.empty()) {
      for (const auto& inv : s_.coordinates->inverse) inverse_expr_.emplace(symbol(inv.name), parse(inv.text));
    }
    auto it = inverse_expr_.find(sym);
    return it == inverse_expr_.end() ? nullptr : &it->second;
  }

  RatFunc expand_expr_uncached(const Strings& V, const RatFunc& f) {
    std::vector<bool> used = used_variables(f);
    std::vector<RatFunc> images;
    images.reserve(used.size());
    for (std::size_t i = 0; i < used.size(); ++i) {
      images.push_back(used[i] ? expand_to(V, i) : RatFunc::constant(field_, V.size(), 0));
    }
    return substitute(f, images, opts_.degree_cap);
  }

  RatFunc expand(const Strings& V, const std::string& text) { return expand_expr_uncached(V, parse(text)); }

  // ---- actions -------------------------------------------------------------

  const Permutation& action(const std::string& label) const {
    auto it = perm_.find(label);
    if (it == perm_.end()) throw ParseError("unknown action '" + label + "'");
    return it->second;
  }

  Permutation word_permutation(const std::vector<Letter>& w) const {
    Permutation p = Permutation::identity(s_.base_vars.size());
    for (const auto& l : w) p = p * (l.inverse ? action(l.label).inverse() : action(l.label));
    return p;
  }

  /// Images of the layer symbols under a permutation of the base variables.
  const std::vector<RatFunc>& layer_images(const Permutation& p) {
    if (auto it = layer_cache_.find(p); it != layer_cache_.end()) return it->second;
    const std::size_t n = s_.base_vars.size();
    std::vector<RatFunc> out;
    if (layer_ == s_.base_vars) {
      for (std::size_t i = 0; i < n; ++i) out.push_back(RatFunc::variable(field_, n, p(static_cast<Point>(i + 1)) - 1));
    } else {
      std::vector<RatFunc> permuted, back;
      for (std::size_t i = 0; i < n; ++i) permuted.push_back(RatFunc::variable(field_, n, p(static_cast<Point>(i + 1)) - 1));
      for (std::size_t i = 0; i < n; ++i) back.push_back(expand_to(layer_, i));
      for (const auto& c : layer_) {
        RatFunc in_base = substitute(expand_to(s_.base_vars, symbol(c)), permuted, opts_.degree_cap);
        out.push_back(substitute(in_base, back, opts_.degree_cap));
      }
    }
    return layer_cache_.emplace(p, std::move(out)).first->second;
  }

  RatFunc apply_word(const std::string& word, const RatFunc& f) {
    return substitute(f, layer_images(word_permutation(parse_word(word))), opts_.degree_cap);
  }

  // ---- claimed tables ------------------------------------------------------

  void collect_tables() {
    for (const auto& c : s_.claims) {
      if (c.kind != "table") continue;
      try {
        std::string label = c.args.at("action").get<std::string>();
        for (const auto& p : c.args.at("images")) table_.try_emplace({label, p.at(0).get<std::string>()}, p.at(1).get<std::string>());
      } catch (const json::exception&) {
        // reported when the claim itself runs
      }
    }
  }

  /// The claimed map of one letter on the symbol set S, as images in k(S).
  std::vector<RatFunc> table_map(const std::string& label, const Strings& S) {
    std::vector<RatFunc> images;
    for (const auto& sym : S) {
      auto it = table_.find({label, sym});
      if (it != table_.end()) {
        images.push_back(parse_in(S, it->second));
        continue;
      }
      // Base variables without a claimed image move by the action's permutation.
      auto base = std::find(s_.base_vars.begin(), s_.base_vars.end(), sym);
      if (base == s_.base_vars.end()) throw DomainError("no claimed image of " + sym + " under " + label);
      Point img = action(label)(static_cast<Point>(base - s_.base_vars.begin() + 1));
      images.push_back(parse_in(S, s_.base_vars[img - 1]));
    }
    return images;
  }

  /// The claimed map of a word on S: images of each symbol under the composite.
  std::vector<RatFunc> word_table_map(const std::vector<Letter>& w, const Strings& S) {
    std::vector<RatFunc> r;
    for (std::size_t i = 0; i < S.size(); ++i) r.push_back(RatFunc::variable(field_, S.size(), i));
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      std::vector<RatFunc> m = table_map(it->label, S);
      std::uint64_t reps = it->inverse ? action(it->label).order() - 1 : 1;
      for (std::uint64_t k = 0; k < reps; ++k) {
        for (auto& f : r) f = substitute(f, m, opts_.degree_cap);
      }
    }
    return r;
  }

  // ---- claim kinds ---------------------------------------------------------

  void check_table(std::size_t index, const json& a) {
    std::string label = a.at("action").get<std::string>();
    std::size_t sub = 0;
    for (const auto& p : a.at("images")) {
      ++sub;
      std::string sym = p.at(0).get<std::string>();
      std::string img = p.at(1).get<std::string>();
      std::string statement = label + "(" + sym + ") = " + img;
      try {
        RatFunc lhs = apply_word(label, expand_to(layer_, symbol(sym)));
        RatFunc rhs = expand(layer_, img);
        bool ok = lhs == rhs;
        add(index, "table", sub, statement, label + "(" + sym + ")", ok ? Status::pass : Status::fail,
            ok ? "" : "computed " + lhs.to_string(VarList(layer_)));
      } catch (const Error& e) {
        add(index, "table", sub, statement, label + "(" + sym + ")", Status::fail, e.what());
      }
    }
  }

  void check_invariance(std::size_t index, const json& a) {
    Strings syms = a.at("symbols").get<Strings>();
    Strings words = a.at("actions").get<Strings>();
    bool expected = a.value("expected", true);
    std::size_t sub = 0;
    for (const auto& sym : syms) {
      for (const auto& w : words) {
        ++sub;
        std::string statement = w + "(" + sym + ") " + (expected ? "= " : "!= ") + sym;
        try {
          RatFunc f = expand_to(layer_, symbol(sym));
          RatFunc g = apply_word(w, f);
          bool fixed = f == g;
          add(index, "invariance", sub, statement, w + "(" + sym + ")", fixed == expected ? Status::pass : Status::fail,
              fixed ? "" : "image " + g.to_string(VarList(layer_)));
        } catch (const Error& e) {
          add(index, "invariance", sub, statement, w + "(" + sym + ")", Status::fail, e.what());
        }
      }
    }
  }

  void check_identity(std::size_t index, const json& a) {
    std::string lhs = a.at("lhs").get<std::string>(), rhs = a.at("rhs").get<std::string>();
    RatFunc l = expand(layer_, lhs), r = expand(layer_, rhs);
    bool ok = l == r;
    add(index, "identity", 0, lhs + " = " + rhs, lhs + "=" + rhs, ok ? Status::pass : Status::fail,
        ok ? "" : "difference " + (l - r).to_string(VarList(layer_)));
  }

  void check_relation(std::size_t index, const json& a) {
    std::string word = a.at("word").get<std::string>();
    Strings on = a.at("on").get<Strings>();
    bool expect_identity = a.value("permutation_identity", true);
    std::vector<Letter> w = parse_word(word);
    std::vector<std::string> problems;
    if (word_permutation(w).is_identity() != expect_identity) {
      problems.push_back(std::string("as a permutation the word is ") + (expect_identity ? "not " : "") + "the identity");
    }
    std::vector<RatFunc> m = word_table_map(w, on);
    for (std::size_t i = 0; i < on.size(); ++i) {
      if (!(m[i] == RatFunc::variable(field_, on.size(), i))) {
        problems.push_back("claimed tables send " + on[i] + " to " + m[i].to_string(VarList(on)));
      }
    }
    add(index, "relation", 0, word + " acts trivially on " + join(on), "relation " + word,
        problems.empty() ? Status::pass : Status::fail, join(problems, "; "));
  }

  void check_monomial(std::size_t index, const json& a) {
    Strings syms = a.at("symbols").get<Strings>();
    Strings labels = a.at("actions").get<Strings>();
    std::string expected = a.at("expected").get<std::string>();
    bool monomial = true, purely = true, invertible = true;
    std::ostringstream detail;
    for (const auto& label : labels) {
      std::vector<RatFunc> m = table_map(label, syms);
      std::vector<std::vector<mpz_class>> exps;
      for (std::size_t i = 0; i < m.size(); ++i) {
        const auto& num = m[i].num().terms();
        const auto& den = m[i].den().terms();
        if (num.size() != 1 || den.size() != 1) {
          monomial = false;
          detail << label << "(" << syms[i] << ") is not a Laurent monomial; ";
          continue;
        }
        const auto& [ne, nc] = *num.begin();
        const auto& [de, dc] = *den.begin();
        if (field_.div(nc, dc) != field_.from_int(1)) purely = false;
        std::vector<mpz_class> row;
        for (std::size_t j = 0; j < syms.size(); ++j) row.emplace_back(static_cast<long>(ne[j]) - static_cast<long>(de[j]));
        exps.push_back(std::move(row));
      }
      if (exps.size() == syms.size()) {
        mpz_class det = determinant(exps);
        detail << "det " << label << " = " << det.get_str() << "; ";
        if (det != 1 && det != -1) invertible = false;
      }
    }
    std::string got = !monomial ? "not-monomial" : (purely ? "purely-monomial" : "monomial");
    bool ok = got == expected && invertible;
    std::string d = detail.str();
    if (!d.empty()) d.resize(d.size() - 2);
    add(index, "monomial", 0, "action of <" + join(labels) + "> on " + join(syms) + " is " + expected, "monomial",
        ok ? Status::pass : Status::fail, "classified " + got + "; " + d);
  }

  void check_birational(std::size_t index, const Strings& from, const Strings& to,
                        const std::vector<std::pair<std::string, std::string>>& inverse, const Strings& layer) {
    std::string statement = "k(" + join(from) + ") = k(" + join(to) + ")";
    std::vector<std::string> problems;
    try {
      for (const auto& t : to) {
        if (std::find(from.begin(), from.end(), t) == from.end()) expand_to(from, symbol(t));
      }
      std::set<std::string> covered(to.begin(), to.end());
      for (const auto& [sym, text] : inverse) {
        if (std::find(from.begin(), from.end(), sym) == from.end()) {
          problems.push_back(sym + " is not among the original symbols");
          continue;
        }
        if (!covered.insert(sym).second) problems.push_back(sym + " inverted twice");
        parse_in(to, text);
        if (!(expand(layer, text) == expand_to(layer, symbol(sym)))) problems.push_back(sym + " != " + text);
      }
      for (const auto& f : from) {
        if (!covered.count(f)) problems.push_back("no inverse given for " + f);
      }
    } catch (const Error& e) {
      problems.push_back(e.what());
    }
    add(index, "birational", 0, statement, "coordinates " + join(to, ","), problems.empty() ? Status::pass : Status::fail,
        join(problems, "; "));
  }

  void check_catalog(std::size_t index, const json& a) {
    std::string gid = a.at("group").get<std::string>();
    Strings labels = a.at("actions").get<Strings>();
    bool relabeled = a.value("relabeled", false);
    std::vector<Permutation> gens;
    for (const auto& l : labels) gens.push_back(action(l));
    std::string statement = "<" + join(labels) + "> = " + gid + (relabeled ? " (relabeled points)" : "");
    if (s_.base_vars.size() != 6) {
      return add(index, "catalog", 0, statement, "catalog " + gid, Status::fail, "catalog groups act on six points");
    }
    PermGroup target = relabeled ? PermGroup(6, relabeled_generators(gid)) : catalog_entry(gid).group();
    if (relabeled && target.generators().empty()) throw DomainError(gid + " has no relabeled form");
    PermGroup g(6, gens);
    bool ok = same_elements(g, target);
    add(index, "catalog", 0, statement, "catalog " + gid, ok ? Status::pass : Status::fail,
        "order " + std::to_string(g.order()) + " vs " + std::to_string(target.order()));
  }

  void check_independence(std::size_t index, const json& a) {
    Strings funcs = a.at("functions").get<Strings>();
    Strings vars = a.at("variables").get<Strings>();
    std::string statement = join(funcs) + " algebraically independent in k(" + join(vars) + ")";
    if (!field_.is_rational()) {
      return add(index, "independence", 0, statement, "independence", Status::inconclusive,
                 "the Jacobian criterion is only applied in characteristic 0");
    }
    std::vector<RatFunc> fs;
    for (const auto& f : funcs) fs.push_back(expand_to(vars, symbol(f)));
    JacobianResult r = jacobian_independence(fs, opts_.seed);
    report_.oracle_runs.push_back({{"claim", claim_id(index, "independence")},
                                   {"oracle", "jacobian"},
                                   {"seed", opts_.seed},
                                   {"rank", r.rank},
                                   {"points_tried", r.points_tried}});
    Status st = r.verdict == Independence::independent ? Status::pass
                : r.verdict == Independence::dependent ? Status::fail
                                                       : Status::inconclusive;
    add(index, "independence", 0, statement, "independence", st,
        "Jacobian rank " + std::to_string(r.rank) + " after " + std::to_string(r.points_tried) + " points");
  }

  void check_fiber(std::size_t index, const json& a) {
    Strings maps = a.at("maps").get<Strings>();
    Strings vars = a.at("variables").get<Strings>();
    std::size_t expected = a.at("expected").get<std::size_t>();
    std::string statement = "[k(" + join(vars) + ") : k(" + join(maps) + ")] = " + std::to_string(expected);
    if (!field_.is_rational()) {
      return add(index, "fiber", 0, statement, "fiber", Status::inconclusive, "fiber counting needs a characteristic 0 script");
    }
    std::vector<RatFunc> fs;
    for (const auto& m : maps) fs.push_back(expand_to(vars, symbol(m)));
    FiberCountResult r = generic_fiber_count(fs, opts_.prime, opts_.trials, opts_.seed);
    json hist = json::object();
    for (const auto& [n, f] : r.histogram) hist[std::to_string(n)] = f;
    report_.oracle_runs.push_back({{"claim", claim_id(index, "fiber")},
                                   {"oracle", "fiber-count"},
                                   {"prime", r.prime},
                                   {"seed", r.seed},
                                   {"trials", opts_.trials},
                                   {"histogram", hist},
                                   {"modal_count", r.modal_count},
                                   {"modal_frequency", r.modal_frequency}});
    bool ok = r.modal_count == expected && 10 * r.modal_frequency >= 7 * opts_.trials;
    add(index, "fiber", 0, statement, "fiber", ok ? Status::pass : Status::fail,
        "modal preimage count " + std::to_string(r.modal_count) + " in " + std::to_string(r.modal_frequency) + "/" +
            std::to_string(opts_.trials) + " trials over F" + std::to_string(r.prime));
  }

  /// Order of the group generated by the claimed maps on S, or 0 past the cap.
  std::size_t claimed_group_order(const std::vector<std::vector<RatFunc>>& gens, const Strings& S) {
    constexpr std::size_t kCap = 5000;
    std::vector<std::vector<RatFunc>> elems;
    std::vector<RatFunc> id;
    for (std::size_t i = 0; i < S.size(); ++i) id.push_back(RatFunc::variable(field_, S.size(), i));
    elems.push_back(id);
    auto known = [&](const std::vector<RatFunc>& m) {
      return std::any_of(elems.begin(), elems.end(), [&](const auto& e) { return std::equal(e.begin(), e.end(), m.begin()); });
    };
    for (std::size_t head = 0; head < elems.size(); ++head) {
      for (const auto& g : gens) {
        std::vector<RatFunc> next;
        for (const auto& f : elems[head]) next.push_back(substitute(f, g, opts_.degree_cap));
        if (!known(next)) {
          elems.push_back(std::move(next));
          if (elems.size() > kCap) return 0;
        }
      }
    }
    return elems.size();
  }

  void check_tower(std::size_t index, const json& a) {
    Strings targets = a.at("targets").get<Strings>();
    Strings gens = a.at("generators").get<Strings>();
    Strings group = a.at("group").get<Strings>();
    std::map<std::string, std::string> in_targets;
    for (const auto& p : a.value("in_targets", json::array())) in_targets[p.at(0).get<std::string>()] = p.at(1).get<std::string>();
    const json& levels = a.at("levels");

    std::string head = "k(" + join(targets) + ")^<" + join(group) + "> = k(" + join(gens) + ")";
    std::vector<std::string> chain_problems;
    std::size_t bound = 1, sub = 0;
    std::set<std::string> reachable(gens.begin(), gens.end());
    std::set<std::string> prev;
    std::string prev_root;
    bool levels_ok = true;
    for (std::size_t l = 0; l < levels.size(); ++l) {
      const json& lv = levels[l];
      Strings over = lv.at("over").get<Strings>();
      Strings roots = lv.at("roots").get<Strings>();
      Strings coeffs = lv.at("coefficients").get<Strings>();
      ++sub;
      std::string poly_text = "prod (T - r) over r in {" + join(roots) + "} = " + polynomial_text(coeffs);
      std::vector<std::string> problems;
      try {
        for (const auto& o : over) {
          bool allowed = l == 0 ? reachable.count(o) > 0 : (prev.count(o) > 0 || o == prev_root);
          if (!allowed) problems.push_back(o + " is not available at this level");
        }
        if (roots.empty() || !symbols_.index_of(trim(roots[0]))) problems.push_back("the first root must be a symbol");
        if (coeffs.size() != roots.size() + 1) problems.push_back("need " + std::to_string(roots.size() + 1) + " coefficients");
        for (const auto& c : coeffs) parse_in(over, c);
        if (problems.empty()) {
          std::vector<RatFunc> rv;
          for (const auto& r : roots) rv.push_back(expand(layer_, r));
          std::vector<RatFunc> e = elementary_symmetric_values(rv);
          const std::size_t r = roots.size();
          for (std::size_t k = 0; k <= r; ++k) {
            RatFunc want = (k % 2) ? -e[k] : e[k];
            RatFunc got = expand(layer_, coeffs[r - k]);
            if (!(want == got)) problems.push_back("coefficient of T^" + std::to_string(r - k) + " is " + want.to_string(VarList(layer_)));
          }
        }
      } catch (const Error& e) {
        problems.push_back(e.what());
      }
      if (!problems.empty()) levels_ok = false;
      add(index, "tower", sub, poly_text, "tower level " + std::to_string(l + 1), problems.empty() ? Status::pass : Status::fail,
          join(problems, "; "));
      bound *= roots.size();
      prev = std::set<std::string>(over.begin(), over.end());
      prev_root = roots.empty() ? "" : trim(roots[0]);
    }
    for (const auto& t : targets) {
      if (!prev.count(t) && t != prev_root) chain_problems.push_back("target " + t + " not reached by the tower");
    }

    // The generators lie in the target field and are fixed by the group.
    try {
      for (const auto& g : gens) {
        if (std::find(targets.begin(), targets.end(), g) != targets.end()) continue;
        std::string text;
        if (auto it = in_targets.find(g); it != in_targets.end()) {
          text = it->second;
        } else {
          auto d = std::find_if(s_.defs.begin(), s_.defs.end(), [&](const NamedText& n) { return n.name == g; });
          if (d == s_.defs.end()) throw DomainError("no expression of " + g + " in the targets");
          text = d->text;
        }
        parse_in(targets, text);
        if (!(expand(layer_, text) == expand_to(layer_, symbol(g)))) chain_problems.push_back(g + " != " + text);
      }
      for (const auto& g : gens) {
        RatFunc f = expand_to(layer_, symbol(g));
        for (const auto& w : group) {
          if (!(apply_word(w, f) == f)) chain_problems.push_back(g + " is not fixed by " + w);
        }
      }
    } catch (const Error& e) {
      chain_problems.push_back(e.what());
    }

    std::size_t order = 0;
    try {
      std::vector<std::vector<RatFunc>> maps;
      for (const auto& w : group) maps.push_back(word_table_map(parse_word(w), targets));
      order = claimed_group_order(maps, targets);
    } catch (const Error& e) {
      chain_problems.push_back(std::string("group on the targets: ") + e.what());
    }

    ++sub;
    std::string statement = head + " (degree bound " + std::to_string(bound) + ")";
    std::string detail = "group order on the targets " + std::to_string(order) + ", tower bound " + std::to_string(bound);
    Status st;
    if (!levels_ok || !chain_problems.empty()) {
      st = Status::fail;
      if (!chain_problems.empty()) detail += "; " + join(chain_problems, "; ");
    } else if (order == 0 || bound > order) {
      st = Status::inconclusive;
      detail += "; the bound does not pin down the fixed field";
    } else if (bound < order) {
      st = Status::fail;
      detail += "; bound below the group order contradicts Galois theory";
    } else {
      st = Status::certified_modulo_cited_theorem;
      detail += "; closing step: [k(T) : k(T)^G] = |G| for a faithful action";
    }
    add(index, "tower", sub, statement, "tower " + join(targets, ","), st, detail);
  }

  static std::string polynomial_text(const Strings& coeffs) {
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      if (!out.empty()) out += " + ";
      out += "(" + coeffs[i] + ")";
      if (i > 0) out += "*T^" + std::to_string(i);
    }
    return out;
  }

  const CaseScript& s_;
  VerifyOptions opts_;
  Field field_;
  VarList symbols_;
  std::optional<ExprParser> parser_;
  std::map<std::size_t, RatFunc> def_expr_;
  std::map<std::size_t, RatFunc> inverse_expr_;
  std::map<std::string, Permutation> perm_;
  Strings layer_;
  std::map<Strings, std::map<std::size_t, RatFunc>> memo_;
  std::set<std::string> in_progress_;
  std::map<Permutation, std::vector<RatFunc>> layer_cache_;
  std::map<std::pair<std::string, std::string>, std::string> table_;
  Report report_;
};

}  // namespace

std::vector<Letter> parse_word(std::string_view text) { return WordParser(text).run(); }

std::vector<RatFunc> elementary_symmetric_values(const std::vector<RatFunc>& values) {
  if (values.empty()) throw DomainError("elementary symmetric values of an empty list");
  const Field& f = values[0].field();
  const std::size_t n = values[0].nvars();
  std::vector<RatFunc> e{RatFunc::constant(f, n, 1)};
  for (const auto& v : values) {
    e.push_back(RatFunc::constant(f, n, 0));
    for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] = e[k] + e[k - 1] * v;
  }
  return e;
}

Report verify_case(const CaseScript& script, const VerifyOptions& opts) {
  Report r = CaseVerifier(script, opts).run();
  r.command = "verify case " + script.id;
  return r;
}

Report verify_case(std::string_view id, const VerifyOptions& opts) { return verify_case(load_case(id), opts); }

}  // namespace noether

#include "noether_cli/suites.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <future>
#include <set>
#include <sstream>

#include "noether/catalog.hpp"
#include "noether/character.hpp"
#include "noether/error.hpp"
#include "noether/parse.hpp"
#include "noether/regular_embedding.hpp"
#include "noether/wreath.hpp"

namespace noether::cli {

namespace {

Claim make(std::string id, std::string kind, std::string statement, bool ok, std::string detail = {},
           std::string anchor = {}) {
  if (anchor.empty()) anchor = id;
  return Claim{std::move(id), std::move(kind), std::move(statement), std::move(anchor), ok ? Status::pass : Status::fail,
               std::move(detail)};
}

std::string two_digits(std::size_t k) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02zu", k);
  return buf;
}

nlohmann::json generator_list(const PermGroup& g) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : g.generators()) out.push_back(p.to_string());
  return out;
}

std::optional<std::size_t> suffix_number(const std::string& text, char prefix) {
  if (text.size() < 2 || std::toupper(static_cast<unsigned char>(text[0])) != prefix) return std::nullopt;
  std::size_t v = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(text[i] - '0');
    if (v > 64) return std::nullopt;
  }
  return v;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Exponent of p in n!, one factor at a time.
std::uint64_t factorial_valuation(std::uint64_t p, std::uint64_t n) {
  std::uint64_t v = 0;
  for (std::uint64_t k = 2; k <= n; ++k) {
    for (std::uint64_t x = k; x % p == 0; x /= p) ++v;
  }
  return v;
}

bool is_power_of(std::uint64_t x, std::uint64_t p) {
  while (x > 1 && x % p == 0) x /= p;
  return x == 1;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

void graded_claims(Report& r, const std::string& prefix, const std::string& anchor, const GradedReport& g) {
  for (const auto& row : g.rows) {
    r.add(make(prefix + ":degree:" + std::to_string(row.degree), "invariants",
               "degree " + std::to_string(row.degree) + ": products of the generators span the invariants", row.pass,
               "dim invariants = " + std::to_string(row.dim_invariants) +
                   ", dim subalgebra = " + std::to_string(row.dim_subalgebra) + " (" + g.invariant_method + ", checked to degree " +
                   std::to_string(g.max_degree) + ")",
               anchor));
  }
}

std::vector<MultiPoly> parse_list(const ExprParser& parser, const nlohmann::json& list, const char* field) {
  if (!list.is_array()) throw ParseError(std::string("wreath spec: '") + field + "' must be a list of strings");
  std::vector<MultiPoly> out;
  for (const auto& item : list) {
    if (!item.is_string()) throw ParseError(std::string("wreath spec: '") + field + "' must be a list of strings");
    out.push_back(parser.parse_poly(item.get<std::string>()));
  }
  return out;
}

std::vector<MultiPoly> generators_of(const WreathProblem& p, bool use_claimed) {
  if (use_claimed && !p.claimed.empty()) {
    ExprParser parser(p.field, p.xvars, p.constants);
    std::vector<MultiPoly> gens;
    for (const auto& s : p.claimed) gens.push_back(parser.parse_poly(s));
    return gens;
  }
  return wreath_invariant_generators(p.F, p.Hgens, p.m, p.n, p.N);
}

// Runs the graded comparison; a non-invariant generator becomes one failing claim.
std::optional<GradedReport> graded_or_claim(Report& r, const std::string& prefix, const std::string& anchor,
                                            const std::vector<MultiPoly>& gens, const LinearAction& action, int max_degree) {
  try {
    GradedReport g = verify_invariant_generators(gens, action, max_degree);
    r.add(make(prefix + ":invariance", "invariants", "every generator is fixed by every group generator", true,
               std::to_string(gens.size()) + " generators", anchor));
    graded_claims(r, prefix, anchor, g);
    return g;
  } catch (const NotInvariant& e) {
    r.add(make(prefix + ":invariance", "invariants", "every generator is fixed by every group generator", false, e.what(), anchor));
    return std::nullopt;
  }
}

}  // namespace

PermGroup resolve_group(const std::string& text) {
  if (auto k = suffix_number(text, 'S'); k && *k >= 1) return PermGroup::symmetric(*k);
  if (auto k = suffix_number(text, 'C'); k && *k >= 1) return PermGroup::cyclic(*k);
  if (auto k = suffix_number(text, 'G'); k) return catalog_entry(text).group();
  return PermGroup::parse(text);
}

Report catalog_report() {
  // Orders of the sixteen classes, obtained by enumeration and frozen here.
  static const std::uint64_t kOrders[16] = {6, 6, 12, 48, 24, 24, 12, 24, 72, 36, 36, 18, 120, 60, 360, 720};
  Report r;
  r.command = "catalog check";
  const auto& cat = catalog();
  r.add(make("catalog:count", "catalog", "the catalog lists 16 classes", cat.size() == 16, std::to_string(cat.size()) + " entries",
             "catalog"));
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < cat.size() && i < 16; ++i) {
    const auto& e = cat[i];
    PermGroup g = e.group();
    std::string id = "catalog:" + e.id;
    r.add(make(id + ":transitive", "catalog", e.id + " is transitive on 6 points", g.is_transitive(), "", id));
    r.add(make(id + ":order", "catalog", "|" + e.id + "| = " + std::to_string(kOrders[i]), g.order() == kOrders[i],
               "enumerated " + std::to_string(g.order()), id));
    entries.push_back({{"id", e.id}, {"order", g.order()}, {"generators", generator_list(g)}, {"isomorphism", e.iso_label}});
  }
  std::vector<std::string> conjugate_pairs;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    for (std::size_t j = i + 1; j < cat.size(); ++j) {
      if (are_conjugate(6, cat[i].group(), cat[j].group()).conjugate) conjugate_pairs.push_back(cat[i].id + "~" + cat[j].id);
    }
  }
  r.add(make("catalog:nonconjugate", "catalog", "the 16 entries are pairwise non-conjugate in S6", conjugate_pairs.empty(),
             conjugate_pairs.empty() ? "120 pairs checked" : "conjugate: " + join(conjugate_pairs, ", "), "catalog"));
  static const std::pair<const char*, const char*> kEven[] = {{"G5", "G4"}, {"G7", "G6"}, {"G10", "G9"}, {"G14", "G13"}};
  for (auto [sub, super] : kEven) {
    PermGroup even = even_part(catalog_entry(super).group());
    PermGroup g = catalog_entry(sub).group();
    r.add(make(std::string("catalog:") + sub + ":even-part", "catalog", std::string(sub) + " = " + super + " cap A6",
               same_elements(even, g), "|" + std::string(super) + " cap A6| = " + std::to_string(even.order()),
               std::string("catalog:") + sub));
  }
  r.data = {{"entries", entries}};
  return r;
}

Report wreath_report(const std::string& g_text, const std::string& h_text, const std::optional<std::string>& expect_conjugate) {
  WreathSpec spec{resolve_group(g_text), resolve_group(h_text)};
  PermGroup w = wreath_product(spec);
  Report r;
  r.command = "wreath --g " + g_text + " --h " + h_text;
  std::string id = "wreath:" + h_text + "-wr-" + g_text;
  std::uint64_t want = ipow(spec.h.order(), spec.m()) * spec.g.order();
  r.add(make(id + ":order", "wreath", "|H wr G| = |H|^m |G| = " + std::to_string(want), w.order() == want,
             "enumerated " + std::to_string(w.order()) + " on " + std::to_string(w.degree()) + " points", id));
  if (expect_conjugate) {
    const CatalogEntry& e = catalog_entry(*expect_conjugate);
    bool ok = false;
    std::string detail;
    if (w.degree() != 6) {
      detail = "degree " + std::to_string(w.degree()) + " differs from 6";
    } else {
      ConjugacyResult c = are_conjugate(6, w, e.group());
      ok = c.conjugate;
      detail = ok ? "witness " + c.witness->to_string() : "no conjugating permutation";
    }
    r.add(make(id + ":conjugate", "wreath", h_text + " wr " + g_text + " is conjugate in S6 to " + e.id, ok, detail, id));
  }
  r.data = {{"degree", w.degree()}, {"order", w.order()}, {"generators", generator_list(w)}};
  return r;
}

Report wreath_fixtures_report() {
  struct Fixture {
    const char* g;
    const char* h;
    std::optional<std::string> conj;
  };
  const Fixture fixtures[] = {{"S3", "S2", "G4"}, {"C2", "C3", "G12"}, {"C2", "S3", "G9"}, {"C3", "C2", {}}, {"C2", "C2", {}}};
  Report r;
  r.command = "wreath fixtures";
  for (const auto& f : fixtures) r.merge(wreath_report(f.g, f.h, f.conj));
  return r;
}

std::vector<Permutation> classical_sylow_generators(std::uint64_t p) {
  std::size_t n = p * p;
  std::string sigma = "(";
  for (std::uint64_t k = 0; k < p; ++k) sigma += (k ? "," : "") + std::to_string(1 + k * p);
  sigma += ")";
  std::string tau;
  for (std::uint64_t b = 0; b < p; ++b) {
    tau += "(";
    for (std::uint64_t k = 0; k < p; ++k) tau += (k ? "," : "") + std::to_string(b * p + k + 1);
    tau += ")";
  }
  return {Permutation::parse(sigma, n), Permutation::parse(tau, n)};
}

Report sylow_report(std::uint64_t p, std::size_t n, bool check) {
  if (!is_prime(p)) throw DomainError("sylow: " + std::to_string(p) + " is not prime");
  if (n < 1 || n > 12) throw DomainError("sylow: n must be between 1 and 12");
  PermGroup s = sylow_subgroup_sn(p, n);
  Report r;
  r.command = "sylow -p " + std::to_string(p) + " -n " + std::to_string(n) + (check ? " --check" : "");
  std::string id = "sylow:" + std::to_string(p) + ":" + std::to_string(n);
  std::uint64_t nu = factorial_valuation(p, n);
  std::uint64_t want = ipow(p, nu);
  r.add(make(id + ":order", "sylow", "order p^v with v = " + std::to_string(nu) + " the exponent of p in n!", s.order() == want,
             "enumerated " + std::to_string(s.order()) + ", expected " + std::to_string(want), id));
  if (check) {
    bool pgroup = std::all_of(s.elements().begin(), s.elements().end(), [&](const Permutation& e) { return is_power_of(e.order(), p); });
    r.add(make(id + ":p-group", "sylow", "every element has p-power order", pgroup, "", id));
    if (n == p * p && n <= kMaxConjugacyDegree) {
      auto gens = classical_sylow_generators(p);
      PermGroup classical(n, gens);
      ConjugacyResult c = are_conjugate(n, s, classical);
      r.add(make(id + ":classical", "sylow", "conjugate to <" + gens[0].to_string() + ", " + gens[1].to_string() + ">", c.conjugate,
                 c.conjugate ? "witness " + c.witness->to_string() : "no conjugating permutation", id));
    }
  }
  r.data = {{"p", p}, {"n", n}, {"order", s.order()}, {"generators", generator_list(s)}};
  return r;
}

Report sylow_fixtures_report() {
  Report r;
  r.command = "sylow fixtures";
  const std::pair<std::uint64_t, std::size_t> fixtures[] = {{2, 4}, {2, 6}, {3, 9}, {2, 8}};
  for (auto [p, n] : fixtures) r.merge(sylow_report(p, n, true));
  return r;
}

Report embedding_report(const PermGroup& g, const std::string& name) {
  Report r;
  r.command = "embed " + name;
  std::string id = "embedding:" + name;
  RegularEmbedding e = regular_embedding(g);
  r.add(make(id + ":equivariant", "embedding", "x_i -> sum over {g : g(1) = i} of x(g) commutes with the group", e.equivariant,
             "checked on " + std::to_string(g.generators().size()) + " generators", id));
  r.add(make(id + ":injective", "embedding", "the embedding into the regular representation is injective", e.injective,
             std::to_string(e.matrix.size()) + " x " + std::to_string(e.columns.size()) + " matrix", id));
  nlohmann::json reps = nlohmann::json::array();
  for (const auto& c : e.coset_reps) reps.push_back(c.to_string());
  r.data = {{"group", name}, {"order", g.order()}, {"coset_representatives", reps}, {"matrix", e.matrix}};
  return r;
}

Report embedding_fixtures_report() {
  Report r;
  r.command = "embed fixtures";
  for (const auto& e : catalog()) r.merge(embedding_report(e.group(), e.id));
  bool rejected = false;
  std::string detail = "accepted";
  try {
    regular_embedding(PermGroup::parse("degree=6; (1,2)"));
  } catch (const NotTransitive& ex) {
    rejected = true;
    detail = ex.what();
  }
  r.add(make("embedding:control", "embedding", "the intransitive group <(1,2)> on 6 points is rejected", rejected, detail, "embedding"));
  return r;
}

Report product_embedding_report(const PermGroup& a, const PermGroup& b) {
  ProductEmbeddingReport e = product_embedding_check(a, b);
  Report r;
  r.command = "embed product";
  std::string id = "product-embedding:" + std::to_string(e.m) + "x" + std::to_string(e.n);
  r.add(make(id + ":equivariant", "embedding", "x_i -> sum_j z_ij, y_j -> sum_i z_ij commutes with the product group", e.equivariant,
             "", id));
  // sum_i x_i and sum_j y_j have the same image, so the kernel is one-dimensional.
  std::size_t want = e.m + e.n - 1;
  r.add(make(id + ":rank", "embedding", "rank m + n - 1 = " + std::to_string(want), e.rank == want,
             "rank " + std::to_string(e.rank) + ", injective: " + (e.injective ? "yes" : "no"), id));
  r.data = {{"m", e.m}, {"n", e.n}, {"rank", e.rank}, {"injective", e.injective}, {"matrix", e.matrix}};
  return r;
}

Report polarization_report() {
  Report r;
  r.command = "polarization";
  Field q;
  // The three displayed forms, built directly as sums over index pairs.
  for (std::size_t m = 2; m <= 5; ++m) {
    std::size_t nv = 2 * m;
    auto X = [&](std::size_t i, std::size_t t) { return MultiPoly::variable(q, nv, i * 2 + t); };
    MultiPoly a(q, nv), b(q, nv), c(q, nv);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (i < j) a += X(i, 0) * X(j, 0);
        if (i != j) b += X(i, 0) * X(j, 1);
        if (i < j) c += X(i, 1) * X(j, 1);
      }
    }
    auto got = polarize_elementary(m, 2, 2, q);
    bool ok = got.size() == 3 && got[0] == a && got[1] == b && got[2] == c;
    std::string detail;
    for (const auto& f : got) detail += (detail.empty() ? "" : " ; ") + f.to_string();
    r.add(make("polarization:f2:m" + std::to_string(m), "polarization",
               "the polarizations of f2 for N = 2 are sum_{i<j} X_i1 X_j1, sum_{i!=j} X_i1 X_j2, sum_{i<j} X_i2 X_j2", ok, detail,
               "polarization:f2"));
  }
  std::vector<std::string> bad_counts, bad_spec;
  std::size_t checked = 0;
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t N = 1; N <= 4; ++N) {
      std::size_t nv = m * N;
      std::vector<MultiPoly> diag(nv), first(nv);
      std::vector<std::size_t> col(m);
      for (std::size_t i = 0; i < m; ++i) {
        col[i] = i * N;
        for (std::size_t t = 0; t < N; ++t) {
          diag[i * N + t] = MultiPoly::variable(q, nv, i * N);
          first[i * N + t] = t == 0 ? MultiPoly::variable(q, nv, i * N) : MultiPoly(q, nv);
        }
      }
      for (std::size_t d = 1; d <= m; ++d) {
        ++checked;
        auto comps = polarize_elementary(m, N, d, q);
        std::uint64_t want = 1;
        for (std::size_t k = 1; k <= N - 1; ++k) want = want * (d + k) / k;
        std::string tag = "(m,N,d)=(" + std::to_string(m) + "," + std::to_string(N) + "," + std::to_string(d) + ")";
        if (comps.size() != want) bad_counts.push_back(tag);
        MultiPoly e = elementary_symmetric(m, d, q).remap(nv, col);
        MultiPoly sum(q, nv);
        for (const auto& f : comps) sum += f.compose(diag);
        bool ok = sum == e.scaled(Scalar(static_cast<long>(ipow(N, d)))) && comps.front().compose(first) == e;
        if (!ok) bad_spec.push_back(tag);
      }
    }
  }
  r.add(make("polarization:counts", "polarization", "there are C(d+N-1, N-1) polarized forms of e_d", bad_counts.empty(),
             bad_counts.empty() ? std::to_string(checked) + " cases" : "wrong: " + join(bad_counts, ", "), "polarization"));
  r.add(make("polarization:specialization", "polarization",
             "X_it -> X_i1 sends the sum of the forms to N^d e_d, and the (d,0,..,0) form restricts to e_d", bad_spec.empty(),
             bad_spec.empty() ? std::to_string(checked) + " cases" : "wrong: " + join(bad_spec, ", "), "polarization"));

  LinearAction swap = LinearAction::from_perm_group(PermGroup::parse("degree=4; (1,3)(2,4)"), q);
  std::vector<MultiPoly> gens = polarize_elementary(2, 2, 1, q);
  for (auto& f : polarize_elementary(2, 2, 2, q)) gens.push_back(f);
  graded_or_claim(r, "polarization:vector-invariants", "polarization:vector-invariants", gens, swap, 6);
  return r;
}

WreathProblem wreath_problem_from_json(const nlohmann::json& j, std::optional<std::uint64_t> characteristic) {
  if (!j.is_object()) throw ParseError("wreath spec: expected a JSON object");
  auto need = [&](const char* key) -> const nlohmann::json& {
    if (!j.contains(key)) throw ParseError(std::string("wreath spec: missing '") + key + "'");
    return j.at(key);
  };
  WreathProblem p;
  try {
    p.m = need("m").get<std::size_t>();
    p.n = need("n").get<std::size_t>();
    std::uint64_t c = characteristic.value_or(j.value("characteristic", std::uint64_t{0}));
    p.field = Field::of_characteristic(c);
    if (j.contains("constants")) {
      for (const auto& [name, v] : j.at("constants").items()) p.constants[name] = p.field.normalize(mpq_class(v.get<long>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("wreath spec: ") + e.what());
  }
  if (p.m < 1 || p.n < 1 || p.m > 9 || p.n > 9) throw ParseError("wreath spec: m and n must lie in 1..9");

  const auto& g = need("g");
  if (!g.is_string()) throw ParseError("wreath spec: 'g' must be a group spec string");
  p.g = resolve_group(g.get<std::string>());
  if (p.g.degree() != p.m) throw ParseError("wreath spec: 'g' must act on m points");

  VarList y = VarList::indexed("y", p.n);
  const auto& h = need("h");
  if (h.is_string()) {
    PermGroup hg = resolve_group(h.get<std::string>());
    if (hg.degree() != p.n) throw ParseError("wreath spec: 'h' must act on n points");
    p.h = LinearAction::from_perm_group(hg, p.field);
  } else if (h.is_object() && h.contains("generators")) {
    std::vector<std::vector<std::string>> images;
    std::vector<std::string> labels;
    try {
      images = h.at("generators").get<std::vector<std::vector<std::string>>>();
      labels = h.value("labels", std::vector<std::string>{});
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("wreath spec: 'h': ") + e.what());
    }
    while (labels.size() < images.size()) labels.push_back("h" + std::to_string(labels.size() + 1));
    p.h = LinearAction::from_images(p.field, y, images, labels, p.constants);
  } else {
    throw ParseError("wreath spec: 'h' must be a group spec or {generators: [...]}");
  }

  p.F = parse_list(ExprParser(p.field, y, p.constants), need("F"), "F");
  p.N = p.F.size();
  if (p.N < 1 || p.N > 9) throw ParseError("wreath spec: 'F' must have 1..9 entries");

  std::vector<std::string> xs, Xs;
  for (std::size_t i = 1; i <= p.m; ++i) {
    for (std::size_t k = 1; k <= p.n; ++k) xs.push_back("x" + std::to_string(i) + std::to_string(k));
    for (std::size_t t = 1; t <= p.N; ++t) Xs.push_back("X" + std::to_string(i) + std::to_string(t));
  }
  p.xvars = VarList(xs);
  const auto& H = need("H");
  if (H.is_string()) {
    if (H.get<std::string>() != "auto-polarize") throw ParseError("wreath spec: 'H' must be a list or \"auto-polarize\"");
    for (std::size_t d = 1; d <= p.m; ++d) {
      for (auto& f : polarize_elementary(p.m, p.N, d, p.field)) p.Hgens.push_back(std::move(f));
    }
  } else {
    p.Hgens = parse_list(ExprParser(p.field, VarList(Xs), p.constants), H, "H");
  }
  if (j.contains("claimed")) {
    try {
      p.claimed = j.at("claimed").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("wreath spec: 'claimed': ") + e.what());
    }
  }
  return p;
}

WreathProblem load_wreath_problem(const std::string& path, std::optional<std::uint64_t> characteristic) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return wreath_problem_from_json(j, characteristic);
}

const nlohmann::json& example_wreath_problem() {
  static const nlohmann::json j = nlohmann::json::parse(R"({
    "m": 2,
    "n": 3,
    "characteristic": 7,
    "constants": {"w": 2},
    "g": "S2",
    "h": {"generators": [["y1", "w*y2", "w^2*y3"]], "labels": ["tau"]},
    "F": ["y1", "y2^3", "y2*y3", "y3^3"],
    "H": "auto-polarize",
    "claimed": [
      "x11+x21", "x12^3+x22^3", "x12*x13+x22*x23", "x13^3+x23^3",
      "x11*x21", "x12^3*x22^3", "x12*x13*x22*x23", "x13^3*x23^3",
      "x11*x22^3+x21*x12^3", "x11*x22*x23+x21*x12*x13", "x11*x23^3+x21*x13^3",
      "x12^3*x22*x23+x22^3*x12*x13", "x12^3*x23^3+x22^3*x13^3", "x12*x13*x23^3+x22*x23*x13^3"
    ]
  })");
  return j;
}

Report invariants_report(const WreathProblem& p, const InvariantsOptions& opts) {
  if (!p.h) throw DomainError("wreath problem without an action of H");
  LinearAction action = LinearAction::wreath(p.g, *p.h);
  std::vector<MultiPoly> gens = generators_of(p, true);
  if (opts.negative_control && !gens.empty()) gens.pop_back();
  Report r;
  r.command = "invariants wreath";
  graded_or_claim(r, "invariants", "invariants:wreath", gens, action, opts.max_degree);
  nlohmann::json list = nlohmann::json::array();
  for (const auto& f : gens) list.push_back(f.to_string(p.xvars));
  r.data = {{"field", p.field.name()},
            {"group_order", action.order()},
            {"source", p.claimed.empty() ? "pipeline" : "claimed"},
            {"generators", list},
            {"max_degree", opts.max_degree}};
  return r;
}

Report example_wreath_report(int max_degree) {
  WreathProblem p = wreath_problem_from_json(example_wreath_problem());
  LinearAction action = LinearAction::wreath(p.g, *p.h);
  Report r;
  r.command = "invariants example";
  const std::string anchor = "example:wreath-s2-tau";
  r.add(make("example:order", "invariants", "the group S2 wr <tau> has order 18", action.order() == 18,
             "enumerated " + std::to_string(action.order()), anchor));

  std::vector<MultiPoly> pipeline = generators_of(p, false);
  graded_or_claim(r, "example:pipeline", anchor, pipeline, action, max_degree);

  std::vector<MultiPoly> published = generators_of(p, true);
  for (std::size_t k = 0; k < published.size(); ++k) {
    auto moved = action.moving_generator(published[k]);
    r.add(make("example:published:" + two_digits(k + 1), "invariants", p.claimed[k] + " is invariant", !moved,
               moved ? "moved by " + action.labels()[*moved] : "", anchor));
  }
  graded_or_claim(r, "example:published", anchor, published, action, max_degree);

  std::vector<MultiPoly> fewer = published;
  int dropped_degree = fewer.back().degree();
  fewer.pop_back();
  std::string detail;
  bool ok = false;
  try {
    GradedReport g = verify_invariant_generators(fewer, action, max_degree);
    ok = !g.pass && g.first_failure == dropped_degree;
    detail = g.pass ? "passed" : "first failure at degree " + std::to_string(*g.first_failure);
  } catch (const NotInvariant& e) {
    detail = e.what();
  }
  r.add(make("example:control", "invariants",
             "without " + p.claimed.back() + " the list fails first at degree " + std::to_string(dropped_degree), ok, detail, anchor));
  nlohmann::json list = nlohmann::json::array();
  for (const auto& f : pipeline) list.push_back(f.to_string(p.xvars));
  r.data = {{"pipeline_generators", list}};
  return r;
}

Report molien_report(const PermGroup& g, int max_degree) {
  std::vector<std::uint64_t> coeffs = molien_coefficients(g, max_degree);
  const auto& elems = g.elements();
  Report r;
  r.command = "molien";
  for (int d = 0; d <= max_degree; ++d) {
    // Orbits of monomials, each represented by its smallest image.
    std::set<Exponent> reps;
    for (const auto& e : monomials_of_degree(g.degree(), d)) {
      Exponent best = e;
      for (const auto& s : elems) {
        Exponent img(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) img[s(static_cast<Point>(i + 1)) - 1] = e[i];
        best = std::min(best, img);
      }
      reps.insert(best);
    }
    r.add(make("molien:degree:" + std::to_string(d), "invariants",
               "degree " + std::to_string(d) + ": Molien coefficient equals the number of monomial orbits", coeffs[d] == reps.size(),
               "Molien " + std::to_string(coeffs[d]) + ", orbits " + std::to_string(reps.size()), "molien"));
  }
  r.data = {{"coefficients", coeffs}, {"order", g.order()}};
  return r;
}

Report rho_report(bool negative_control) {
  PresentationImages imgs = PresentationImages::standard();
  if (negative_control) imgs.images[0] = Permutation::parse("(1,6)(2,3)", 6);
  Report r = verify_presentation_hom(imgs);
  r.merge(verify_rho_image(imgs));
  r.command = negative_control ? "verify rho --negative-control" : "verify rho";
  nlohmann::json list = nlohmann::json::array();
  for (const auto& s : imgs.images) list.push_back(s.to_string());
  r.data = {{"images", list}};
  return r;
}

Report characters_report() {
  Report r;
  r.command = "character --all";
  for (const auto& e : catalog()) r.merge(character_report(e.id));
  for (const char* id : {"G13", "G14"}) {
    InnerProducts ip = character_inner_products(catalog_entry(id).group());
    r.add(make(std::string("character:") + id + ":0-inner-products", "character", "(<chi, 1>, <chi, chi>) = (1, 2)",
               ip.with_trivial == 1 && ip.with_self == 2, "(" + ip.with_trivial.get_str() + ", " + ip.with_self.get_str() + ")",
               std::string("character:") + id));
  }
  return r;
}

Report verify_all(const AllOptions& opts) {
  std::vector<std::future<Report>> parts;
  auto launch = [&](auto fn) { parts.push_back(std::async(std::launch::async, fn)); };
  launch([] { return catalog_report(); });
  launch([] { return wreath_fixtures_report(); });
  launch([] { return sylow_fixtures_report(); });
  launch([] { return embedding_fixtures_report(); });
  launch([] { return product_embedding_report(PermGroup::symmetric(2), PermGroup::symmetric(3)); });
  launch([] { return polarization_report(); });
  launch([] { return example_wreath_report(); });
  launch([neg = opts.negative_control] { return rho_report(neg); });
  launch([] { return characters_report(); });
  for (const auto& id : builtin_case_ids()) {
    launch([id, v = opts.verify] {
      VerifyOptions o = v;
      // Each script runs in its own default characteristic unless the override is valid there.
      if (o.characteristic && !load_case(id).characteristic.allows(*o.characteristic)) o.characteristic.reset();
      return verify_case(id, o);
    });
  }
  Report r;
  r.command = "verify all";
  r.seed = opts.verify.seed;
  for (auto& f : parts) r.merge(f.get());
  r.sort();
  return r;
}

}  // namespace noether::cli

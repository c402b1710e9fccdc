#include "noether/invariants.hpp"

#include <algorithm>
#include <map>

#include "noether/error.hpp"
#include "noether/linalg.hpp"

namespace noether {

namespace {

void monomials_rec(std::size_t i, int left, Exponent& e, std::vector<Exponent>& out) {
  if (i + 1 == e.size()) {
    e[i] = static_cast<std::uint16_t>(left);
    out.push_back(e);
    return;
  }
  for (int k = left; k >= 0; --k) {
    e[i] = static_cast<std::uint16_t>(k);
    monomials_rec(i + 1, left - k, e, out);
  }
  e[i] = 0;
}

void multidegrees_rec(std::size_t i, unsigned left, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (i + 1 == cur.size()) {
    cur[i] = left;
    out.push_back(cur);
    return;
  }
  for (unsigned k = left + 1; k-- > 0;) {
    cur[i] = k;
    multidegrees_rec(i + 1, left - k, cur, out);
  }
}

// Echelon basis keyed by leading monomial; add() reports whether the input was independent.
class EchelonBasis {
 public:
  explicit EchelonBasis(Field field) : field_(field) {}

  bool add(MultiPoly p) {
    while (!p.is_zero()) {
      const auto& [lm, lc] = p.leading_term();
      auto it = pivots_.find(lm);
      if (it == pivots_.end()) {
        Scalar k = field_.inv(lc);
        Exponent key = lm;
        pivots_.emplace(std::move(key), p.scaled(k));
        return true;
      }
      p -= it->second.scaled(lc);
    }
    return false;
  }

  std::size_t size() const { return pivots_.size(); }
  std::vector<MultiPoly> basis() const {
    std::vector<MultiPoly> out;
    for (const auto& [e, p] : pivots_) out.push_back(p);
    return out;
  }

 private:
  Field field_;
  std::map<Exponent, MultiPoly, GrevlexLess> pivots_;
};

}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t nvars, int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponent e(nvars, 0);
  monomials_rec(0, d, e, out);
  std::sort(out.begin(), out.end(), GrevlexLess());
  return out;
}

MultiPoly elementary_symmetric(std::size_t m, std::size_t d, Field field) {
  if (d < 1 || d > m) throw DomainError("elementary_symmetric needs 1 <= d <= m");
  MultiPoly out(field, m);
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(d), true);
  do {
    Exponent e(m, 0);
    for (std::size_t i = 0; i < m; ++i) e[i] = pick[i] ? 1 : 0;
    out.add_term(e, Scalar(1));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::vector<std::vector<unsigned>> multidegrees(std::size_t N, unsigned d) {
  if (N == 0) throw DomainError("multidegrees needs N >= 1");
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(N, 0);
  multidegrees_rec(0, d, cur, out);
  return out;
}

std::vector<MultiPoly> polarize_elementary(std::size_t m, std::size_t N, std::size_t d, Field field) {
  if (d < 1 || d > m) throw DomainError("polarize_elementary needs 1 <= d <= m");
  if (N < 1) throw DomainError("polarize_elementary needs N >= 1");
  auto degs = multidegrees(N, static_cast<unsigned>(d));
  std::map<std::vector<unsigned>, std::size_t> slot;
  for (std::size_t k = 0; k < degs.size(); ++k) slot.emplace(degs[k], k);
  std::vector<MultiPoly> out(degs.size(), MultiPoly(field, m * N));

  // Each monomial of e_d picks d distinct rows i; expanding the product of the
  // linear forms sum_t X_it gives one term per choice of columns t.
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(d), true);
  do {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < m; ++i) {
      if (pick[i]) rows.push_back(i);
    }
    std::vector<std::size_t> cols(d, 0);
    for (;;) {
      Exponent e(m * N, 0);
      std::vector<unsigned> md(N, 0);
      for (std::size_t k = 0; k < d; ++k) {
        e[rows[k] * N + cols[k]] = 1;
        ++md[cols[k]];
      }
      out[slot.at(md)].add_term(e, Scalar(1));
      std::size_t k = 0;
      while (k < d && ++cols[k] == N) cols[k++] = 0;
      if (k == d) break;
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

MultiPoly reynolds(const LinearAction& action, const MultiPoly& f) {
  const auto& elems = action.elements();
  const Field& field = action.field();
  Scalar order = field.normalize(Scalar(static_cast<unsigned long>(elems.size())));
  if (Field::is_zero(order)) {
    throw ModularObstruction("group order " + std::to_string(elems.size()) + " is zero in " + field.name() +
                             "; the Reynolds operator is undefined");
  }
  MultiPoly sum(field, f.nvars());
  for (const auto& g : elems) sum += apply(g, f);
  return sum.scaled(field.inv(order));
}

std::vector<std::uint64_t> molien_coefficients(const PermGroup& group, int max_degree) {
  if (max_degree < 0) throw DomainError("max_degree must be nonnegative");
  const std::size_t D = static_cast<std::size_t>(max_degree);
  std::vector<mpz_class> total(D + 1, 0);
  for (const auto& [type, count] : group.cycle_type_histogram()) {
    // Coefficients of prod over cycles of 1/(1 - t^len).
    std::vector<mpz_class> series(D + 1, 0);
    series[0] = 1;
    for (std::size_t len : type) {
      for (std::size_t k = len; k <= D; ++k) series[k] += series[k - len];
    }
    for (std::size_t k = 0; k <= D; ++k) total[k] += series[k] * static_cast<unsigned long>(count);
  }
  std::vector<std::uint64_t> out;
  mpz_class order = static_cast<unsigned long>(group.order());
  for (auto& v : total) {
    if (v % order != 0) throw Error("Molien coefficient is not an integer; the enumeration is inconsistent");
    mpz_class q = v / order;
    out.push_back(q.get_ui());
  }
  return out;
}

std::vector<MultiPoly> wreath_invariant_generators(const std::vector<MultiPoly>& F, const std::vector<MultiPoly>& Hgens,
                                                   std::size_t m, std::size_t n, std::size_t N) {
  if (F.size() != N) throw DomainError("expected " + std::to_string(N) + " generators F_t, got " + std::to_string(F.size()));
  if (F.empty()) throw DomainError("empty generator list F");
  for (const auto& f : F) {
    if (f.nvars() != n) throw DomainError("each F_t must be a polynomial in " + std::to_string(n) + " variables");
  }
  for (const auto& h : Hgens) {
    if (h.nvars() != m * N) throw DomainError("each H_s must be a polynomial in " + std::to_string(m * N) + " variables");
  }
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::size_t> map(n);
    for (std::size_t j = 0; j < n; ++j) map[j] = i * n + j;
    for (std::size_t t = 0; t < N; ++t) images.push_back(F[t].remap(m * n, map));
  }
  std::vector<MultiPoly> out;
  for (const auto& h : Hgens) out.push_back(h.compose(images));
  return out;
}

std::size_t invariant_dimension(const LinearAction& action, int d) {
  std::vector<MultiPoly> images;
  for (const auto& e : monomials_of_degree(action.nvars(), d)) {
    images.push_back(reynolds(action, MultiPoly::monomial(action.field(), e, 1)));
  }
  return graded_span_dim(images, d);
}

GradedReport verify_invariant_generators(const std::vector<MultiPoly>& gens, const LinearAction& action, int max_degree) {
  if (max_degree < 0) throw DomainError("max_degree must be nonnegative");
  const Field& field = action.field();
  // Homogeneous pieces of the generators, remembering where each came from.
  std::vector<std::pair<MultiPoly, std::size_t>> pieces;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].nvars() != action.nvars() || !(gens[k].field() == field)) {
      throw DomainError("generator " + std::to_string(k + 1) + " does not live in the acted-on ring");
    }
    for (auto& [deg, part] : gens[k].homogeneous_components()) {
      if (deg > 0) pieces.emplace_back(part, k);
    }
  }
  for (const auto& [p, k] : pieces) {
    if (auto g = action.moving_generator(p)) {
      throw NotInvariant("generator " + std::to_string(k + 1) + " (" + gens[k].to_string() + ") is moved by " +
                             action.labels()[*g],
                         k, action.labels()[*g]);
    }
  }

  GradedReport rep;
  rep.max_degree = max_degree;
  bool molien = field.is_rational() && action.perm_group().has_value();
  rep.invariant_method = molien ? "molien" : "reynolds";
  std::vector<std::uint64_t> series;
  if (molien) series = molien_coefficients(*action.perm_group(), max_degree);

  std::vector<std::vector<MultiPoly>> basis(static_cast<std::size_t>(max_degree) + 1);
  basis[0].push_back(MultiPoly::constant(field, action.nvars(), 1));
  rep.pass = true;
  for (int d = 0; d <= max_degree; ++d) {
    if (d > 0) {
      EchelonBasis ech(field);
      for (const auto& [p, k] : pieces) {
        int e = p.degree();
        if (e > d) continue;
        for (const auto& b : basis[static_cast<std::size_t>(d - e)]) ech.add(p * b);
      }
      basis[static_cast<std::size_t>(d)] = ech.basis();
    }
    GradedRow row;
    row.degree = d;
    row.dim_subalgebra = basis[static_cast<std::size_t>(d)].size();
    row.dim_invariants = molien ? series[static_cast<std::size_t>(d)] : invariant_dimension(action, d);
    row.pass = row.dim_subalgebra == row.dim_invariants;
    if (!row.pass && !rep.first_failure) rep.first_failure = d;
    rep.pass = rep.pass && row.pass;
    rep.rows.push_back(row);
  }
  rep.note = "checked through degree " + std::to_string(max_degree) +
             "; agreement up to this horizon does not by itself prove generation in higher degrees";
  return rep;
}

}  // namespace noether

#include "noether/linear_action.hpp"

#include <deque>
#include <set>

#include "noether/error.hpp"
#include "noether/linalg.hpp"
#include "noether/parse.hpp"
#include "noether/wreath.hpp"

namespace noether {

LinearMap compose(const Field& field, const LinearMap& a, const LinearMap& b) {
  const std::size_t n = a.nvars();
  if (b.nvars() != n) throw DomainError("composing linear maps of different sizes");
  LinearMap out{std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar(0)))};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (Field::is_zero(b.rows[i][k])) continue;
      for (std::size_t l = 0; l < n; ++l) {
        if (Field::is_zero(a.rows[k][l])) continue;
        out.rows[i][l] = field.add(out.rows[i][l], field.mul(b.rows[i][k], a.rows[k][l]));
      }
    }
  }
  return out;
}

MultiPoly apply(const LinearMap& map, const MultiPoly& f) {
  const std::size_t n = map.nvars();
  if (f.nvars() != n) throw DomainError("linear map and polynomial have different variable counts");
  const Field& field = f.field();
  // Monomial maps (one nonzero per row) send monomials to monomials.
  std::vector<std::size_t> target(n);
  std::vector<Scalar> coeff(n);
  bool monomial = true;
  for (std::size_t i = 0; i < n && monomial; ++i) {
    std::size_t nonzero = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (!Field::is_zero(map.rows[i][k])) {
        ++nonzero;
        target[i] = k;
        coeff[i] = map.rows[i][k];
      }
    }
    monomial = nonzero == 1;
  }
  if (monomial) {
    MultiPoly out(field, n);
    Exponent e2(n);
    for (const auto& [e, c] : f.terms()) {
      std::fill(e2.begin(), e2.end(), 0);
      Scalar k = c;
      for (std::size_t i = 0; i < n; ++i) {
        if (!e[i]) continue;
        e2[target[i]] = static_cast<std::uint16_t>(e2[target[i]] + e[i]);
        if (coeff[i] != 1) k = field.mul(k, field.pow(coeff[i], e[i]));
      }
      out.add_term(e2, k);
    }
    return out;
  }
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly form(field, n);
    for (std::size_t k = 0; k < n; ++k) {
      Exponent e(n, 0);
      e[k] = 1;
      form.add_term(e, map.rows[i][k]);
    }
    images.push_back(std::move(form));
  }
  return f.compose(images);
}

LinearAction::LinearAction(Field field, std::size_t nvars, std::vector<LinearMap> generators, std::vector<std::string> labels)
    : field_(field),
      nvars_(nvars),
      generators_(std::move(generators)),
      labels_(std::move(labels)),
      elements_(std::make_shared<std::vector<LinearMap>>()),
      once_(std::make_shared<std::once_flag>()) {
  if (labels_.size() != generators_.size()) throw DomainError("one label per generator required");
  for (auto& g : generators_) {
    if (g.rows.size() != nvars_) throw DomainError("linear map has the wrong number of rows");
    for (auto& row : g.rows) {
      if (row.size() != nvars_) throw DomainError("linear map has the wrong number of columns");
      for (auto& v : row) v = field_.normalize(v);
    }
    if (rank(field_, g.rows) != nvars_) throw DomainError("linear map is not invertible over " + field_.name());
  }
}

LinearAction LinearAction::from_perm_group(const PermGroup& group, Field field) {
  const std::size_t n = group.degree();
  std::vector<LinearMap> gens;
  std::vector<std::string> labels;
  for (const auto& g : group.generators()) {
    LinearMap m{std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar(0)))};
    for (Point i = 1; i <= n; ++i) m.rows[i - 1][g(i) - 1] = 1;
    gens.push_back(std::move(m));
    labels.push_back(g.to_string());
  }
  LinearAction a(field, n, std::move(gens), std::move(labels));
  a.perm_group_ = group;
  return a;
}

LinearAction LinearAction::from_images(Field field, const VarList& vars, const std::vector<std::vector<std::string>>& generator_images,
                                       std::vector<std::string> labels, const std::map<std::string, Scalar>& constants) {
  const std::size_t n = vars.size();
  ExprParser parser(field, vars, constants);
  std::vector<LinearMap> gens;
  for (const auto& images : generator_images) {
    if (images.size() != n) throw DomainError("each generator needs " + std::to_string(n) + " variable images");
    LinearMap m{std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar(0)))};
    for (std::size_t i = 0; i < n; ++i) {
      MultiPoly p = parser.parse_poly(images[i]);
      if (p.is_zero() || !p.is_homogeneous() || p.degree() != 1) throw DomainError("image \"" + images[i] + "\" is not a linear form");
      for (const auto& [e, c] : p.terms()) {
        for (std::size_t k = 0; k < n; ++k) {
          if (e[k]) m.rows[i][k] = c;
        }
      }
    }
    gens.push_back(std::move(m));
  }
  return LinearAction(field, n, std::move(gens), std::move(labels));
}

LinearAction LinearAction::wreath(const PermGroup& g, const LinearAction& h) {
  const std::size_t m = g.degree(), n = h.nvars();
  const std::size_t total = m * n;
  std::vector<LinearMap> gens;
  std::vector<std::string> labels;
  for (std::size_t l = 1; l <= m; ++l) {
    for (std::size_t k = 0; k < h.generators().size(); ++k) {
      const LinearMap& b = h.generators()[k];
      LinearMap a{std::vector<std::vector<Scalar>>(total, std::vector<Scalar>(total, Scalar(0)))};
      for (std::size_t v = 0; v < total; ++v) a.rows[v][v] = 1;
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t row = (l - 1) * n + j;
        a.rows[row][row] = 0;
        for (std::size_t t = 0; t < n; ++t) a.rows[row][(l - 1) * n + t] = b.rows[j][t];
      }
      gens.push_back(std::move(a));
      labels.push_back("alpha" + std::to_string(l) + "(" + h.labels()[k] + ")");
    }
  }
  for (const auto& s : g.generators()) {
    LinearMap a{std::vector<std::vector<Scalar>>(total, std::vector<Scalar>(total, Scalar(0)))};
    for (Point i = 1; i <= m; ++i) {
      for (std::size_t j = 0; j < n; ++j) a.rows[(i - 1) * n + j][(s(i) - 1) * n + j] = 1;
    }
    gens.push_back(std::move(a));
    labels.push_back(s.to_string());
  }
  LinearAction out(h.field(), total, std::move(gens), std::move(labels));
  if (h.perm_group()) out.perm_group_ = wreath_product(WreathSpec{g, *h.perm_group()});
  return out;
}

const std::vector<LinearMap>& LinearAction::elements(std::size_t cap) const {
  std::call_once(*once_, [&] {
    LinearMap id{std::vector<std::vector<Scalar>>(nvars_, std::vector<Scalar>(nvars_, Scalar(0)))};
    for (std::size_t i = 0; i < nvars_; ++i) id.rows[i][i] = 1;
    std::set<LinearMap> seen{id};
    std::vector<LinearMap> out{id};
    for (std::size_t next = 0; next < out.size(); ++next) {
      for (const auto& s : generators_) {
        LinearMap e = compose(field_, s, out[next]);
        if (seen.insert(e).second) {
          if (out.size() >= cap) throw CapExceeded("linear group has more than " + std::to_string(cap) + " elements");
          out.push_back(std::move(e));
        }
      }
    }
    *elements_ = std::move(out);
  });
  return *elements_;
}

std::optional<std::size_t> LinearAction::moving_generator(const MultiPoly& f) const {
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    if (!(apply(generators_[k], f) == f)) return k;
  }
  return std::nullopt;
}

}  // namespace noether

#include "properties.hpp"

#include <algorithm>
#include <set>

#include "noether/catalog.hpp"
#include "noether/invariants.hpp"
#include "noether/linear_action.hpp"
#include "noether/ratfunc.hpp"

namespace noether::testing {

namespace {

std::uint64_t next(std::uint64_t& state) {
  // splitmix64
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::size_t below(std::uint64_t& state, std::size_t n) { return static_cast<std::size_t>(next(state) % n); }

const Permutation& random_element(const PermGroup& g, std::uint64_t& state) {
  const auto& e = g.elements();
  return e[below(state, e.size())];
}

}  // namespace

Permutation random_permutation(std::size_t degree, std::uint64_t& state) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i + 1);
  for (std::size_t i = degree; i > 1; --i) std::swap(images[i - 1], images[below(state, i)]);
  return Permutation::from_images(images);
}

MultiPoly random_poly(const Field& field, std::size_t nvars, int max_degree, std::size_t terms, std::uint64_t& state) {
  MultiPoly f(field, nvars);
  for (std::size_t t = 0; t < terms; ++t) {
    Exponent e(nvars, 0);
    int d = static_cast<int>(below(state, static_cast<std::size_t>(max_degree) + 1));
    for (int k = 0; k < d; ++k) ++e[below(state, nvars)];
    long c = static_cast<long>(below(state, 19)) - 9;
    f.add_term(e, field.from_int(c));
  }
  return f;
}

std::size_t monomial_orbit_count(const PermGroup& g, int d) {
  const std::size_t n = g.degree();
  std::set<Exponent> seen;
  std::size_t orbits = 0;
  // Walk all exponent vectors of degree d; each unseen one starts a new orbit.
  Exponent e(n, 0);
  std::vector<Exponent> all;
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = static_cast<std::uint16_t>(left);
      all.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = static_cast<std::uint16_t>(k);
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  for (const auto& m : all) {
    if (seen.count(m)) continue;
    ++orbits;
    for (const auto& s : g.elements()) {
      Exponent img(n);
      for (std::size_t i = 0; i < n; ++i) img[s(static_cast<Point>(i + 1)) - 1] = m[i];
      seen.insert(img);
    }
  }
  return orbits;
}

PropertyResult group_axioms(std::size_t trials, std::uint64_t seed) {
  PropertyResult r;
  std::uint64_t state = seed;
  for (std::size_t t = 0; t < trials; ++t) {
    std::size_t n = 1 + below(state, 9);
    Permutation a = random_permutation(n, state), b = random_permutation(n, state), c = random_permutation(n, state);
    Permutation id = Permutation::identity(n);
    r.record((a * b) * c == a * (b * c), "associativity " + a.to_string() + " " + b.to_string() + " " + c.to_string());
    r.record(a * id == a && id * a == a, "identity " + a.to_string());
    r.record((a * a.inverse()).is_identity() && (a.inverse() * a).is_identity(), "inverse " + a.to_string());
    r.record(power(a, static_cast<long long>(a.order())).is_identity(), "order " + a.to_string());
    r.record((a * b).sign() == a.sign() * b.sign(), "sign " + a.to_string() + " " + b.to_string());
    for (std::size_t i = 1; i <= n; ++i) {
      if ((a * b)(static_cast<Point>(i)) != a(b(static_cast<Point>(i)))) {
        r.record(false, "composition convention " + a.to_string() + " " + b.to_string());
        break;
      }
    }
  }
  const auto& cat = catalog();
  for (std::size_t t = 0; t < trials; ++t) {
    PermGroup g = cat[below(state, cat.size())].group();
    const Permutation& x = random_element(g, state);
    const Permutation& y = random_element(g, state);
    r.record(g.contains(x * y) && g.contains(x.inverse()), "closure in " + g.to_spec());
  }
  return r;
}

PropertyResult reynolds_properties(std::size_t trials, std::uint64_t seed) {
  PropertyResult r;
  std::uint64_t state = seed;
  const auto& cat = catalog();
  // Only the smaller groups, to keep each average cheap.
  std::vector<std::size_t> small;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (cat[i].order <= 72) small.push_back(i);
  }
  for (std::size_t t = 0; t < trials; ++t) {
    Field field = t % 2 ? Field::prime(7) : Field();
    const CatalogEntry& e = cat[small[below(state, small.size())]];
    LinearAction action = LinearAction::from_perm_group(e.group(), field);
    MultiPoly f = random_poly(field, 6, 3, 4, state);
    MultiPoly rf = reynolds(action, f);
    r.record(reynolds(action, rf) == rf, "idempotence for " + e.id + " on " + f.to_string());
    bool fixed = true;
    for (const auto& g : action.generators()) fixed = fixed && apply(g, rf) == rf;
    const auto& elems = action.elements();
    const LinearMap& g = elems[below(state, elems.size())];
    r.record(fixed && reynolds(action, apply(g, f)) == rf, "equivariance for " + e.id + " on " + f.to_string());
  }
  return r;
}

PropertyResult molien_vs_orbits(int max_degree) {
  PropertyResult r;
  for (const auto& e : catalog()) {
    PermGroup g = e.group();
    auto coeffs = molien_coefficients(g, max_degree);
    for (int d = 0; d <= max_degree; ++d) {
      r.record(coeffs[static_cast<std::size_t>(d)] == monomial_orbit_count(g, d), e.id + " degree " + std::to_string(d));
    }
  }
  return r;
}

PropertyResult substitution_homomorphism(std::size_t trials, std::uint64_t seed) {
  PropertyResult r;
  std::uint64_t state = seed;
  for (std::size_t t = 0; t < trials; ++t) {
    Field field = t % 3 == 2 ? Field::prime(2) : Field();
    std::size_t n = 2 + below(state, 4);
    auto random_action = [&](const std::string& label) {
      if (below(state, 2) == 0) {
        Permutation p = random_permutation(n, state);
        auto imgs = p.images();
        return SubstitutionAction::from_permutation(field, imgs, label);
      }
      // x_i -> c x_{p(i)}^{+-1}
      Permutation p = random_permutation(n, state);
      SubstitutionAction a{label, {}};
      for (std::size_t i = 0; i < n; ++i) {
        RatFunc v = RatFunc::variable(field, n, p(static_cast<Point>(i + 1)) - 1);
        if (below(state, 2)) v = v.inverse();
        long c = 1 + static_cast<long>(below(state, 3));
        if (field.characteristic() == 2) c = 1;
        a.images.push_back(RatFunc::constant(field, n, field.from_int(c)) * v);
      }
      return a;
    };
    SubstitutionAction outer = random_action("a"), inner = random_action("b");
    MultiPoly f = random_poly(field, n, 3, 3, state);
    RatFunc lhs = substitute(substitute(f, inner.images), outer.images);
    RatFunc rhs = substitute(f, compose(outer, inner).images);
    r.record(lhs == rhs, "composition on " + f.to_string());

    Permutation p = random_permutation(n, state), q = random_permutation(n, state);
    auto pi = p.images(), qi = q.images(), pqi = (p * q).images();
    SubstitutionAction sp = SubstitutionAction::from_permutation(field, pi, "p");
    SubstitutionAction sq = SubstitutionAction::from_permutation(field, qi, "q");
    SubstitutionAction spq = SubstitutionAction::from_permutation(field, pqi, "pq");
    SubstitutionAction c = compose(sp, sq);
    bool same = true;
    for (std::size_t i = 0; i < n; ++i) same = same && c.images[i] == spq.images[i];
    r.record(same, "permutation action " + p.to_string() + " " + q.to_string());
  }
  return r;
}

}  // namespace noether::testing

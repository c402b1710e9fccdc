#include "noether/wreath.hpp"

#include "noether/error.hpp"
#include "noether/field.hpp"
#include "noether/linalg.hpp"

namespace noether {

Point PointIndexing::point(Point j, Point i) const {
  if (j < 1 || j > n || i < 1 || i > m) throw DomainError("wreath coordinates out of range");
  return static_cast<Point>((i - 1) * n + j);
}

std::pair<Point, Point> PointIndexing::coords(Point p) const {
  if (p < 1 || p > m * n) throw DomainError("wreath point out of range");
  return {static_cast<Point>((p - 1) % n + 1), static_cast<Point>((p - 1) / n + 1)};
}

Permutation alpha_generator(std::size_t l, const Permutation& h, const WreathSpec& spec) {
  const std::size_t m = spec.m(), n = spec.n();
  if (l < 1 || l > m) throw DomainError("block index " + std::to_string(l) + " out of range 1.." + std::to_string(m));
  if (h.degree() != n) throw DomainError("h must act on " + std::to_string(n) + " points");
  PointIndexing idx{m, n};
  std::vector<Point> images(m * n);
  for (Point i = 1; i <= m; ++i) {
    for (Point j = 1; j <= n; ++j) images[idx.point(j, i) - 1] = i == l ? idx.point(h(j), i) : idx.point(j, i);
  }
  return Permutation::from_images(images);
}

Permutation block_permutation(const Permutation& g, std::size_t n) {
  const std::size_t m = g.degree();
  PointIndexing idx{m, n};
  std::vector<Point> images(m * n);
  for (Point i = 1; i <= m; ++i) {
    for (Point j = 1; j <= n; ++j) images[idx.point(j, i) - 1] = idx.point(j, g(i));
  }
  return Permutation::from_images(images);
}

PermGroup wreath_product(const WreathSpec& spec) {
  std::vector<Permutation> gens;
  for (std::size_t l = 1; l <= spec.m(); ++l) {
    for (const auto& h : spec.h.generators()) gens.push_back(alpha_generator(l, h, spec));
  }
  for (const auto& g : spec.g.generators()) gens.push_back(block_permutation(g, spec.n()));
  return PermGroup(spec.m() * spec.n(), std::move(gens));
}

WreathElement wreath_multiply(const WreathElement& a, const WreathElement& b) {
  const std::size_t m = a.g.degree();
  if (b.g.degree() != m || a.alpha.size() != m || b.alpha.size() != m) throw DomainError("wreath elements of different shapes");
  Permutation ginv = a.g.inverse();
  WreathElement out{std::vector<Permutation>(m), a.g * b.g};
  for (Point x = 1; x <= m; ++x) out.alpha[x - 1] = a.alpha[x - 1] * b.alpha[ginv(x) - 1];
  return out;
}

Point wreath_act(const WreathElement& e, Point p, const PointIndexing& idx) {
  auto [j, i] = idx.coords(p);
  Point gi = e.g(i);
  return idx.point(e.alpha[gi - 1](j), gi);
}

Permutation to_permutation(const WreathElement& e, const PointIndexing& idx) {
  std::vector<Point> images(idx.m * idx.n);
  for (Point p = 1; p <= images.size(); ++p) images[p - 1] = wreath_act(e, p, idx);
  return Permutation::from_images(images);
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t m = a.degree(), n = b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> images = g.images();
    for (Point k = 1; k <= n; ++k) images.push_back(static_cast<Point>(m + k));
    gens.push_back(Permutation::from_images(images));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> images;
    for (Point k = 1; k <= m; ++k) images.push_back(k);
    for (Point k = 1; k <= n; ++k) images.push_back(static_cast<Point>(m + g(k)));
    gens.push_back(Permutation::from_images(images));
  }
  return PermGroup(m + n, std::move(gens));
}

std::uint64_t legendre_valuation(std::uint64_t p, std::uint64_t n) {
  if (p < 2) throw DomainError("legendre_valuation needs p >= 2");
  std::uint64_t v = 0;
  while (n) {
    n /= p;
    v += n;
  }
  return v;
}

PermGroup sylow_tower(std::uint64_t p, unsigned r) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (r == 0) return PermGroup::trivial(1);
  PermGroup cp = PermGroup::cyclic(p);
  PermGroup level = cp;
  for (unsigned k = 2; k <= r; ++k) level = wreath_product(WreathSpec{level, cp});
  return level;
}

PermGroup sylow_subgroup_sn(std::uint64_t p, std::size_t n) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (n < 1) throw DomainError("sylow_subgroup_sn needs n >= 1");
  std::vector<unsigned> digits;
  for (std::size_t rest = n; rest; rest /= p) digits.push_back(static_cast<unsigned>(rest % p));
  std::optional<PermGroup> acc;
  std::size_t used = 0;
  for (std::size_t t = digits.size(); t-- > 1;) {
    for (unsigned c = 0; c < digits[t]; ++c) {
      PermGroup block = sylow_tower(p, static_cast<unsigned>(t));
      used += block.degree();
      acc = acc ? direct_product(*acc, block) : block;
    }
  }
  std::size_t fixed = n - used;
  if (!acc) return PermGroup::trivial(n);
  if (fixed) acc = direct_product(*acc, PermGroup::trivial(fixed));
  return *acc;
}

ProductEmbeddingReport product_embedding_check(const PermGroup& a, const PermGroup& b) {
  const std::size_t m = a.degree(), n = b.degree();
  ProductEmbeddingReport rep;
  rep.m = m;
  rep.n = n;
  rep.matrix.assign(m + n, std::vector<int>(m * n, 0));
  auto col = [n](std::size_t i, std::size_t j) { return (i - 1) * n + (j - 1); };
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      rep.matrix[i - 1][col(i, j)] = 1;
      rep.matrix[m + j - 1][col(i, j)] = 1;
    }
  }
  // A generator (g, h) sends row r to row (g, h).r and z_ij to z_{g(i), h(j)}.
  auto check = [&](const Permutation& g, const Permutation& h) {
    for (std::size_t r = 0; r < m + n; ++r) {
      std::size_t target = r < m ? g(static_cast<Point>(r + 1)) - 1 : m + h(static_cast<Point>(r - m + 1)) - 1;
      std::vector<int> moved(m * n, 0);
      for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
          if (rep.matrix[r][col(i, j)]) moved[col(g(static_cast<Point>(i)), h(static_cast<Point>(j)))] = 1;
        }
      }
      if (moved != rep.matrix[target]) return false;
    }
    return true;
  };
  bool ok = true;
  for (const auto& g : a.generators()) ok = ok && check(g, Permutation::identity(n));
  for (const auto& h : b.generators()) ok = ok && check(Permutation::identity(m), h);
  rep.equivariant = ok;
  Matrix rows(m + n, std::vector<Scalar>(m * n));
  for (std::size_t r = 0; r < m + n; ++r) {
    for (std::size_t c = 0; c < m * n; ++c) rows[r][c] = rep.matrix[r][c];
  }
  rep.rank = rank(Field::rationals(), rows);
  rep.injective = rep.rank == m + n;
  return rep;
}

}  // namespace noether

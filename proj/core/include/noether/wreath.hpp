#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "noether/perm_group.hpp"

namespace noether {

/// H wr G with G acting on m points (blocks) and H on n points (within a block).
struct WreathSpec {
  PermGroup g;
  PermGroup h;

  std::size_t m() const { return g.degree(); }
  std::size_t n() const { return h.degree(); }
};

/// Pair (j, i) with j in 1..n (position in block) and i in 1..m (block) is point (i-1)*n + j.
struct PointIndexing {
  std::size_t m;
  std::size_t n;

  Point point(Point j, Point i) const;
  /// Inverse of point(): returns (j, i).
  std::pair<Point, Point> coords(Point p) const;
};

/// h acting inside block l, identity elsewhere.
Permutation alpha_generator(std::size_t l, const Permutation& h, const WreathSpec& spec);
/// (j, i) -> (j, g(i)).
Permutation block_permutation(const Permutation& g, std::size_t n);

/// Generated by all alpha_generator(l, h) for h in gens(H) and the block permutations of gens(G).
PermGroup wreath_product(const WreathSpec& spec);

/// Element (alpha; g) of the semidirect product A x| G with A = H^m.
struct WreathElement {
  std::vector<Permutation> alpha;  // alpha[i-1] in H
  Permutation g;
};

/// (alpha; g1)(beta; g2) = (alpha * g1.beta; g1 g2) with (g.beta)(x) = beta(g^-1 x).
WreathElement wreath_multiply(const WreathElement& a, const WreathElement& b);
/// (alpha; g).(j, i) = (alpha(g(i))(j), g(i)).
Point wreath_act(const WreathElement& e, Point p, const PointIndexing& idx);
Permutation to_permutation(const WreathElement& e, const PointIndexing& idx);

/// a on points 1..m, b on m+1..m+n.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

/// Exponent of p in n!.
std::uint64_t legendre_valuation(std::uint64_t p, std::uint64_t n);

/// P_1 = C_p, P_r = C_p wr P_{r-1}, acting on p^r points.
PermGroup sylow_tower(std::uint64_t p, unsigned r);

/// Sylow p-subgroup of S_n: n written in base p, copies of P_t placed on consecutive
/// blocks from the highest power down, remaining points fixed.
PermGroup sylow_subgroup_sn(std::uint64_t p, std::size_t n);

struct ProductEmbeddingReport {
  std::size_t m = 0;
  std::size_t n = 0;
  /// (m+n) x mn matrix; rows x_1..x_m then y_1..y_n, column (i-1)*n + j is z_ij.
  std::vector<std::vector<int>> matrix;
  bool equivariant = false;
  std::size_t rank = 0;
  bool injective = false;
};

/// The map x_i -> sum_j z_ij, y_j -> sum_i z_ij from the sum of the two permutation
/// modules into the grid module, checked generator by generator.
ProductEmbeddingReport product_embedding_check(const PermGroup& a, const PermGroup& b);

}  // namespace noether

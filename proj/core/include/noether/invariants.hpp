#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "noether/linear_action.hpp"

namespace noether {

/// Default verification depth for generator claims.
inline constexpr int kDefaultMaxDegree = 6;

/// All exponent vectors of total degree d in n variables, ascending in grevlex.
std::vector<Exponent> monomials_of_degree(std::size_t nvars, int d);

/// e_d(X_1..X_m). Throws DomainError unless 1 <= d <= m.
MultiPoly elementary_symmetric(std::size_t m, std::size_t d, Field field = Field());

/// Multidegrees (d_1..d_N) summing to d, lexicographically decreasing: (d,0,..,0) first.
std::vector<std::vector<unsigned>> multidegrees(std::size_t N, unsigned d);

/// Multihomogeneous components of e_d(v_1..v_m) with v_i = (X_i1..X_iN), one per
/// multidegree in the order of multidegrees(N, d). Variable X_it has index (i-1)N + (t-1).
std::vector<MultiPoly> polarize_elementary(std::size_t m, std::size_t N, std::size_t d, Field field = Field());

/// Average of g(f) over the group. Throws ModularObstruction when |G| is zero in the field.
MultiPoly reynolds(const LinearAction& action, const MultiPoly& f);

/// Hilbert series coefficients of k[x]^G for a permutation action in characteristic 0, degrees 0..D.
std::vector<std::uint64_t> molien_coefficients(const PermGroup& group, int max_degree);

/// Phi(H_s) where Phi(X_it) = F_t(x_i1..x_in); x_ij has index (i-1)n + (j-1).
std::vector<MultiPoly> wreath_invariant_generators(const std::vector<MultiPoly>& F, const std::vector<MultiPoly>& Hgens,
                                                   std::size_t m, std::size_t n, std::size_t N);

struct GradedRow {
  int degree = 0;
  std::size_t dim_invariants = 0;
  std::size_t dim_subalgebra = 0;
  bool pass = false;
};

struct GradedReport {
  int max_degree = 0;
  /// "reynolds" or "molien".
  std::string invariant_method;
  std::vector<GradedRow> rows;
  bool pass = false;
  /// Lowest failing degree, if any.
  std::optional<int> first_failure;
  std::string note;
};

/// Compares, degree by degree up to D, the span of products of the generators with the
/// invariant space of the action. Inhomogeneous generators are split into their
/// homogeneous components. Throws NotInvariant naming the generator and the group
/// generator that moves it.
GradedReport verify_invariant_generators(const std::vector<MultiPoly>& gens, const LinearAction& action,
                                         int max_degree = kDefaultMaxDegree);

/// dim of degree-d invariants: rank of the Reynolds images of all degree-d monomials.
std::size_t invariant_dimension(const LinearAction& action, int d);

}  // namespace noether

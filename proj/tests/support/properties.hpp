#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "noether/perm_group.hpp"
#include "noether/poly.hpp"

namespace noether::testing {

struct PropertyResult {
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
  void record(bool ok, const std::string& what) {
    ++trials;
    if (!ok && failures++ == 0) first_failure = what;
  }
};

Permutation random_permutation(std::size_t degree, std::uint64_t& state);

/// Random polynomial with up to `terms` terms of total degree <= max_degree.
MultiPoly random_poly(const Field& field, std::size_t nvars, int max_degree, std::size_t terms, std::uint64_t& state);

/// Orbits of degree-d monomials under a permutation group, counted by canonical images.
std::size_t monomial_orbit_count(const PermGroup& g, int d);

/// Associativity, identities and inverses for random permutations, plus closure of
/// random products inside catalog groups.
PropertyResult group_axioms(std::size_t trials, std::uint64_t seed);
/// R(R(f)) = R(f) and g R(f) = R(f) for random f and catalog groups over Q and F7.
PropertyResult reynolds_properties(std::size_t trials, std::uint64_t seed);
/// Molien coefficients against monomial orbit counts for every catalog group, degrees 0..D.
PropertyResult molien_vs_orbits(int max_degree);
/// f(inner)(outer) = f(outer o inner) for random permutation and monomial substitutions,
/// and permutation substitutions compose like permutations.
PropertyResult substitution_homomorphism(std::size_t trials, std::uint64_t seed);

}  // namespace noether::testing

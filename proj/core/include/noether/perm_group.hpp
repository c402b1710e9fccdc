#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "noether/permutation.hpp"

namespace noether {

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// Finitely generated subgroup of S_degree. Elements are enumerated on demand by
/// breadth-first closure of the generators and cached; copies share the cache.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  /// Group spec text: "degree=6; (1,2,3)(4,5,6) (1,4)".
  static PermGroup parse(std::string_view spec);

  static PermGroup trivial(std::size_t degree);
  static PermGroup symmetric(std::size_t degree);
  static PermGroup cyclic(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  /// All elements, identity first, in BFS discovery order.
  /// Throws CapExceeded if the group has more than `cap` elements.
  const std::vector<Permutation>& elements(std::size_t cap = kDefaultEnumerationCap) const;

  std::uint64_t order(std::size_t cap = kDefaultEnumerationCap) const { return elements(cap).size(); }

  bool contains(const Permutation& p) const;

  std::vector<Point> orbit(Point p) const;
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  /// Elements fixing point p.
  std::vector<Permutation> stabilizer(Point p) const;

  /// Multiset of cycle types over all elements; a conjugacy invariant.
  std::map<std::vector<std::size_t>, std::size_t> cycle_type_histogram() const;

  /// "degree=N; gen gen ..."
  std::string to_spec() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Permutation> elements;
    std::unordered_set<Permutation, PermutationHash> index;
  };

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Equality of element sets.
bool same_elements(const PermGroup& a, const PermGroup& b);

/// Every element of `sub` lies in `super`.
bool is_subgroup(const PermGroup& sub, const PermGroup& super);

/// Elements of `g` that are even permutations, as a group generated by them.
PermGroup even_part(const PermGroup& g);

struct ConjugacyResult {
  bool conjugate = false;
  std::optional<Permutation> witness;  // s with s * a * s^-1 = b
};

inline constexpr std::size_t kMaxConjugacyDegree = 9;

/// Brute-force search over S_degree for s with s a s^-1 = b as element sets.
/// Candidates are pruned first by order and cycle-type histogram.
ConjugacyResult are_conjugate(std::size_t degree, const PermGroup& a, const PermGroup& b);

}  // namespace noether

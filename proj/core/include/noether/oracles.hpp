#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "noether/ratfunc.hpp"

namespace noether {

struct FiberCountResult {
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  /// Preimage count of the image of each sampled source point.
  std::vector<std::size_t> counts;
  /// count -> number of trials.
  std::map<std::size_t, std::size_t> histogram;
  std::size_t modal_count = 0;
  std::size_t modal_frequency = 0;
  /// Points of F_p^r where some denominator vanishes.
  std::size_t undefined_points = 0;
};

/// Degree oracle for a map Q(x_1..x_r) -> Q^r: reduces the maps mod p, evaluates them on
/// all of F_p^r, and for `trials` seeded random source points counts the points sharing
/// their image. Requires r <= 3 and p <= 101. Throws DomainError when a coefficient
/// does not reduce mod p or denominators vanish on more than half of F_p^r.
FiberCountResult generic_fiber_count(const std::vector<RatFunc>& maps, std::uint64_t p, std::size_t trials,
                                     std::uint64_t seed);

enum class Independence { independent, dependent, inconclusive };

struct JacobianResult {
  Independence verdict = Independence::inconclusive;
  std::size_t rank = 0;
  std::size_t points_tried = 0;
};

/// Rank of the Jacobian matrix at seeded random integer points, characteristic 0 only.
/// Full rank at one point proves independence; points where a denominator vanishes are skipped.
JacobianResult jacobian_independence(const std::vector<RatFunc>& funcs, std::uint64_t seed, std::size_t attempts = 5);

}  // namespace noether

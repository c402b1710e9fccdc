#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace noether {

using Point = std::uint32_t;

/// A bijection of {1, ..., degree}. Points are 1-based in every public call.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree);

  /// Builds from 1-based images; throws DomainError unless `images` is a bijection.
  static Permutation from_images(std::span<const Point> images);

  /// Parses cycle notation such as "(1,2,3)(4,5,6)" on `degree` points.
  /// The cycles are multiplied as written, c1 * c2 * ... * ck, so the rightmost
  /// cycle acts first (same convention as compose()).
  static Permutation parse(std::string_view text, std::size_t degree);

  /// Cycle notation over arbitrary point labels, e.g. "(0,oo)(1,4)" with
  /// labels {"0","1","2","3","4","oo"}; label k maps to point k+1.
  static Permutation parse_labeled(std::string_view text,
                                   const std::vector<std::string>& labels);

  std::size_t degree() const { return images_.size(); }

  /// Image of a 1-based point.
  Point operator()(Point p) const { return images_[p - 1] + 1; }

  /// 1-based image list.
  std::vector<Point> images() const;

  bool is_identity() const;
  Permutation inverse() const;

  /// Smallest k >= 1 with p^k = 1.
  std::uint64_t order() const;

  /// +1 for even, -1 for odd.
  int sign() const;

  /// Sorted cycle lengths including fixed points (length 1).
  std::vector<std::size_t> cycle_type() const;

  /// Disjoint cycles, each starting at its smallest point; fixed points omitted.
  std::vector<std::vector<Point>> cycles() const;

  std::size_t fixed_points() const;

  /// Disjoint cycle notation; identity prints as "()".
  std::string to_string() const;

  /// Raw 0-based image array, for hashing and fast loops.
  const std::vector<std::uint16_t>& raw() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {}

  std::vector<std::uint16_t> images_;  // 0-based
};

/// (a * b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);

inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

Permutation power(const Permutation& p, long long k);

/// s * a * s^-1.
Permutation conjugate(const Permutation& a, const Permutation& s);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace noether

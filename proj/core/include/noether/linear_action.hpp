#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "noether/perm_group.hpp"
#include "noether/poly.hpp"

namespace noether {

/// An invertible linear substitution: x_i -> sum_k rows[i][k] x_k.
struct LinearMap {
  std::vector<std::vector<Scalar>> rows;

  std::size_t nvars() const { return rows.size(); }
  friend bool operator==(const LinearMap&, const LinearMap&) = default;
  friend bool operator<(const LinearMap& a, const LinearMap& b) { return a.rows < b.rows; }
};

/// (a o b)(f) = a(b(f)).
LinearMap compose(const Field& field, const LinearMap& a, const LinearMap& b);
/// f with each x_i replaced by the image linear form.
MultiPoly apply(const LinearMap& map, const MultiPoly& f);

/// A finite group of linear substitutions of k[x_1..x_n], given by generators.
class LinearAction {
 public:
  /// Throws DomainError if a generator is singular or has the wrong size.
  LinearAction(Field field, std::size_t nvars, std::vector<LinearMap> generators, std::vector<std::string> labels);

  /// x_i -> x_{g(i)}.
  static LinearAction from_perm_group(const PermGroup& group, Field field);
  /// Diagonal or monomial maps given as images, e.g. {"x1", "w*x2", "w^2*x3"}.
  static LinearAction from_images(Field field, const VarList& vars, const std::vector<std::vector<std::string>>& generator_images,
                                  std::vector<std::string> labels, const std::map<std::string, Scalar>& constants = {});
  /// H wr G on variables x_ij (block i of g, position j of h) at index (i-1)n + (j-1):
  /// alpha^(l)(h) sends x_lj to sum_t b_jt(h) x_lt, and g sends x_ij to x_{g(i)j}.
  static LinearAction wreath(const PermGroup& g, const LinearAction& h);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<LinearMap>& generators() const { return generators_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Set when the action permutes variables according to a permutation group.
  const std::optional<PermGroup>& perm_group() const { return perm_group_; }

  /// All group elements, identity first. Throws CapExceeded above `cap` elements.
  const std::vector<LinearMap>& elements(std::size_t cap = 100'000) const;
  std::size_t order() const { return elements().size(); }

  /// Index of the first generator moving f, if any.
  std::optional<std::size_t> moving_generator(const MultiPoly& f) const;

 private:
  Field field_;
  std::size_t nvars_;
  std::vector<LinearMap> generators_;
  std::vector<std::string> labels_;
  std::optional<PermGroup> perm_group_;
  std::shared_ptr<std::vector<LinearMap>> elements_;
  std::shared_ptr<std::once_flag> once_;
};

}  // namespace noether

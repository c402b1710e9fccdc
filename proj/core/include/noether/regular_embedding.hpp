#pragma once

#include <cstddef>
#include <vector>

#include "noether/perm_group.hpp"

namespace noether {

/// The G-equivariant embedding of the permutation module on n points into the
/// regular representation: x_i maps to the sum of x(g) over the coset {g : g(1) = i}.
struct RegularEmbedding {
  PermGroup group;
  /// coset_reps[i-1] sends 1 to i.
  std::vector<Permutation> coset_reps;
  std::vector<Permutation> stabilizer;
  /// Column order of `matrix`: group.elements().
  std::vector<Permutation> columns;
  /// n x |G| zero-one matrix; row i is the image of x_{i+1}.
  std::vector<std::vector<int>> matrix;
  bool equivariant = false;
  bool injective = false;
};

/// Throws NotTransitive when some point is not in the orbit of 1.
RegularEmbedding regular_embedding(const PermGroup& group);

}  // namespace noether

#include "noether/regular_embedding.hpp"

#include <unordered_map>

#include "noether/error.hpp"
#include "noether/linalg.hpp"

namespace noether {

RegularEmbedding regular_embedding(const PermGroup& group) {
  if (!group.is_transitive()) {
    throw NotTransitive("no equivariant embedding into the regular representation: the group is not transitive (" +
                        group.to_spec() + ")");
  }
  const std::size_t n = group.degree();
  RegularEmbedding out{group, {}, {}, group.elements(), {}, false, false};
  std::unordered_map<Permutation, std::size_t, PermutationHash> column;
  for (std::size_t k = 0; k < out.columns.size(); ++k) column.emplace(out.columns[k], k);

  out.coset_reps.resize(n);
  std::vector<bool> have(n, false);
  out.matrix.assign(n, std::vector<int>(out.columns.size(), 0));
  for (std::size_t k = 0; k < out.columns.size(); ++k) {
    const Permutation& g = out.columns[k];
    Point i = g(1);
    out.matrix[i - 1][k] = 1;
    if (!have[i - 1]) {
      out.coset_reps[i - 1] = g;
      have[i - 1] = true;
    }
    if (i == 1) out.stabilizer.push_back(g);
  }

  // Phi(s x_i) = Phi(x_{s(i)}) must equal s Phi(x_i) = sum of x(s g) over the coset.
  bool equivariant = true;
  for (const auto& s : group.generators()) {
    for (std::size_t i = 0; i < n && equivariant; ++i) {
      std::vector<int> moved(out.columns.size(), 0);
      for (std::size_t k = 0; k < out.columns.size(); ++k) {
        if (out.matrix[i][k]) moved[column.at(s * out.columns[k])] = 1;
      }
      equivariant = moved == out.matrix[s(static_cast<Point>(i + 1)) - 1];
    }
  }
  out.equivariant = equivariant;

  Matrix rows(n, std::vector<Scalar>(out.columns.size()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < out.columns.size(); ++k) rows[i][k] = out.matrix[i][k];
  }
  out.injective = rank(Field::rationals(), rows) == n;
  return out;
}

}  // namespace noether

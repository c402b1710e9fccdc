#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

#include "noether/poly.hpp"

namespace noether {

using Matrix = std::vector<std::vector<Scalar>>;

/// Exact rank. Over Q the rows are cleared of denominators and reduced fraction-free
/// (Bareiss); over F_p by word-sized modular elimination.
std::size_t rank(const Field& field, const Matrix& rows);

/// Fraction-free determinant of a square integer matrix.
mpz_class determinant(const std::vector<std::vector<mpz_class>>& m);

/// Dimension of the span of homogeneous polynomials of the given degree.
/// Zero polynomials are allowed; any other inhomogeneous or wrong-degree input throws DomainError.
std::size_t graded_span_dim(std::span<const MultiPoly> polys, int degree);

/// Coefficient rows of the polynomials over the union of their monomials.
Matrix coefficient_matrix(std::span<const MultiPoly> polys);

}  // namespace noether

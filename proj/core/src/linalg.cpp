#include "noether/linalg.hpp"

#include <map>

#include "noether/error.hpp"

namespace noether {

namespace {

std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a) {
  std::size_t rows = a.size();
  if (rows == 0) return 0;
  std::size_t cols = a[0].size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::size_t modular_rank(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
  using u128 = unsigned __int128;
  std::size_t rows = a.size();
  if (rows == 0) return 0;
  std::size_t cols = a[0].size();
  auto inv = [p](std::uint64_t x) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1u) r = static_cast<std::uint64_t>(static_cast<u128>(r) * x % p);
      x = static_cast<std::uint64_t>(static_cast<u128>(x) * x % p);
      e >>= 1u;
    }
    return r;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::uint64_t k = inv(a[r][c]);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = static_cast<std::uint64_t>(static_cast<u128>(a[r][j]) * k % p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      std::uint64_t f = a[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        std::uint64_t t = static_cast<std::uint64_t>(static_cast<u128>(f) * a[r][j] % p);
        a[i][j] = a[i][j] >= t ? a[i][j] - t : a[i][j] + p - t;
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const Field& field, const Matrix& rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  for (const auto& row : rows) {
    if (row.size() != cols) throw DomainError("ragged matrix");
  }
  if (!field.is_rational()) {
    std::vector<std::vector<std::uint64_t>> a(rows.size(), std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = field.normalize(rows[i][j]).get_num().get_ui();
    }
    return modular_rank(std::move(a), field.characteristic());
  }
  std::vector<std::vector<mpz_class>> a(rows.size(), std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    mpz_class l = 1;
    for (const auto& v : rows[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = rows[i][j].get_num() * (l / rows[i][j].get_den());
  }
  return bareiss_rank(std::move(a));
}

mpz_class determinant(const std::vector<std::vector<mpz_class>>& m) {
  std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw DomainError("determinant of a non-square matrix");
  }
  if (n == 0) return 1;
  auto a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Matrix coefficient_matrix(std::span<const MultiPoly> polys) {
  std::map<Exponent, std::size_t, GrevlexLess> columns;
  for (const auto& p : polys) {
    for (const auto& [e, c] : p.terms()) columns.emplace(e, 0);
  }
  std::size_t k = 0;
  for (auto& [e, idx] : columns) idx = k++;
  Matrix m(polys.size(), std::vector<Scalar>(columns.size()));
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (const auto& [e, c] : polys[i].terms()) m[i][columns.at(e)] = c;
  }
  return m;
}

std::size_t graded_span_dim(std::span<const MultiPoly> polys, int degree) {
  if (polys.empty()) return 0;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous() || p.degree() != degree) {
      throw DomainError("graded_span_dim: input is not homogeneous of degree " + std::to_string(degree));
    }
  }
  return rank(polys[0].field(), coefficient_matrix(polys));
}

}  // namespace noether

#include "noether/oracles.hpp"

#include <random>
#include <unordered_map>

#include "noether/error.hpp"
#include "noether/linalg.hpp"

namespace noether {

namespace {

using u128 = unsigned __int128;

struct ModPoly {
  std::vector<std::pair<std::uint64_t, Exponent>> terms;
};

ModPoly reduce(const MultiPoly& f, const Field& fp) {
  ModPoly out;
  for (const auto& [e, c] : f.terms()) out.terms.emplace_back(fp.normalize(c).get_num().get_ui(), e);
  return out;
}

std::uint64_t eval(const ModPoly& f, const std::vector<std::vector<std::uint64_t>>& powers, std::uint64_t p) {
  std::uint64_t total = 0;
  for (const auto& [c, e] : f.terms) {
    std::uint64_t t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) t = static_cast<std::uint64_t>(static_cast<u128>(t) * powers[i][e[i]] % p);
    }
    total = (total + t) % p;
  }
  return total;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  while (e) {
    if (e & 1u) r = static_cast<std::uint64_t>(static_cast<u128>(r) * a % p);
    a = static_cast<std::uint64_t>(static_cast<u128>(a) * a % p);
    e >>= 1u;
  }
  return r;
}

}  // namespace

FiberCountResult generic_fiber_count(const std::vector<RatFunc>& maps, std::uint64_t p, std::size_t trials,
                                     std::uint64_t seed) {
  const std::size_t r = maps.size();
  if (r == 0 || r > 3) throw DomainError("fiber counting supports 1 to 3 maps");
  if (p > 101) throw DomainError("fiber counting supports primes up to 101");
  Field fp = Field::prime(p);
  for (const auto& f : maps) {
    if (!f.field().is_rational()) throw DomainError("fiber counting expects maps over Q");
    if (f.nvars() != r) throw DomainError("fiber counting needs as many variables as maps");
  }
  std::vector<ModPoly> nums, dens;
  try {
    for (const auto& f : maps) {
      nums.push_back(reduce(f.num(), fp));
      dens.push_back(reduce(f.den(), fp));
    }
  } catch (const DomainError&) {
    throw DomainError("a coefficient does not reduce modulo " + std::to_string(p) + "; retry with another prime");
  }
  unsigned max_exp = 0;
  for (const auto* list : {&nums, &dens}) {
    for (const auto& f : *list) {
      for (const auto& t : f.terms) {
        for (auto v : t.second) max_exp = std::max<unsigned>(max_exp, v);
      }
    }
  }

  std::size_t total = 1;
  for (std::size_t i = 0; i < r; ++i) total *= p;
  constexpr std::uint64_t kUndefined = ~0ull;
  std::vector<std::uint64_t> code(total);
  std::unordered_map<std::uint64_t, std::size_t> fiber;
  FiberCountResult res;
  res.prime = p;
  res.seed = seed;
  std::vector<std::vector<std::uint64_t>> powers(r, std::vector<std::uint64_t>(max_exp + 1));
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = 0; i < r; ++i) {
      std::uint64_t x = rest % p;
      rest /= p;
      powers[i][0] = 1;
      for (unsigned k = 1; k <= max_exp; ++k) powers[i][k] = powers[i][k - 1] * x % p;
    }
    std::uint64_t c = 0;
    for (std::size_t k = 0; k < r && c != kUndefined; ++k) {
      std::uint64_t d = eval(dens[k], powers, p);
      if (d == 0) {
        c = kUndefined;
        break;
      }
      std::uint64_t v = static_cast<std::uint64_t>(static_cast<u128>(eval(nums[k], powers, p)) * inverse_mod(d, p) % p);
      c = c * p + v;
    }
    code[idx] = c;
    if (c == kUndefined) {
      ++res.undefined_points;
    } else {
      ++fiber[c];
    }
  }
  if (res.undefined_points * 2 > total) {
    throw DomainError("denominators vanish on most of F_" + std::to_string(p) + "^" + std::to_string(r) +
                      "; retry with another prime");
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, total - 1);
  for (std::size_t t = 0; t < trials; ++t) {
    std::size_t idx;
    do {
      idx = pick(rng);
    } while (code[idx] == kUndefined);
    std::size_t n = fiber.at(code[idx]);
    res.counts.push_back(n);
    ++res.histogram[n];
  }
  for (const auto& [n, freq] : res.histogram) {
    if (freq > res.modal_frequency) {
      res.modal_frequency = freq;
      res.modal_count = n;
    }
  }
  return res;
}

JacobianResult jacobian_independence(const std::vector<RatFunc>& funcs, std::uint64_t seed, std::size_t attempts) {
  JacobianResult res;
  if (funcs.empty()) {
    res.verdict = Independence::independent;
    return res;
  }
  const Field& field = funcs[0].field();
  if (!field.is_rational()) throw DomainError("the Jacobian criterion is used in characteristic 0 only");
  const std::size_t n = funcs[0].nvars();
  for (const auto& f : funcs) {
    if (f.nvars() != n || !(f.field() == field)) throw DomainError("functions live in different rings");
  }
  std::vector<std::vector<RatFunc>> partials(funcs.size());
  for (std::size_t i = 0; i < funcs.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) partials[i].push_back(funcs[i].derivative(j));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-50, 50);
  bool any_valid = false;
  for (std::size_t a = 0; a < attempts; ++a) {
    ++res.points_tried;
    std::vector<Scalar> point;
    for (std::size_t j = 0; j < n; ++j) point.emplace_back(coord(rng));
    Matrix m(funcs.size(), std::vector<Scalar>(n));
    try {
      for (std::size_t i = 0; i < funcs.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = partials[i][j].evaluate(point);
      }
    } catch (const ZeroDenominator&) {
      continue;
    }
    any_valid = true;
    res.rank = std::max(res.rank, rank(field, m));
    if (res.rank == funcs.size()) {
      res.verdict = Independence::independent;
      return res;
    }
  }
  res.verdict = any_valid ? Independence::dependent : Independence::inconclusive;
  return res;
}

}  // namespace noether

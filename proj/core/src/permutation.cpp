#include "noether/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "noether/error.hpp"

namespace noether {

namespace {

// Splits "(a,b,c)(d,e)" into token lists; whitespace is ignored.
std::vector<std::vector<std::string>> split_cycles(std::string_view text) {
  std::vector<std::vector<std::string>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation text");
  while (i < text.size()) {
    if (text[i] != '(') {
      throw ParseError("expected '(' at offset " + std::to_string(i) + " in \"" +
                       std::string(text) + "\"");
    }
    ++i;
    std::vector<std::string> cycle;
    std::string current;
    bool closed = false;
    while (i < text.size()) {
      char c = text[i++];
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (c == ',' || c == ')') {
        if (current.empty()) {
          if (c == ')' && cycle.empty()) {
            closed = true;
            break;
          }
          throw ParseError("empty point in \"" + std::string(text) + "\"");
        }
        cycle.push_back(current);
        current.clear();
        if (c == ')') {
          closed = true;
          break;
        }
      } else if (c == '(') {
        throw ParseError("nested '(' in \"" + std::string(text) + "\"");
      } else {
        current.push_back(c);
      }
    }
    if (!closed) throw ParseError("unterminated cycle in \"" + std::string(text) + "\"");
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return cycles;
}

Permutation product_of_cycles(const std::vector<std::vector<Point>>& cycles, std::size_t degree,
                              std::string_view text) {
  Permutation result = Permutation::identity(degree);
  for (const auto& cyc : cycles) {
    std::vector<Point> seen = cyc;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      throw ParseError("repeated point within a cycle in \"" + std::string(text) + "\"");
    }
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{1});
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      images[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
    }
    result = result * Permutation::from_images(images);
  }
  return result;
}

}  // namespace

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) throw DomainError("permutation degree must be positive");
  std::vector<std::uint16_t> img(degree);
  std::iota(img.begin(), img.end(), std::uint16_t{0});
  return Permutation(std::move(img));
}

Permutation Permutation::from_images(std::span<const Point> images) {
  if (images.empty()) throw DomainError("permutation degree must be positive");
  if (images.size() > 0xFFFF) throw DomainError("permutation degree too large");
  std::vector<std::uint16_t> img(images.size());
  std::vector<bool> hit(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    Point p = images[i];
    if (p < 1 || p > images.size()) {
      throw DomainError("image " + std::to_string(p) + " out of range 1.." +
                        std::to_string(images.size()));
    }
    if (hit[p - 1]) throw DomainError("images do not form a bijection");
    hit[p - 1] = true;
    img[i] = static_cast<std::uint16_t>(p - 1);
  }
  return Permutation(std::move(img));
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  if (degree == 0) throw DomainError("permutation degree must be positive");
  std::vector<std::vector<Point>> cycles;
  for (const auto& tokens : split_cycles(text)) {
    std::vector<Point> cyc;
    for (const auto& tok : tokens) {
      if (!std::all_of(tok.begin(), tok.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError("non-numeric point '" + tok + "' in \"" + std::string(text) + "\"");
      }
      unsigned long v = std::stoul(tok);
      if (v < 1 || v > degree) {
        throw ParseError("point " + tok + " out of range 1.." + std::to_string(degree));
      }
      cyc.push_back(static_cast<Point>(v));
    }
    cycles.push_back(std::move(cyc));
  }
  return product_of_cycles(cycles, degree, text);
}

Permutation Permutation::parse_labeled(std::string_view text,
                                       const std::vector<std::string>& labels) {
  std::vector<std::vector<Point>> cycles;
  for (const auto& tokens : split_cycles(text)) {
    std::vector<Point> cyc;
    for (const auto& tok : tokens) {
      auto it = std::find(labels.begin(), labels.end(), tok);
      if (it == labels.end()) throw ParseError("unknown point label '" + tok + "'");
      cyc.push_back(static_cast<Point>(it - labels.begin() + 1));
    }
    cycles.push_back(std::move(cyc));
  }
  return product_of_cycles(cycles, labels.size(), text);
}

std::vector<Point> Permutation::images() const {
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1u;
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint16_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint16_t>(i);
  return Permutation(std::move(inv));
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  for (auto len : cycle_type()) ord = std::lcm(ord, static_cast<std::uint64_t>(len));
  return ord;
}

int Permutation::sign() const {
  std::size_t even_cycles = 0;
  for (auto len : cycle_type()) {
    if (len % 2 == 0) ++even_cycles;
  }
  return even_cycles % 2 == 0 ? 1 : -1;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lens;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> cyc;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cyc.push_back(static_cast<Point>(j + 1));
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::size_t Permutation::fixed_points() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] == i) ++n;
  }
  return n;
}

std::string Permutation::to_string() const {
  auto cyc = cycles();
  if (cyc.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cyc) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) os << ',';
      os << c[k];
    }
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw DomainError("degree mismatch: " + std::to_string(a.degree()) + " vs " +
                      std::to_string(b.degree()));
  }
  const auto& ra = a.raw();
  const auto& rb = b.raw();
  std::vector<Point> img(ra.size());
  for (std::size_t i = 0; i < ra.size(); ++i) img[i] = ra[rb[i]] + 1u;
  return Permutation::from_images(img);
}

Permutation power(const Permutation& p, long long k) {
  Permutation base = k < 0 ? p.inverse() : p;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Permutation result = Permutation::identity(p.degree());
  while (e) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

Permutation conjugate(const Permutation& a, const Permutation& s) { return s * a * s.inverse(); }

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : p.raw()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace noether

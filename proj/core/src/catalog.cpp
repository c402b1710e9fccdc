#include "noether/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "noether/error.hpp"

namespace noether {

namespace {

const std::vector<std::string> kProjectiveLabels{"0", "1", "2", "3", "4", "oo"};

CatalogEntry make_entry(std::string id, std::vector<std::string> printed, std::string iso,
                        std::string note = {}) {
  CatalogEntry e;
  e.id = std::move(id);
  e.printed = std::move(printed);
  e.iso_label = std::move(iso);
  e.note = std::move(note);
  for (const auto& g : e.printed) e.generators.push_back(Permutation::parse(g, 6));
  return e;
}

CatalogEntry make_projective_entry(std::string id, std::vector<std::string> printed,
                                   std::string iso, std::string note) {
  CatalogEntry e;
  e.id = std::move(id);
  e.printed = std::move(printed);
  e.point_labels = kProjectiveLabels;
  e.iso_label = std::move(iso);
  e.note = std::move(note);
  for (const auto& g : e.printed) e.generators.push_back(Permutation::parse_labeled(g, e.point_labels));
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back(make_entry("G1", {"(1,2,3,4,5,6)"}, "C6"));
  c.push_back(make_entry("G2", {"(1,2)(3,4)(5,6)", "(1,3,5)(2,6,4)"}, "S3"));
  c.push_back(make_entry("G3", {"(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"}, "D6"));
  c.push_back(make_entry("G4", {"(1,2,3)(4,5,6)", "(1,2)(4,5)", "(1,4)"}, "S2 wr S3"));
  c.push_back(make_entry("G5", {"(1,2,3)(4,5,6)", "(1,2)(4,5)", "(1,4)(2,5)"}, "G4 cap A6"));
  c.push_back(make_entry("G6", {"(1,2,3)(4,5,6)", "(1,5,4,2)"}, "S4"));
  c.push_back(make_entry("G7", {"(1,2,3)(4,5,6)", "(1,4)(2,5)"}, "G6 cap A6"));
  c.push_back(make_entry("G8", {"(1,2,3)(4,5,6)", "(1,4)"}, "C2 wr C3"));
  c.push_back(make_entry("G9", {"(1,2,3)", "(1,2)", "(1,4)(2,5)(3,6)"}, "S3 wr C2"));
  c.push_back(make_entry("G10", {"(1,2,3)", "(1,4,2,5)(3,6)", "(1,2)(4,5)"}, "G9 cap A6"));
  c.push_back(make_entry("G11", {"(1,2,3)", "(1,2)(4,5)", "(1,4)(2,5)(3,6)"}, "C3^2 : C2^2"));
  c.push_back(make_entry("G12", {"(1,2,3)", "(1,4)(2,5)(3,6)"}, "C3 wr C2"));
  // The published second generator is the non-disjoint product (0,oo)(1,4)(1,2,4,3);
  // it is stored in its disjoint form (0,oo)(1,2)(3,4), which is the same permutation.
  c.push_back(make_projective_entry("G13", {"(0,1,2,3,4)", "(0,oo)(1,2)(3,4)"}, "PGL2(F5)",
                                    "points 0,1,2,3,4,oo relabeled 1..6; x->x+1 and x->2/x"));
  c.push_back(make_projective_entry("G14", {"(0,1,2,3,4)", "(0,oo)(1,4)"}, "PSL2(F5)",
                                    "points 0,1,2,3,4,oo relabeled 1..6; x->x+1 and x->4/x"));
  c.push_back(make_entry("G15", {"(1,2,3)", "(2,3,4,5,6)"}, "A6", "standard generators"));
  c.push_back(make_entry("G16", {"(1,2,3,4,5,6)", "(1,2)"}, "S6", "standard generators"));
  for (auto& e : c) e.order = e.group().order();
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view id) {
  std::string key(id);
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char ch) { return std::toupper(ch); });
  for (const auto& e : catalog()) {
    if (e.id == key) return e;
  }
  throw DomainError("unknown catalog id '" + std::string(id) + "'");
}

std::vector<Permutation> relabeled_generators(std::string_view id) {
  std::string key(id);
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char ch) { return std::toupper(ch); });
  if (key == "G13") {
    return {Permutation::parse("(1,2,3,4,5)", 6), Permutation::parse("(1,6)(2,3)(4,5)", 6)};
  }
  if (key == "G14") {
    return {Permutation::parse("(1,2,3,4,5)", 6), Permutation::parse("(1,6)(2,5)", 6)};
  }
  return {};
}

Permutation projective_line_permutation(std::int64_t a, std::int64_t b, std::int64_t c,
                                        std::int64_t d, std::int64_t p) {
  auto mod = [p](std::int64_t v) { return ((v % p) + p) % p; };
  auto inv = [&](std::int64_t v) {
    v = mod(v);
    for (std::int64_t w = 1; w < p; ++w) {
      if (v * w % p == 1) return w;
    }
    throw DomainError("no inverse mod p");
  };
  if (mod(a * d - b * c) == 0) throw DomainError("singular fractional linear map");
  const auto inf = p;  // index of the point at infinity
  std::vector<Point> images(static_cast<std::size_t>(p + 1));
  for (std::int64_t x = 0; x <= p; ++x) {
    std::int64_t num, den;
    if (x == inf) {
      num = mod(a);
      den = mod(c);
    } else {
      num = mod(a * x + b);
      den = mod(c * x + d);
    }
    std::int64_t y = den == 0 ? inf : mod(num * inv(den));
    images[static_cast<std::size_t>(x)] = static_cast<Point>(y + 1);
  }
  return Permutation::from_images(images);
}

}  // namespace noether

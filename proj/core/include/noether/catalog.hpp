#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "noether/perm_group.hpp"

namespace noether {

/// One of the sixteen conjugacy classes of transitive subgroups of S6.
struct CatalogEntry {
  std::string id;                       // "G1" .. "G16"
  std::vector<std::string> printed;     // generator text as published
  std::vector<std::string> point_labels;  // non-empty when `printed` uses labels other than 1..6
  std::vector<Permutation> generators;  // degree 6
  std::string iso_label;
  std::uint64_t order = 0;              // filled by enumeration
  std::string note;

  PermGroup group() const { return PermGroup(6, generators); }
};

/// Entries G1..G16, orders populated by enumeration. Built once.
const std::vector<CatalogEntry>& catalog();

/// Lookup by id ("G13", case-insensitive "g13"); throws DomainError when unknown.
const CatalogEntry& catalog_entry(std::string_view id);

/// Alternative generators for G13 / G14 in the 1..6 relabeling of the projective
/// line {0,1,2,3,4,oo}; empty for other ids.
std::vector<Permutation> relabeled_generators(std::string_view id);

/// The fractional linear map x -> (a x + b) / (c x + d) on P^1(F_p), as a
/// permutation of points labeled 0..p-1 -> 1..p and infinity -> p+1.
Permutation projective_line_permutation(std::int64_t a, std::int64_t b, std::int64_t c,
                                        std::int64_t d, std::int64_t p);

}  // namespace noether

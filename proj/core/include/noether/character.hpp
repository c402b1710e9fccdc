#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <vector>

#include "noether/perm_group.hpp"
#include "noether/report.hpp"

namespace noether {

/// Images in S6 of the Coxeter generators (1,2), (2,3), (3,4), (4,5) of S5.
struct PresentationImages {
  std::array<Permutation, 4> images;

  /// (1,6)(2,3)(4,5), (1,5)(2,6)(3,4), (1,2)(3,6)(4,5), (1,5)(2,3)(4,6).
  static PresentationImages standard();
};

/// Checks s_i^2 = 1, (s_i s_{i+1})^3 = 1 and (s_i s_j)^2 = 1 for |i - j| >= 2, one claim each.
Report verify_presentation_hom(const PresentationImages& imgs);

/// Order of the image, equality with G13 and with the Moebius group PGL2(F5) on the
/// projective line, the image of the 5-cycle, and the image of even words versus G14.
Report verify_rho_image(const PresentationImages& imgs);

/// chi(g) = number of fixed points.
std::vector<std::size_t> permutation_character(const PermGroup& g);

struct InnerProducts {
  mpq_class with_trivial;  // <chi, 1>
  mpq_class with_self;     // <chi, chi>
};

/// Exact averages over the enumerated group; a non-integer result throws DomainError.
InnerProducts character_inner_products(const PermGroup& g);

/// Equal cycle types carry equal character values (always true for fixed-point counts;
/// kept as a consistency check on enumeration).
bool is_class_function(const PermGroup& g);

/// One orbit on ordered pairs of distinct points.
bool is_two_transitive(const PermGroup& g);

/// Inner products, orbit count, class function check and 2-transitivity for one catalog entry.
Report character_report(const std::string& catalog_id);

/// The group of x -> (ax + b)/(cx + d) over F_p on p + 1 points; `special` restricts to
/// determinant 1 (a generating set of PSL2).
PermGroup moebius_group(std::int64_t p, bool special);

}  // namespace noether

#pragma once

// Small groups used as evaluation targets and in the brute-force checks.

#include <cstddef>
#include <vector>

#include "opgroup/finite.hpp"

namespace opgroup {

/// Z/n with elements e, a, a2, ..., a{n-1}.
FiniteGroup cyclic_group(std::size_t n);

/// Closure of the given permutations of {0, ..., degree-1}, composed as
/// functions ((st)(i) = s(t(i))); elements are named in cycle notation on
/// 1-based points, e.g. "(12)", "(123)", "(12)(34)", with "e" for identity.
FiniteGroup permutation_group(std::size_t degree,
                              const std::vector<std::vector<std::size_t>>& generators);

FiniteGroup symmetric_group(std::size_t degree);
FiniteGroup alternating_group(std::size_t degree);
/// Symmetries of the regular n-gon (order 2n) as permutations of its vertices.
FiniteGroup dihedral_group(std::size_t n);
/// Elements named "a:b".
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Element indices of a named subset, throwing ValidationError on unknown names.
std::vector<ElementIndex> element_indices(const FiniteGroup& g,
                                          const std::vector<std::string>& names);

}  // namespace opgroup

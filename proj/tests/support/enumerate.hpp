#pragma once

// Exhaustive enumeration helpers, test-only.

#include "frieze/geometry.hpp"

#include <vector>

namespace frieze::testing {

/// Every dissection of the n-gon, the empty one included.
std::vector<Dissection> all_dissections(int n);

/// Every triangulation of the n-gon (Catalan(n-2) of them).
std::vector<Dissection> all_triangulations(int n);

} // namespace frieze::testing

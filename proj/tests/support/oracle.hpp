#pragma once

// Independent brute-force implementations, compiled into the test surface
// only. They deliberately avoid the library's code paths: crossing is decided
// by walking the vertex cycle, and gluing is re-resolved with a caller-chosen
// diagonal order.

#include "frieze/weak_frieze.hpp"

namespace frieze::testing {

/// Definition-level crossing test: walks the cycle from one endpoint of d1 to
/// the other and counts endpoints of d2 strictly in between.
bool crossing_by_walk(const Diagonal& d1, const Diagonal& d2, int n);

/// Enumerates every crossing pair and evaluates both Ptolemy sides; n <= 12
/// (throws frieze::TooLarge above). Must agree with check_frieze.
CheckReport exhaustive_ptolemy(const WeakFrieze& f);

/// As frieze::glue, but each diagonal is resolved through the crossed gluing
/// diagonal that comes first in `order` (a permutation of the gluing set),
/// and diagonals of equal crossing count are processed in reverse. The
/// result must equal frieze::glue value by value.
WeakFrieze glue_permuted(int n, const Dissection& gluing, const std::vector<Piece>& pieces,
                         const std::vector<Diagonal>& order);

} // namespace frieze::testing

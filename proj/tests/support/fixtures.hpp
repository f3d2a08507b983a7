#pragma once

// Shared test fixtures.

#include "frieze/weak_frieze.hpp"
#include "frieze/gallery.hpp"

namespace frieze::testing {

inline WeakFrieze constant_cell_frieze(int m, const Scalar& v) {
    std::map<Diagonal, Scalar> values;
    for (const Diagonal& d : all_diagonals(m)) values.emplace(d, v);
    return WeakFrieze(Dissection::empty(m), std::move(values));
}

inline Piece constant_piece(Cell cell, const Scalar& v) {
    const int m = cell.size();
    return Piece{std::move(cell), constant_cell_frieze(m, v)};
}

/// Three constant-1 squares glued along {1,4} and {5,8}.
inline std::vector<Piece> octagon_pieces() {
    return {constant_piece(Cell{{1, 2, 3, 4}}, Scalar(1)),
            constant_piece(Cell{{1, 4, 5, 8}}, Scalar(1)),
            constant_piece(Cell{{5, 6, 7, 8}}, Scalar(1))};
}

inline Dissection octagon_dissection() { return Dissection(8, {Diagonal(1, 4), Diagonal(5, 8)}); }

inline WeakFrieze octagon_frieze() { return glue(8, octagon_dissection(), octagon_pieces()); }

} // namespace frieze::testing

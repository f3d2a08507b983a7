#pragma once

/**
 * @file weak_frieze.hpp
 * @brief Weak friezes on dissected polygons: Ptolemy-relation checking,
 *        gluing along dissection diagonals, and restriction to cells.
 *
 * A weak frieze assigns a scalar to every diagonal of the polygon
 * (boundary edges included) and carries a designated dissection D. The
 * Ptolemy relation
 *
 *     f(i,j) f(k,l) = f(i,k) f(j,l) + f(i,l) f(j,k)
 *
 * for cyclically interleaved vertices i<k<j<l must hold for every crossing
 * pair in which one diagonal belongs to D; a frieze proper satisfies it for
 * all crossing pairs.
 */

#include "frieze/geometry.hpp"
#include "frieze/scalar.hpp"

#include <map>
#include <vector>

namespace frieze {

struct ZeroGluingValue : Error {
    explicit ZeroGluingValue(Diagonal d)
        : Error("dissection diagonal " + d.str() + " carries a zero value"), diagonal(d) {}
    Diagonal diagonal;
};

struct ValueMismatch : Error {
    explicit ValueMismatch(Diagonal d)
        : Error("pieces disagree on the shared diagonal " + d.str()), diagonal(d) {}
    Diagonal diagonal;
};

struct PieceMismatch : Error {
    using Error::Error;
};

struct InvalidCell : Error {
    using Error::Error;
};

class WeakFrieze {
public:
    /// Requires a value for every diagonal of the n-gon, a uniform scalar
    /// variant, and nonzero values on all dissection diagonals.
    WeakFrieze(Dissection dissection, std::map<Diagonal, Scalar> values);

    int size() const { return dissection_.polygon_size(); }
    ScalarKind kind() const { return kind_; }
    const Dissection& dissection() const { return dissection_; }
    const std::map<Diagonal, Scalar>& values() const { return values_; }

    const Scalar& value(const Diagonal& d) const;
    const Scalar& value(int i, int j) const { return value(Diagonal(i, j)); }

    /// Copy with one diagonal's value replaced (the diagonal must not be in
    /// the dissection if the new value is zero).
    WeakFrieze with_value(const Diagonal& d, Scalar v) const;

    friend bool operator==(const WeakFrieze&, const WeakFrieze&) = default;

private:
    Dissection dissection_;
    std::map<Diagonal, Scalar> values_;
    ScalarKind kind_;
};

struct PtolemyViolation {
    Diagonal d1, d2; // d1 < d2
    Scalar lhs, rhs;
};

struct CheckReport {
    std::vector<PtolemyViolation> violations;
    std::size_t relations_checked = 0;
    bool pass() const { return violations.empty(); }
};

/// Both sides of the Ptolemy relation for a crossing pair.
std::pair<Scalar, Scalar> ptolemy_sides(const WeakFrieze& f, const Diagonal& d, const Diagonal& e);

/// Checks the relations required of a weak frieze: every pair (d, e) with
/// d in the dissection and e crossing d. Violations are data, not errors.
CheckReport check_weak_frieze(const WeakFrieze& f);

/// Checks all crossing pairs (frieze proper).
CheckReport check_frieze(const WeakFrieze& f);

/// One building block for glue(): a cell of split_polygon(n, gluing) and a
/// weak frieze on that cell (vertices relabelled 1..|cell| following the
/// cell's stored rotation).
struct Piece {
    Cell cell;
    WeakFrieze frieze;
};

/// Glues weak friezes on the cells of a dissection into the unique weak
/// frieze on the whole polygon extending them. Values on diagonals crossing
/// gluing diagonals are resolved through the Ptolemy relation, in order of
/// increasing number of crossings.
WeakFrieze glue(int n, const Dissection& gluing, const std::vector<Piece>& pieces);

/// Restriction to a cell, relabelled 1..|cell| following the given vertex
/// order; the dissection restricts to the diagonals induced inside the cell.
WeakFrieze restrict_to_cell(const WeakFrieze& f, const Cell& cell);

} // namespace frieze

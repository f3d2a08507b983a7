#pragma once

/**
 * @file frieze_matrix.hpp
 * @brief Weak frieze matrices and exact determinants, including the
 *        determinant factorization under gluing and the structured row
 *        reduction that proves it.
 *
 * For a weak frieze f on an n-gon, M_f is the symmetric n x n matrix with
 * zero diagonal and entry f(i,j) elsewhere. When f is a weak frieze with
 * respect to a single internal diagonal d with f(d) != 0, splitting along d
 * into cells P and Q gives
 *
 *     det(M_f) = -f(d)^{-2} det(M_{f_P}) det(M_{f_Q}).
 */

#include "frieze/weak_frieze.hpp"

namespace frieze {

struct TooLarge : Error {
    using Error::Error;
};

struct ClaimViolated : Error {
    ClaimViolated(int row, int col)
        : Error("row reduction claim fails at (" + std::to_string(row) + "," + std::to_string(col) +
                "); the map is not a weak frieze with respect to the diagonal"),
          row(row), col(col) {}
    int row, col; // proof labels, 1-based
};

/// Dense square matrix of scalars of one variant (0-based indexing).
class ScalarMatrix {
public:
    ScalarMatrix(int n, ScalarKind kind)
        : n_(n), kind_(kind), entries_(static_cast<std::size_t>(n) * n, Scalar::zero(kind)) {}

    int size() const { return n_; }
    ScalarKind kind() const { return kind_; }

    Scalar& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
    const Scalar& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }

    ScalarMatrix submatrix(int row0, int col0, int size) const;

    friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

private:
    int n_;
    ScalarKind kind_;
    std::vector<Scalar> entries_;
};

/// M_f: zero diagonal, f(i,j) off the diagonal (vertex v maps to row v-1).
ScalarMatrix frieze_matrix(const WeakFrieze& f);

/// Exact determinant. Rational matrices run fraction-free Bareiss
/// elimination; symbolic matrices whose denominators are all monomials are
/// cleared to polynomials and run Bareiss over the polynomial ring with
/// exact divisions; anything else falls back to fraction-field Gaussian
/// elimination with cross-multiplied zero tests. Pivoting takes the first
/// nonzero entry of the column, with sign tracking across row swaps.
/// Singular matrices give 0; the empty matrix gives 1.
Scalar det_bareiss(const ScalarMatrix& m);

/// Independent oracle: signed permutation expansion. Throws TooLarge above
/// size 9.
Scalar det_leibniz(const ScalarMatrix& m);

struct GlueDetCheck {
    Scalar lhs;         // det(M_f)
    Scalar rhs;         // -f(d)^{-2} det(M_{f_P}) det(M_{f_Q})
    Scalar det_p, det_q;
    bool pass;
};

/// Evaluates both sides of the gluing determinant formula at an internal
/// diagonal d; requires f(d) != 0.
GlueDetCheck glue_det_check(const WeakFrieze& f, const Diagonal& d);

/// Result of the proof's row reduction. Vertices are permuted into proof
/// labels: the interior of cell P becomes 1..r-2, the endpoints of the
/// gluing diagonal become r-1 and r, the interior of cell Q becomes
/// r+1..r+s-2. Rows 1..r-2 are then replaced by
///
///     x_i - (c^{-1} x_{i,r-1}) x_r - (c^{-1} x_{i,r}) x_{r-1}
///
/// which zeroes columns r-1, r and the whole Q block of those rows.
struct StructuredReduction {
    int r, s;                    // cell sizes, r + s - 2 = n
    Scalar gluing_value;         // c = f(d)
    std::vector<int> new_to_old; // proof label (1-based) -> original vertex
    ScalarMatrix permuted;       // M_f in proof labels
    ScalarMatrix reduced;        // after the row operations
    ScalarMatrix p_core;         // upper-left (r-2) x (r-2) block of `reduced`
    ScalarMatrix p_matrix;       // M_{f_P}: first r rows/columns of `permuted`
    ScalarMatrix q_matrix;       // M_{f_Q}: last s rows/columns of `permuted`
};

/// Performs the reduction and verifies the zero claims; throws
/// ClaimViolated where a required Ptolemy relation fails and
/// ZeroGluingValue when f(d) = 0.
StructuredReduction structured_reduction(const WeakFrieze& f, const Diagonal& d);

} // namespace frieze

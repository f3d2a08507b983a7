#pragma once

/**
 * @file pattern.hpp
 * @brief Weak frieze patterns: the infinite array generated from the
 *        fundamental domain {c_{i,j} : 1 <= i < j <= n} by glide reflection
 *        c_{i,j} = c_{j,n+i} and translation c_{i,j} = c_{i+n,j+n}.
 *
 * Row i of the array holds entries for j in [i, n+i], with zeros at both
 * ends of the band.
 */

#include "frieze/weak_frieze.hpp"

#include <string>

namespace frieze {

class PatternWindow {
public:
    PatternWindow(int n, int first_row, std::vector<std::vector<Scalar>> rows)
        : n_(n), first_row_(first_row), rows_(std::move(rows)) {}

    int polygon_size() const { return n_; }
    int first_row() const { return first_row_; }
    int last_row() const { return first_row_ + static_cast<int>(rows_.size()) - 1; }

    /// Entry c_{i,j}; i must be a window row and j in [i, n+i].
    const Scalar& entry(int i, int j) const;

private:
    int n_;
    int first_row_;
    std::vector<std::vector<Scalar>> rows_; // rows_[i - first_row_][j - i]
};

/// The array entry c_{i,j} for any integer row i and j in [i, n+i], resolved
/// through translation and at most one glide reflection into the fundamental
/// domain. Band edges give zero.
Scalar pattern_value(const WeakFrieze& f, int i, int j);

PatternWindow render_pattern(const WeakFrieze& f, int first_row, int last_row);

/// Staircase text rendering of a window, entries right-aligned in equal
/// columns, each row shifted one column right of the previous.
std::string render_text(const PatternWindow& w);

struct LocalRuleViolation {
    int i, j;
    Scalar lhs, rhs;
};

struct LocalRuleReport {
    std::vector<LocalRuleViolation> violations;
    std::size_t blocks_checked = 0;
    bool pass() const { return violations.empty(); }
};

/// Verifies c_{i,j} c_{i+1,j+1} - c_{i,j+1} c_{i+1,j} = c_{i+1,n+i} c_{j,j+1}
/// for every complete adjacent 2x2 block inside the window. Friezes proper
/// satisfy it everywhere; weak friezes may deviate, and the deviations are
/// reported without classification.
LocalRuleReport check_local_rule(const PatternWindow& w, const WeakFrieze& f);

} // namespace frieze

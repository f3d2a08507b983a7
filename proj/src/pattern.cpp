#include "frieze/pattern.hpp"

#include "frieze/scalar_text.hpp"

#include <algorithm>
#include <sstream>

namespace frieze {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

const Scalar& PatternWindow::entry(int i, int j) const {
    if (i < first_row() || i > last_row()) throw Error("row outside the window");
    if (j < i || j > n_ + i) throw Error("column outside the pattern band");
    return rows_[static_cast<std::size_t>(i - first_row_)][static_cast<std::size_t>(j - i)];
}

Scalar pattern_value(const WeakFrieze& f, int i, int j) {
    const int n = f.size();
    // translate so the row index lands in 1..n
    long shift = floor_div(i - 1, n) * n;
    long ii = i - shift;
    long jj = j - shift;
    if (jj < ii || jj > ii + n) throw Error("column outside the pattern band");
    if (jj == ii || jj == ii + n) return Scalar::zero(f.kind());
    if (jj <= n) return f.value(static_cast<int>(ii), static_cast<int>(jj));
    // one glide reflection: c_{i,j} = c_{j-n, i}
    return f.value(static_cast<int>(jj - n), static_cast<int>(ii));
}

PatternWindow render_pattern(const WeakFrieze& f, int first_row, int last_row) {
    if (first_row > last_row) throw Error("first row must not exceed last row");
    const int n = f.size();
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(static_cast<std::size_t>(last_row - first_row + 1));
    for (int i = first_row; i <= last_row; ++i) {
        std::vector<Scalar> row;
        row.reserve(static_cast<std::size_t>(n) + 1);
        for (int j = i; j <= n + i; ++j) row.push_back(pattern_value(f, i, j));
        rows.push_back(std::move(row));
    }
    return PatternWindow(n, first_row, std::move(rows));
}

std::string render_text(const PatternWindow& w) {
    const int n = w.polygon_size();
    std::size_t width = 1;
    for (int i = w.first_row(); i <= w.last_row(); ++i)
        for (int j = i; j <= n + i; ++j) width = std::max(width, format_scalar(w.entry(i, j)).size());

    std::ostringstream out;
    for (int i = w.first_row(); i <= w.last_row(); ++i) {
        std::string line(static_cast<std::size_t>(i - w.first_row()) * (width + 1), ' ');
        for (int j = i; j <= n + i; ++j) {
            std::string cell = format_scalar(w.entry(i, j));
            if (j > i) line += ' ';
            line += std::string(width - cell.size(), ' ') + cell;
        }
        out << line << '\n';
    }
    return out.str();
}

LocalRuleReport check_local_rule(const PatternWindow& w, const WeakFrieze& f) {
    LocalRuleReport report;
    const int n = f.size();
    for (int i = w.first_row(); i < w.last_row(); ++i) {
        for (int j = i + 1; j <= n + i - 1; ++j) {
            Scalar lhs = pattern_value(f, i, j) * pattern_value(f, i + 1, j + 1) -
                         pattern_value(f, i, j + 1) * pattern_value(f, i + 1, j);
            Scalar rhs = pattern_value(f, i + 1, n + i) * pattern_value(f, j, j + 1);
            ++report.blocks_checked;
            if (!(lhs == rhs)) report.violations.push_back({i, j, std::move(lhs), std::move(rhs)});
        }
    }
    return report;
}

} // namespace frieze

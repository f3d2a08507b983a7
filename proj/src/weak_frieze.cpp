#include "frieze/weak_frieze.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace frieze {

WeakFrieze::WeakFrieze(Dissection dissection, std::map<Diagonal, Scalar> values)
    : dissection_(std::move(dissection)), values_(std::move(values)), kind_(ScalarKind::rational) {
    const int n = dissection_.polygon_size();
    const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (values_.size() != expected)
        throw Error("weak frieze needs a value for each of the " + std::to_string(expected) +
                    " diagonals, got " + std::to_string(values_.size()));
    bool first = true;
    for (const auto& [d, v] : values_) {
        if (d.b() > n) throw InvalidVertex("diagonal " + d.str() + " outside the polygon");
        if (first) {
            kind_ = v.kind();
            first = false;
        } else if (v.kind() != kind_) {
            throw VariantMismatch();
        }
    }
    for (const Diagonal& d : dissection_)
        if (values_.at(d).is_zero()) throw ZeroGluingValue(d);
}

const Scalar& WeakFrieze::value(const Diagonal& d) const {
    auto it = values_.find(d);
    if (it == values_.end()) throw InvalidVertex("diagonal " + d.str() + " outside the polygon");
    return it->second;
}

WeakFrieze WeakFrieze::with_value(const Diagonal& d, Scalar v) const {
    std::map<Diagonal, Scalar> vals = values_;
    vals.at(d) = std::move(v);
    return WeakFrieze(dissection_, std::move(vals));
}

std::pair<Scalar, Scalar> ptolemy_sides(const WeakFrieze& f, const Diagonal& d, const Diagonal& e) {
    assert(crossing(d, e, f.size()));
    // arrange the four endpoints in cyclic order w0 < w1 < w2 < w3, so that
    // d and e are the two main diagonals of the quadrilateral
    std::array<int, 4> w{d.a(), d.b(), e.a(), e.b()};
    std::sort(w.begin(), w.end());
    Scalar lhs = f.value(w[0], w[2]) * f.value(w[1], w[3]);
    Scalar rhs = f.value(w[0], w[1]) * f.value(w[2], w[3]) + f.value(w[1], w[2]) * f.value(w[0], w[3]);
    return {std::move(lhs), std::move(rhs)};
}

namespace {

CheckReport check_pairs(const WeakFrieze& f, bool all_pairs) {
    CheckReport report;
    const int n = f.size();
    const std::vector<Diagonal> diags = all_diagonals(n);
    auto test = [&](const Diagonal& x, const Diagonal& y) {
        auto [lhs, rhs] = ptolemy_sides(f, x, y);
        ++report.relations_checked;
        if (!(lhs == rhs)) report.violations.push_back({std::min(x, y), std::max(x, y), lhs, rhs});
    };
    if (all_pairs) {
        for (std::size_t i = 0; i < diags.size(); ++i)
            for (std::size_t j = i + 1; j < diags.size(); ++j)
                if (crossing(diags[i], diags[j], n)) test(diags[i], diags[j]);
    } else {
        for (const Diagonal& d : f.dissection()) {
            for (const Diagonal& e : diags) {
                if (!crossing(d, e, n)) continue;
                // a pair with both members in D is visited once
                if (f.dissection().contains(e) && e < d) continue;
                test(d, e);
            }
        }
    }
    std::sort(report.violations.begin(), report.violations.end(),
              [](const PtolemyViolation& a, const PtolemyViolation& b) {
                  return std::pair(a.d1, a.d2) < std::pair(b.d1, b.d2);
              });
    report.violations.erase(
        std::unique(report.violations.begin(), report.violations.end(),
                    [](const PtolemyViolation& a, const PtolemyViolation& b) {
                        return a.d1 == b.d1 && a.d2 == b.d2;
                    }),
        report.violations.end());
    return report;
}

} // namespace

CheckReport check_weak_frieze(const WeakFrieze& f) { return check_pairs(f, false); }

CheckReport check_frieze(const WeakFrieze& f) { return check_pairs(f, true); }

namespace {

Diagonal to_global(const Cell& cell, const Diagonal& local) {
    return Diagonal(cell.vertices[local.a() - 1], cell.vertices[local.b() - 1]);
}

} // namespace

WeakFrieze glue(int n, const Dissection& gluing, const std::vector<Piece>& pieces) {
    if (gluing.polygon_size() != n) throw PieceMismatch("gluing dissection is for a different polygon");
    const std::vector<Cell> cells = split_polygon(n, gluing);
    if (pieces.size() != cells.size())
        throw PieceMismatch("expected " + std::to_string(cells.size()) + " pieces, got " +
                            std::to_string(pieces.size()));

    // match pieces to cells by canonical vertex list
    std::vector<const Piece*> by_cell(cells.size(), nullptr);
    for (const Piece& p : pieces) {
        auto it = std::find_if(cells.begin(), cells.end(),
                               [&](const Cell& c) { return c == p.cell; });
        if (it == cells.end())
            throw PieceMismatch("piece cell does not match the cell decomposition");
        auto idx = static_cast<std::size_t>(it - cells.begin());
        if (by_cell[idx]) throw PieceMismatch("duplicate piece for one cell");
        by_cell[idx] = &p;
    }

    std::map<Diagonal, Scalar> values;
    std::vector<Diagonal> dissection_diags = gluing.diagonals();
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        const Cell& cell = cells[ci];
        const Piece& piece = *by_cell[ci];
        if (piece.frieze.size() != cell.size())
            throw PieceMismatch("piece frieze size differs from its cell");
        for (const auto& [local, v] : piece.frieze.values()) {
            Diagonal global = to_global(cell, local);
            auto [it, inserted] = values.emplace(global, v);
            if (!inserted && !(it->second == v)) throw ValueMismatch(global);
        }
        for (const Diagonal& local : piece.frieze.dissection())
            dissection_diags.push_back(to_global(cell, local));
    }
    for (const Diagonal& d : gluing)
        if (values.at(d).is_zero()) throw ZeroGluingValue(d);

    // resolve the remaining diagonals in increasing crossing count; each
    // Ptolemy step only consumes diagonals with strictly fewer crossings
    struct Pending {
        Diagonal d;
        std::vector<Diagonal> crossed;
    };
    std::vector<Pending> pending;
    for (const Diagonal& d : all_diagonals(n)) {
        if (values.count(d)) continue;
        std::vector<Diagonal> crossed = crossed_by(d, gluing);
        if (crossed.empty())
            throw Error("internal: uncovered diagonal " + d.str() + " crosses no gluing diagonal");
        pending.push_back({d, std::move(crossed)});
    }
    std::sort(pending.begin(), pending.end(), [](const Pending& x, const Pending& y) {
        return std::pair(x.crossed.size(), x.d) < std::pair(y.crossed.size(), y.d);
    });
    for (const Pending& p : pending) {
        const Diagonal& g = p.crossed.front();
        std::array<int, 4> w{p.d.a(), p.d.b(), g.a(), g.b()};
        std::sort(w.begin(), w.end());
        Scalar rhs = values.at(Diagonal(w[0], w[1])) * values.at(Diagonal(w[2], w[3])) +
                     values.at(Diagonal(w[1], w[2])) * values.at(Diagonal(w[0], w[3]));
        values.emplace(p.d, rhs / values.at(g));
    }

    return WeakFrieze(Dissection(n, std::move(dissection_diags)), std::move(values));
}

WeakFrieze restrict_to_cell(const WeakFrieze& f, const Cell& cell) {
    const int n = f.size();
    const int m = cell.size();
    if (m < 3 || m > n) throw InvalidCell("cell must have between 3 and n vertices");
    // the list must be cyclically increasing: exactly one descent
    int descents = 0;
    for (int i = 0; i < m; ++i) {
        int v = cell.vertices[i];
        if (v < 1 || v > n) throw InvalidCell("cell vertex outside the polygon");
        if (v > cell.vertices[(i + 1) % m]) ++descents;
    }
    if (descents != 1 && m > 1) throw InvalidCell("cell vertices are not in cyclic order");
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (cell.vertices[i] == cell.vertices[j]) throw InvalidCell("repeated cell vertex");

    std::map<Diagonal, Scalar> values;
    std::vector<Diagonal> induced;
    for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
            Diagonal local(i, j);
            Diagonal global = to_global(cell, local);
            values.emplace(local, f.value(global));
            if (is_internal(local, m) && f.dissection().contains(global)) induced.push_back(local);
        }
    }
    return WeakFrieze(Dissection(m, std::move(induced)), std::move(values));
}

} // namespace frieze

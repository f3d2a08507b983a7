#include "frieze/gallery.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace frieze {

WeakFrieze constant_frieze(int n, const Scalar& v) {
    std::map<Diagonal, Scalar> values;
    for (const Diagonal& d : all_diagonals(n)) values.emplace(d, v);
    return WeakFrieze(Dissection::empty(n), std::move(values));
}

namespace {

WeakFrieze local_frieze_from_global(const Cell& cell,
                                    const std::map<Diagonal, Scalar>& global_values) {
    const int m = cell.size();
    std::map<Diagonal, Scalar> values;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            Diagonal global(cell.vertices[static_cast<std::size_t>(i - 1)],
                            cell.vertices[static_cast<std::size_t>(j - 1)]);
            values.emplace(Diagonal(i, j), global_values.at(global));
        }
    return WeakFrieze(Dissection::empty(m), std::move(values));
}

} // namespace

WeakFrieze dissection_frieze(int n, const Dissection& D) {
    std::vector<Piece> pieces;
    for (const Cell& cell : split_polygon(n, D)) {
        const int m = cell.size();
        std::map<Diagonal, Scalar> values;
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) values.emplace(Diagonal(i, j), Scalar(1));
        pieces.push_back({cell, WeakFrieze(Dissection::empty(m), std::move(values))});
    }
    return glue(n, D, pieces);
}

Scalar bhj_det_formula(int n, const std::vector<int>& cell_sizes) {
    long total = 0;
    for (int d : cell_sizes) {
        if (d < 3) throw SizeMismatch("cell sizes must be at least 3");
        total += d;
    }
    const long l = static_cast<long>(cell_sizes.size());
    if (l == 0 || total - 2 * (l - 1) != n)
        throw SizeMismatch("cell sizes do not add up to the polygon size");
    Rational product(1);
    for (int d : cell_sizes) product *= Rational(d - 1);
    if ((n - 1) % 2 != 0) product = -product;
    return Scalar(product);
}

Triangulation::Triangulation(Dissection d) : d_(std::move(d)) {
    const int n = d_.polygon_size();
    if (static_cast<int>(d_.size()) != n - 3)
        throw SizeMismatch("a triangulation of an n-gon has exactly n-3 diagonals");
}

namespace {

std::string edge_variable(const Diagonal& d) {
    return "x_" + std::to_string(d.a()) + "_" + std::to_string(d.b());
}

} // namespace

WeakFrieze baur_marsh_frieze(const Triangulation& t) {
    const int n = t.polygon_size();
    std::map<Diagonal, Scalar> named;
    for (int i = 1; i <= n; ++i) {
        Diagonal edge(i, i % n + 1);
        named.emplace(edge, Scalar(RatFunc::variable(edge_variable(edge))));
    }
    for (const Diagonal& d : t.dissection())
        named.emplace(d, Scalar(RatFunc::variable(edge_variable(d))));

    std::vector<Piece> pieces;
    for (const Cell& cell : split_polygon(n, t.dissection()))
        pieces.push_back({cell, local_frieze_from_global(cell, named)});
    return glue(n, t.dissection(), pieces);
}

Scalar bm_det_formula(const WeakFrieze& f) {
    const int n = f.size();
    Scalar product = Scalar::constant(f.kind(), Rational(-2).pow(static_cast<unsigned long>(n - 2)));
    product = -product;
    for (int i = 1; i <= n; ++i) product *= f.value(i, i % n + 1);
    return product;
}

MaldonadoMatrix::MaldonadoMatrix(ScalarMatrix m) : m_(std::move(m)) {
    const int n = m_.size();
    if (n < 3) throw InvalidMatrix("matrix must be at least 3x3");
    for (int i = 0; i < n; ++i) {
        if (!m_.at(i, i).is_zero()) throw InvalidMatrix("diagonal entries must be zero");
        for (int j = i + 1; j < n; ++j) {
            if (!(m_.at(i, j) == m_.at(j, i))) throw InvalidMatrix("matrix must be symmetric");
            if (m_.at(i, j).is_zero()) throw InvalidMatrix("off-diagonal entries must be nonzero");
        }
    }
}

DiamondReport maldonado_check(const MaldonadoMatrix& c) {
    DiamondReport report;
    const int n = c.size();
    for (int i = 1; i + 1 <= n - 1; ++i) {
        for (int j = i + 1; j <= n - 1; ++j) {
            Scalar lhs = c.entry(i, j) * c.entry(i + 1, j + 1) - c.entry(i + 1, j) * c.entry(i, j + 1);
            Scalar rhs = c.entry(i, i + 1) * c.entry(j, j + 1);
            ++report.relations_checked;
            if (!(lhs == rhs)) report.violations.push_back({i, j, std::move(lhs), std::move(rhs)});
        }
    }
    return report;
}

Scalar maldonado_det_formula(const MaldonadoMatrix& c) {
    if (!maldonado_check(c).pass())
        throw DiamondRuleViolated("matrix does not satisfy the generalized diamond rule");
    const int n = c.size();
    Scalar product =
        Scalar::constant(c.matrix().kind(), Rational(-2).pow(static_cast<unsigned long>(n - 2)));
    product = -product * c.entry(1, n);
    for (int i = 1; i <= n - 1; ++i) product *= c.entry(i, i + 1);
    return product;
}

DiamondReport overlap_identity_check(const MaldonadoMatrix& c) {
    DiamondReport report;
    const int n = c.size();
    for (int i = 1; i <= n - 1; ++i) {
        Scalar lhs = c.entry(i, n) * c.entry(1, i + 1) - c.entry(i + 1, n) * c.entry(1, i);
        Scalar rhs = c.entry(i, i + 1) * c.entry(1, n);
        ++report.relations_checked;
        if (!(lhs == rhs)) report.violations.push_back({i, n, std::move(lhs), std::move(rhs)});
    }
    return report;
}

namespace {

void random_split(const std::vector<int>& verts, Rng& rng, RandomMode mode,
                  std::vector<Diagonal>& out) {
    const int m = static_cast<int>(verts.size());
    if (m == 3) return;
    if (mode == RandomMode::any && rng.below(3) == 0) return;
    // pick the k-th internal chord of this cell, in lexicographic position order
    const std::uint64_t chords = static_cast<std::uint64_t>(m) * (m - 3) / 2;
    std::uint64_t k = rng.below(chords);
    int pa = -1, pb = -1;
    for (int p = 0; p < m && pa < 0; ++p)
        for (int q = p + 2; q < m; ++q) {
            if (p == 0 && q == m - 1) continue;
            if (k-- == 0) {
                pa = p;
                pb = q;
                break;
            }
        }
    assert(pa >= 0);
    out.emplace_back(verts[static_cast<std::size_t>(pa)], verts[static_cast<std::size_t>(pb)]);
    std::vector<int> left(verts.begin() + pa, verts.begin() + pb + 1);
    std::vector<int> right(verts.begin() + pb, verts.end());
    right.insert(right.end(), verts.begin(), verts.begin() + pa + 1);
    random_split(left, rng, mode, out);
    random_split(right, rng, mode, out);
}

} // namespace

Dissection random_dissection(int n, std::uint64_t seed, RandomMode mode) {
    if (n < 3) throw InvalidVertex("polygon needs at least 3 vertices");
    Rng rng(seed);
    std::vector<int> verts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) verts[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Diagonal> diags;
    random_split(verts, rng, mode, diags);
    return Dissection(n, std::move(diags));
}

Rational random_nonzero_rational(Rng& rng, bool positive_only) {
    Rational r(rng.range(1, 20), rng.range(1, 20));
    if (!positive_only && rng.coin()) r = -r;
    return r;
}

std::map<std::string, Rational> random_rational_point(const std::vector<std::string>& names, Rng& rng,
                                                      bool positive_only) {
    std::map<std::string, Rational> point;
    for (const std::string& name : names) point.emplace(name, random_nonzero_rational(rng, positive_only));
    return point;
}

RandomFrieze random_weak_frieze(int n, const Dissection& D, std::uint64_t seed) {
    const std::vector<Cell> cells = split_polygon(n, D);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Rng rng(seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(attempt));
        std::map<Diagonal, Scalar> piece_values;
        for (const Cell& cell : cells) {
            const int m = cell.size();
            for (int i = 1; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j) {
                    Diagonal global(cell.vertices[static_cast<std::size_t>(i - 1)],
                                    cell.vertices[static_cast<std::size_t>(j - 1)]);
                    if (!piece_values.count(global))
                        piece_values.emplace(global, Scalar(random_nonzero_rational(rng, false)));
                }
        }
        std::vector<Piece> pieces;
        for (const Cell& cell : cells)
            pieces.push_back({cell, local_frieze_from_global(cell, piece_values)});
        WeakFrieze f = glue(n, D, pieces);
        bool has_zero = false;
        for (const auto& [d, v] : f.values())
            if (v.is_zero()) {
                has_zero = true;
                break;
            }
        if (!has_zero) return {std::move(f), attempt + 1};
    }
    throw Error("random weak frieze generation kept colliding to zero values");
}

WeakFrieze evaluate_frieze(const WeakFrieze& f, const std::map<std::string, Rational>& point) {
    std::map<Diagonal, Scalar> values;
    for (const auto& [d, v] : f.values()) values.emplace(d, Scalar(v.eval(point)));
    return WeakFrieze(f.dissection(), std::move(values));
}

} // namespace frieze

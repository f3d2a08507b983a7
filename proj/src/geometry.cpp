#include "frieze/geometry.hpp"

#include <algorithm>
#include <cassert>

namespace frieze {

namespace {

void require_valid(const Diagonal& d, int n) {
    if (n < 3) throw InvalidVertex("polygon needs at least 3 vertices");
    if (d.b() > n) throw InvalidVertex("vertex " + std::to_string(d.b()) + " outside 1.." + std::to_string(n));
}

} // namespace

bool is_internal(const Diagonal& d, int n) {
    require_valid(d, n);
    if (d.b() - d.a() == 1) return false;
    if (d.a() == 1 && d.b() == n) return false;
    return true;
}

bool crossing(const Diagonal& d1, const Diagonal& d2, int n) {
    require_valid(d1, n);
    require_valid(d2, n);
    if (d1.a() == d2.a() || d1.a() == d2.b() || d1.b() == d2.a() || d1.b() == d2.b()) return false;
    // with labels linear in 1..n, cyclic interleaving means exactly one
    // endpoint of d2 lies strictly between the endpoints of d1
    bool in_a = d1.a() < d2.a() && d2.a() < d1.b();
    bool in_b = d1.a() < d2.b() && d2.b() < d1.b();
    return in_a != in_b;
}

Dissection::Dissection(int n, std::vector<Diagonal> diagonals) : n_(n), diagonals_(std::move(diagonals)) {
    if (n_ < 3) throw InvalidVertex("polygon needs at least 3 vertices");
    std::sort(diagonals_.begin(), diagonals_.end());
    diagonals_.erase(std::unique(diagonals_.begin(), diagonals_.end()), diagonals_.end());
    for (const Diagonal& d : diagonals_)
        if (!is_internal(d, n_)) throw NotInternal(d);
    for (std::size_t i = 0; i < diagonals_.size(); ++i)
        for (std::size_t j = i + 1; j < diagonals_.size(); ++j)
            if (crossing(diagonals_[i], diagonals_[j], n_))
                throw CrossingDiagonals(diagonals_[i], diagonals_[j]);
}

bool Dissection::contains(const Diagonal& d) const {
    return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
}

namespace {

Cell canonical_cell(std::vector<int> verts) {
    auto min_it = std::min_element(verts.begin(), verts.end());
    std::rotate(verts.begin(), min_it, verts.end());
    return Cell{std::move(verts)};
}

void split_rec(std::vector<int> verts, const Dissection& D, std::vector<Cell>& out) {
    const int m = static_cast<int>(verts.size());
    for (const Diagonal& d : D) {
        int pa = -1, pb = -1;
        for (int i = 0; i < m; ++i) {
            if (verts[i] == d.a()) pa = i;
            if (verts[i] == d.b()) pb = i;
        }
        if (pa < 0 || pb < 0) continue;
        if (pa > pb) std::swap(pa, pb);
        // adjacent positions mean d is already an edge of this sub-polygon
        if (pb - pa == 1 || (pa == 0 && pb == m - 1)) continue;
        std::vector<int> left(verts.begin() + pa, verts.begin() + pb + 1);
        std::vector<int> right(verts.begin() + pb, verts.end());
        right.insert(right.end(), verts.begin(), verts.begin() + pa + 1);
        split_rec(std::move(left), D, out);
        split_rec(std::move(right), D, out);
        return;
    }
    out.push_back(canonical_cell(std::move(verts)));
}

} // namespace

std::vector<Cell> split_polygon(int n, const Dissection& D) {
    assert(D.polygon_size() == n);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    std::vector<Cell> out;
    split_rec(std::move(all), D, out);
    std::sort(out.begin(), out.end(),
              [](const Cell& x, const Cell& y) { return x.vertices < y.vertices; });
    return out;
}

std::vector<Diagonal> crossed_by(const Diagonal& d, const Dissection& D) {
    const int n = D.polygon_size();
    require_valid(d, n);
    std::vector<Diagonal> hits;
    for (const Diagonal& g : D)
        if (crossing(d, g, n)) hits.push_back(g);
    // order along the chord from d.a(): nearer crossings have the endpoint
    // inside the arc (d.a(), d.b()) closer to d.a(); ties (shared inside
    // endpoint) are broken by the outside endpoint, closer to d.a() first
    auto key = [&](const Diagonal& g) {
        int inside = (d.a() < g.a() && g.a() < d.b()) ? g.a() : g.b();
        int outside = inside == g.a() ? g.b() : g.a();
        int k1 = (inside - d.a() + n) % n;
        int k2 = (outside - d.a() + n) % n;
        return std::pair<int, int>(k1, -k2);
    };
    std::sort(hits.begin(), hits.end(),
              [&](const Diagonal& x, const Diagonal& y) { return key(x) < key(y); });
    return hits;
}

std::vector<Diagonal> all_diagonals(int n) {
    std::vector<Diagonal> out;
    out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) out.emplace_back(a, b);
    return out;
}

} // namespace frieze

#include "frieze/geometry.hpp"
#include "frieze/gallery.hpp"
#include "support/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace frieze;

namespace {

Diagonal rotate(const Diagonal& d, int k, int n) {
    auto wrap = [&](int v) { return (v - 1 + k) % n + 1; };
    return Diagonal(wrap(d.a()), wrap(d.b()));
}

Diagonal reflect(const Diagonal& d, int n) {
    auto mirror = [&](int v) { return n + 1 - v; };
    return Diagonal(mirror(d.a()), mirror(d.b()));
}

} // namespace

TEST_CASE("is_internal distinguishes boundary edges") {
    CHECK(is_internal(Diagonal(1, 5), 8));
    CHECK(!is_internal(Diagonal(8, 1), 8));
    CHECK(!is_internal(Diagonal(1, 2), 8));
    for (const Diagonal& d : all_diagonals(3)) CHECK(!is_internal(d, 3));
    CHECK_THROWS_AS(is_internal(Diagonal(1, 9), 8), InvalidVertex);
}

TEST_CASE("crossing") {
    CHECK(crossing(Diagonal(1, 3), Diagonal(2, 4), 4));
    CHECK(!crossing(Diagonal(1, 2), Diagonal(2, 4), 6)); // shared vertex
    CHECK(crossing(Diagonal(1, 4), Diagonal(2, 6), 6));
}

TEST_CASE("crossing agrees with the cyclic-walk definition on the hexagon") {
    for (const Diagonal& d1 : all_diagonals(6))
        for (const Diagonal& d2 : all_diagonals(6))
            CHECK(crossing(d1, d2, 6) == testing::crossing_by_walk(d1, d2, 6));
}

TEST_CASE("crossing is symmetric, irreflexive and label-equivariant") {
    const int n = 9;
    for (const Diagonal& d1 : all_diagonals(n)) {
        CHECK(!crossing(d1, d1, n));
        for (const Diagonal& d2 : all_diagonals(n)) {
            bool c = crossing(d1, d2, n);
            CHECK(c == crossing(d2, d1, n));
            for (int k = 1; k < n; k += 3)
                CHECK(c == crossing(rotate(d1, k, n), rotate(d2, k, n), n));
            CHECK(c == crossing(reflect(d1, n), reflect(d2, n), n));
        }
    }
}

TEST_CASE("dissection validation") {
    CHECK_NOTHROW(Dissection(8, {Diagonal(1, 4), Diagonal(5, 8)}));
    CHECK_THROWS_AS(Dissection(8, {Diagonal(1, 4), Diagonal(2, 6)}), CrossingDiagonals);
    CHECK_THROWS_AS(Dissection(8, {Diagonal(1, 2)}), NotInternal);
    CHECK_NOTHROW(Dissection::empty(5));
}

TEST_CASE("split_polygon on the octagon example") {
    Dissection d(8, {Diagonal(1, 4), Diagonal(5, 8)});
    auto cells = split_polygon(8, d);
    REQUIRE(cells.size() == 3);
    CHECK(cells[0].vertices == std::vector<int>{1, 2, 3, 4});
    CHECK(cells[1].vertices == std::vector<int>{1, 4, 5, 8});
    CHECK(cells[2].vertices == std::vector<int>{5, 6, 7, 8});
}

TEST_CASE("split_polygon basics") {
    auto square = split_polygon(4, Dissection(4, {Diagonal(1, 3)}));
    REQUIRE(square.size() == 2);
    CHECK(square[0].vertices == std::vector<int>{1, 2, 3});
    CHECK(square[1].vertices == std::vector<int>{1, 3, 4});

    auto whole = split_polygon(6, Dissection::empty(6));
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].vertices == std::vector<int>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("split_polygon tiles the polygon on random dissections") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const int n = 4 + static_cast<int>(seed % 9);
        Dissection d = random_dissection(n, seed, RandomMode::any);
        auto cells = split_polygon(n, d);
        CHECK(cells.size() == d.size() + 1);

        std::size_t total = 0;
        std::map<Diagonal, int> edge_count;
        for (const Cell& c : cells) {
            total += static_cast<std::size_t>(c.size());
            for (int i = 0; i < c.size(); ++i) {
                // cyclically increasing vertex list
                if (i + 1 < c.size()) CHECK(c.vertices[i] < c.vertices[i + 1]);
                ++edge_count[Diagonal(c.vertices[i], c.vertices[(i + 1) % c.size()])];
            }
        }
        CHECK(total == static_cast<std::size_t>(n) + 2 * d.size());
        for (const auto& [e, count] : edge_count)
            CHECK(count == (d.contains(e) ? 2 : 1));
        for (int v = 1; v <= n; ++v)
            CHECK(edge_count.count(Diagonal(v, v % n + 1)) == 1);

        CHECK(d.size() <= static_cast<std::size_t>(n - 3));
        bool all_triangles = true;
        for (const Cell& c : cells) all_triangles = all_triangles && c.size() == 3;
        CHECK(all_triangles == (d.size() == static_cast<std::size_t>(n - 3)));
    }
}

TEST_CASE("crossed_by on the octagon example") {
    Dissection d(8, {Diagonal(1, 4), Diagonal(5, 8)});
    auto r = crossed_by(Diagonal(2, 6), d);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == Diagonal(1, 4));
    CHECK(r[1] == Diagonal(5, 8));
    CHECK(crossed_by(Diagonal(1, 4), d).empty());
    CHECK(crossed_by(Diagonal(2, 4), d).empty());
}

TEST_CASE("crossed_by order matches the geometric order along the chord") {
    // independent oracle: intersection parameters on the regular polygon
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        const int n = 5 + static_cast<int>(seed % 6);
        Dissection diss = random_dissection(n, seed, RandomMode::any);
        auto point = [&](int v) {
            double t = 2.0 * M_PI * (v - 1) / n;
            return std::pair<double, double>(std::cos(t), std::sin(t));
        };
        for (const Diagonal& d : all_diagonals(n)) {
            auto hits = crossed_by(d, diss);
            auto [ax, ay] = point(d.a());
            auto [bx, by] = point(d.b());
            double prev = -1.0;
            for (const Diagonal& g : hits) {
                auto [cx, cy] = point(g.a());
                auto [dx, dy] = point(g.b());
                // solve a + t(b-a) = c + u(d-c) for t
                double det = (bx - ax) * (cy - dy) - (by - ay) * (cx - dx);
                REQUIRE(std::abs(det) > 1e-12);
                double t = ((cx - ax) * (cy - dy) - (cy - ay) * (cx - dx)) / det;
                CHECK(t > prev);
                prev = t;
            }
        }
    }
}

#include "frieze/frieze_matrix.hpp"
#include "frieze/gallery.hpp"
#include "support/fixtures.hpp"

#include <doctest.h>

using namespace frieze;
using frieze::testing::constant_piece;
using frieze::testing::octagon_frieze;

namespace {

WeakFrieze symbolic_triangle() {
    auto var = [](const char* s) { return Scalar(RatFunc::variable(s)); };
    std::map<Diagonal, Scalar> values{{Diagonal(1, 2), var("a")},
                                      {Diagonal(2, 3), var("b")},
                                      {Diagonal(1, 3), var("c")}};
    return WeakFrieze(Dissection::empty(3), std::move(values));
}

WeakFrieze glued_square() {
    return glue(4, Dissection(4, {Diagonal(1, 3)}),
                {constant_piece(Cell{{1, 2, 3}}, Scalar(1)),
                 constant_piece(Cell{{1, 3, 4}}, Scalar(1))});
}

ScalarMatrix random_symmetric_zero_diag(int n, Rng& rng) {
    ScalarMatrix m(n, ScalarKind::rational);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Scalar v{Rational(rng.range(-9, 9), rng.range(1, 9))};
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    return m;
}

} // namespace

TEST_CASE("frieze_matrix lays out the values symmetrically") {
    WeakFrieze tri = symbolic_triangle();
    ScalarMatrix m = frieze_matrix(tri);
    auto var = [](const char* s) { return Scalar(RatFunc::variable(s)); };
    CHECK(m.at(0, 0) == Scalar::zero(ScalarKind::symbolic));
    CHECK(m.at(0, 1) == var("a"));
    CHECK(m.at(0, 2) == var("c"));
    CHECK(m.at(1, 2) == var("b"));
    CHECK(m.at(2, 1) == var("b"));

    ScalarMatrix ones = frieze_matrix(constant_frieze(5, Scalar(1)));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            CHECK(ones.at(i, j) == Scalar(i == j ? 0 : 1));

    ScalarMatrix oct = frieze_matrix(octagon_frieze());
    const long row1[] = {0, 1, 1, 1, 1, 2, 2, 1};
    for (int j = 0; j < 8; ++j) CHECK(oct.at(0, j) == Scalar(row1[j]));
}

TEST_CASE("det_bareiss handles the documented cases") {
    CHECK(det_bareiss(frieze_matrix(constant_frieze(5, Scalar(1)))) == Scalar(4));

    Scalar tri_det = det_bareiss(frieze_matrix(symbolic_triangle()));
    Scalar expected = Scalar(RatFunc::variable("a")) * Scalar(RatFunc::variable("b")) *
                      Scalar(RatFunc::variable("c")) * Scalar::constant(ScalarKind::symbolic, Rational(2));
    CHECK(tri_det == expected);

    ScalarMatrix diag(3, ScalarKind::rational);
    diag.at(0, 0) = Scalar(2);
    diag.at(1, 1) = Scalar(3);
    diag.at(2, 2) = Scalar(5);
    CHECK(det_bareiss(diag) == Scalar(30));
}

TEST_CASE("det_bareiss detects singular matrices") {
    ScalarMatrix m(3, ScalarKind::rational);
    for (int j = 0; j < 3; ++j) {
        m.at(0, j) = Scalar(j + 1);
        m.at(1, j) = Scalar(j + 1);
        m.at(2, j) = Scalar(2 * j - 1);
    }
    CHECK(det_bareiss(m).is_zero());
    CHECK(det_leibniz(m).is_zero());
}

TEST_CASE("det_bareiss falls back to fraction-field elimination") {
    // a denominator that is not a monomial
    RatFunc g(MultiPoly(1), MultiPoly::variable("x") + MultiPoly(1));
    ScalarMatrix m(2, ScalarKind::symbolic);
    m.at(0, 1) = Scalar(g);
    m.at(1, 0) = Scalar(g);
    CHECK(det_bareiss(m) == -(Scalar(g) * Scalar(g)));
}

TEST_CASE("det_leibniz matches the documented examples") {
    CHECK(det_leibniz(frieze_matrix(symbolic_triangle())) == det_bareiss(frieze_matrix(symbolic_triangle())));
    CHECK(det_leibniz(frieze_matrix(glued_square())) == Scalar(-4));

    ScalarMatrix one(1, ScalarKind::rational);
    CHECK(det_leibniz(one).is_zero());

    ScalarMatrix big(10, ScalarKind::rational);
    CHECK_THROWS_AS(det_leibniz(big), TooLarge);
}

TEST_CASE("determinant oracles agree on random symmetric matrices") {
    Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + static_cast<int>(rng.below(7));
        ScalarMatrix m = random_symmetric_zero_diag(n, rng);
        CHECK(det_bareiss(m) == det_leibniz(m));
    }
}

TEST_CASE("empty matrix determinant is 1") {
    CHECK(det_bareiss(ScalarMatrix(0, ScalarKind::rational)) == Scalar(1));
    CHECK(det_leibniz(ScalarMatrix(0, ScalarKind::rational)) == Scalar(1));
}

TEST_CASE("glue_det_check on the glued square") {
    GlueDetCheck r = glue_det_check(glued_square(), Diagonal(1, 3));
    CHECK(r.lhs == Scalar(-4));
    CHECK(r.det_p == Scalar(2));
    CHECK(r.det_q == Scalar(2));
    CHECK(r.rhs == Scalar(-4));
    CHECK(r.pass);
}

TEST_CASE("glue_det_check on the octagon example") {
    WeakFrieze f = octagon_frieze();
    CHECK(det_leibniz(frieze_matrix(f)) == Scalar(-27));
    GlueDetCheck r = glue_det_check(f, Diagonal(1, 4));
    CHECK(r.lhs == Scalar(-27));
    CHECK(r.det_p == Scalar(-3)); // constant-1 square piece
    CHECK(r.det_q == Scalar(-9)); // six-vertex piece, itself -(3*3) by a second split
    CHECK(r.pass);

    WeakFrieze q = restrict_to_cell(f, Cell{{1, 4, 5, 6, 7, 8}});
    GlueDetCheck inner = glue_det_check(q, Diagonal(3, 6)); // {5,8} in original labels
    CHECK(inner.lhs == Scalar(-9));
    CHECK(inner.det_p == Scalar(-3));
    CHECK(inner.det_q == Scalar(-3));
    CHECK(inner.pass);
}

TEST_CASE("glue_det_check rejects a zero gluing value") {
    WeakFrieze f = constant_frieze(4, Scalar(1)).with_value(Diagonal(1, 3), Scalar(0));
    CHECK_THROWS_AS(glue_det_check(f, Diagonal(1, 3)), ZeroGluingValue);
    CHECK_THROWS_AS(glue_det_check(constant_frieze(4, Scalar(1)), Diagonal(1, 2)), NotInternal);
}

TEST_CASE("the gluing determinant formula holds on seeded random friezes") {
    Rng rng(41);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 4 + static_cast<int>(rng.below(9));
        std::vector<Diagonal> internals;
        for (const Diagonal& d : all_diagonals(n))
            if (is_internal(d, n)) internals.push_back(d);
        Diagonal d = internals[rng.below(internals.size())];
        RandomFrieze rf = random_weak_frieze(n, Dissection(n, {d}), seed);
        GlueDetCheck r = glue_det_check(rf.frieze, d);
        CHECK(r.pass);
        if (n <= 7) CHECK(r.lhs == det_leibniz(frieze_matrix(rf.frieze)));
    }
}

TEST_CASE("one zero outer edge does not break the factorization") {
    WeakFrieze f = glued_square().with_value(Diagonal(1, 2), Scalar(0));
    // re-resolve f(2,4) for the changed edge: (f(1,2)f(3,4)+f(2,3)f(1,4))/f(1,3)
    f = f.with_value(Diagonal(2, 4), Scalar(1));
    REQUIRE(check_weak_frieze(f).pass());
    GlueDetCheck r = glue_det_check(f, Diagonal(1, 3));
    CHECK(r.pass);
}

TEST_CASE("structured reduction on the square") {
    StructuredReduction sr = structured_reduction(glued_square(), Diagonal(1, 3));
    CHECK(sr.r == 3);
    CHECK(sr.s == 3);
    CHECK(sr.p_core.size() == 1);
    CHECK(sr.gluing_value == Scalar(1));
    // block determinants: det(p_core) * det(M_{f_Q}) = det(M_f)
    Scalar det_core = det_bareiss(sr.p_core);
    CHECK(det_core * det_bareiss(sr.q_matrix) == Scalar(-4));
    CHECK(det_core * (-(sr.gluing_value * sr.gluing_value)) == det_bareiss(sr.p_matrix));
}

TEST_CASE("structured reduction zeroes the stated blocks on the octagon") {
    WeakFrieze f = octagon_frieze();
    StructuredReduction sr = structured_reduction(f, Diagonal(1, 4));
    CHECK(sr.r == 4);
    CHECK(sr.s == 6);
    // rows 1..r-2 of the reduced matrix vanish on the gluing columns and the
    // whole Q block (already verified internally; spot-check here)
    for (int i = 1; i <= sr.r - 2; ++i)
        for (int j = sr.r - 1; j <= 8; ++j) CHECK(sr.reduced.at(i - 1, j - 1).is_zero());

    CHECK(det_bareiss(sr.reduced) == det_bareiss(frieze_matrix(f)));
    CHECK(det_bareiss(sr.p_core) * det_bareiss(sr.q_matrix) == det_bareiss(frieze_matrix(f)));
    CHECK(det_bareiss(sr.p_core) * (-(sr.gluing_value * sr.gluing_value)) ==
          det_bareiss(sr.p_matrix));
}

TEST_CASE("structured reduction reports the violated claim") {
    WeakFrieze f = octagon_frieze().with_value(Diagonal(2, 6), Scalar(5));
    try {
        structured_reduction(f, Diagonal(1, 4));
        FAIL("expected ClaimViolated");
    } catch (const ClaimViolated& e) {
        CHECK(e.row == 1); // original vertex 2
        CHECK(e.col == 6); // original vertex 6
    }
}

TEST_CASE("determinant is invariant under relabeling") {
    WeakFrieze f = octagon_frieze();
    const int n = f.size();
    Scalar base = det_bareiss(frieze_matrix(f));
    for (int k = 1; k < n; k += 2) {
        auto wrap = [&](int v) { return (v - 1 + k) % n + 1; };
        std::map<Diagonal, Scalar> rotated, reflected;
        std::vector<Diagonal> rot_d, ref_d;
        for (const auto& [d, v] : f.values()) {
            rotated.emplace(Diagonal(wrap(d.a()), wrap(d.b())), v);
            reflected.emplace(Diagonal(n + 1 - d.a(), n + 1 - d.b()), v);
        }
        for (const Diagonal& d : f.dissection()) {
            rot_d.emplace_back(wrap(d.a()), wrap(d.b()));
            ref_d.emplace_back(n + 1 - d.a(), n + 1 - d.b());
        }
        CHECK(det_bareiss(frieze_matrix(WeakFrieze(Dissection(n, rot_d), rotated))) == base);
        CHECK(det_bareiss(frieze_matrix(WeakFrieze(Dissection(n, ref_d), reflected))) == base);
    }
}

#include "frieze/frieze_matrix.hpp"

#include <algorithm>
#include <cassert>

namespace frieze {

ScalarMatrix ScalarMatrix::submatrix(int row0, int col0, int size) const {
    ScalarMatrix s(size, kind_);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) s.at(i, j) = at(row0 + i, col0 + j);
    return s;
}

ScalarMatrix frieze_matrix(const WeakFrieze& f) {
    const int n = f.size();
    ScalarMatrix m(n, f.kind());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const Scalar& v = f.value(i, j);
            m.at(i - 1, j - 1) = v;
            m.at(j - 1, i - 1) = v;
        }
    return m;
}

namespace {

// Fraction-free Bareiss recurrence over a field (exact for rationals).
Scalar det_bareiss_field(ScalarMatrix m) {
    const int n = m.size();
    const Scalar one = Scalar::one(m.kind());
    int sign = 1;
    Scalar prev = one;
    for (int k = 0; k + 1 < n; ++k) {
        int pivot_row = -1;
        for (int i = k; i < n; ++i)
            if (!m.at(i, k).is_zero()) {
                pivot_row = i;
                break;
            }
        if (pivot_row < 0) return Scalar::zero(m.kind());
        if (pivot_row != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    Scalar det = m.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

// Bareiss over the polynomial ring; every division is exact by the
// divisibility property of the recurrence.
MultiPoly det_bareiss_poly(std::vector<std::vector<MultiPoly>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return MultiPoly(1);
    int sign = 1;
    MultiPoly prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        int pivot_row = -1;
        for (int i = k; i < n; ++i)
            if (!m[i][k].is_zero()) {
                pivot_row = i;
                break;
            }
        if (pivot_row < 0) return MultiPoly();
        if (pivot_row != k) {
            std::swap(m[k], m[pivot_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                MultiPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                if (num.is_zero()) {
                    m[i][j] = MultiPoly();
                    continue;
                }
                MultiPoly q;
                bool ok = MultiPoly::try_exact_divide(num, prev, &q);
                assert(ok && "Bareiss division must be exact over the polynomial ring");
                (void)ok;
                m[i][j] = std::move(q);
            }
        }
        prev = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// Plain fraction-field elimination; used for symbolic matrices whose
// denominators are not all monomials.
Scalar det_gauss_field(ScalarMatrix m) {
    const int n = m.size();
    int sign = 1;
    Scalar det = Scalar::one(m.kind());
    for (int k = 0; k < n; ++k) {
        int pivot_row = -1;
        for (int i = k; i < n; ++i)
            if (!m.at(i, k).is_zero()) {
                pivot_row = i;
                break;
            }
        if (pivot_row < 0) return Scalar::zero(m.kind());
        if (pivot_row != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot_row, j));
            sign = -sign;
        }
        const Scalar pivot = m.at(k, k);
        det *= pivot;
        for (int i = k + 1; i < n; ++i) {
            if (m.at(i, k).is_zero()) continue;
            Scalar factor = m.at(i, k) / pivot;
            for (int j = k; j < n; ++j) m.at(i, j) -= factor * m.at(k, j);
        }
    }
    return sign < 0 ? -det : det;
}

} // namespace

Scalar det_bareiss(const ScalarMatrix& m) {
    const int n = m.size();
    if (n == 0) return Scalar::one(m.kind());
    if (m.kind() == ScalarKind::rational) return det_bareiss_field(m);

    bool monomial_dens = true;
    Monomial lcm;
    for (int i = 0; i < n && monomial_dens; ++i)
        for (int j = 0; j < n; ++j) {
            const MultiPoly& den = m.at(i, j).as_ratfunc().den();
            if (!den.is_single_term()) {
                monomial_dens = false;
                break;
            }
            lcm = monomial_lcm(lcm, den.leading_monomial());
        }
    if (!monomial_dens) return det_gauss_field(m);

    // clear the monomial denominators: det(cM) = c^n det(M)
    std::vector<std::vector<MultiPoly>> poly(static_cast<std::size_t>(n),
                                             std::vector<MultiPoly>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const RatFunc& e = m.at(i, j).as_ratfunc();
            MultiPoly scale = MultiPoly::term(monomial_div(lcm, e.den().leading_monomial()),
                                              e.den().leading_coeff().inv());
            poly[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e.num() * scale;
        }
    MultiPoly det_poly = det_bareiss_poly(std::move(poly));
    MultiPoly scale_back = MultiPoly::term(lcm, Rational(1)).pow(static_cast<unsigned>(n));
    return Scalar(RatFunc(std::move(det_poly), std::move(scale_back)));
}

namespace {

void leibniz_rec(const ScalarMatrix& m, int row, unsigned used, int inversions, const Scalar& product,
                 Scalar& total) {
    const int n = m.size();
    if (row == n) {
        total += (inversions % 2 == 0) ? product : -product;
        return;
    }
    for (int j = 0; j < n; ++j) {
        if (used & (1u << j)) continue;
        const Scalar& e = m.at(row, j);
        if (e.is_zero()) continue;
        int inv = 0;
        for (int t = j + 1; t < n; ++t)
            if (used & (1u << t)) ++inv;
        leibniz_rec(m, row + 1, used | (1u << j), inversions + inv, product * e, total);
    }
}

} // namespace

Scalar det_leibniz(const ScalarMatrix& m) {
    if (m.size() > 9) throw TooLarge("permutation expansion limited to size 9");
    if (m.size() == 0) return Scalar::one(m.kind());
    Scalar total = Scalar::zero(m.kind());
    leibniz_rec(m, 0, 0u, 0, Scalar::one(m.kind()), total);
    return total;
}

GlueDetCheck glue_det_check(const WeakFrieze& f, const Diagonal& d) {
    const int n = f.size();
    if (!is_internal(d, n)) throw NotInternal(d);
    const Scalar& c = f.value(d);
    if (c.is_zero()) throw ZeroGluingValue(d);

    const std::vector<Cell> cells = split_polygon(n, Dissection(n, {d}));
    assert(cells.size() == 2);
    GlueDetCheck out{Scalar::zero(f.kind()), Scalar::zero(f.kind()), Scalar::zero(f.kind()),
                     Scalar::zero(f.kind()), false};
    out.lhs = det_bareiss(frieze_matrix(f));
    out.det_p = det_bareiss(frieze_matrix(restrict_to_cell(f, cells[0])));
    out.det_q = det_bareiss(frieze_matrix(restrict_to_cell(f, cells[1])));
    out.rhs = -(out.det_p * out.det_q) / (c * c);
    out.pass = out.lhs == out.rhs;
    return out;
}

StructuredReduction structured_reduction(const WeakFrieze& f, const Diagonal& d) {
    const int n = f.size();
    if (!is_internal(d, n)) throw NotInternal(d);
    const Scalar c = f.value(d);
    if (c.is_zero()) throw ZeroGluingValue(d);

    const int a = d.a();
    const int b = d.b();
    const int r = b - a + 1;     // cell with vertices a..b
    const int s = n - r + 2;     // the other cell

    // proof labels: interior of P -> 1..r-2, b -> r-1, a -> r, interior of Q -> r+1..r+s-2
    std::vector<int> new_to_old(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 1; k <= r - 2; ++k) new_to_old[static_cast<std::size_t>(k)] = a + k;
    new_to_old[static_cast<std::size_t>(r - 1)] = b;
    new_to_old[static_cast<std::size_t>(r)] = a;
    for (int k = 1; k <= s - 2; ++k)
        new_to_old[static_cast<std::size_t>(r + k)] = (b + k - 1) % n + 1;

    ScalarMatrix full = frieze_matrix(f);
    ScalarMatrix permuted(n, f.kind());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            permuted.at(i - 1, j - 1) = full.at(new_to_old[static_cast<std::size_t>(i)] - 1,
                                                new_to_old[static_cast<std::size_t>(j)] - 1);

    ScalarMatrix reduced = permuted;
    for (int i = 1; i <= r - 2; ++i) {
        Scalar fac_r = permuted.at(i - 1, r - 2) / c;  // c^{-1} x_{i,r-1}
        Scalar fac_r1 = permuted.at(i - 1, r - 1) / c; // c^{-1} x_{i,r}
        for (int j = 1; j <= n; ++j)
            reduced.at(i - 1, j - 1) = permuted.at(i - 1, j - 1) -
                                       fac_r * permuted.at(r - 1, j - 1) -
                                       fac_r1 * permuted.at(r - 2, j - 1);
    }

    // zero claims: columns r-1 and r, and the whole Q block of the P rows
    for (int i = 1; i <= r - 2; ++i) {
        if (!reduced.at(i - 1, r - 2).is_zero()) throw ClaimViolated(i, r - 1);
        if (!reduced.at(i - 1, r - 1).is_zero()) throw ClaimViolated(i, r);
        for (int j = r + 1; j <= n; ++j)
            if (!reduced.at(i - 1, j - 1).is_zero()) throw ClaimViolated(i, j);
    }

    StructuredReduction out{r,
                            s,
                            c,
                            std::move(new_to_old),
                            std::move(permuted),
                            std::move(reduced),
                            ScalarMatrix(0, f.kind()),
                            ScalarMatrix(0, f.kind()),
                            ScalarMatrix(0, f.kind())};
    out.p_core = out.reduced.submatrix(0, 0, r - 2);
    out.p_matrix = out.permuted.submatrix(0, 0, r);
    out.q_matrix = out.permuted.submatrix(r - 2, r - 2, s);
    return out;
}

} // namespace frieze

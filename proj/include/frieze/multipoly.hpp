#pragma once

/**
 * @file multipoly.hpp
 * @brief Sparse multivariate polynomials over the rationals.
 *
 * A monomial maps indeterminate names to positive exponents; a polynomial
 * maps monomials to nonzero rational coefficients. Terms are kept in the
 * canonical order (pure lexicographic, variables compared by name) so that
 * printing is deterministic and the leading term is well defined.
 */

#include "frieze/rational.hpp"

#include <map>
#include <set>
#include <string>

namespace frieze {

/// Indeterminate name -> exponent; entries are always > 0.
using Monomial = std::map<std::string, unsigned>;

Monomial monomial_mul(const Monomial& a, const Monomial& b);
bool monomial_divides(const Monomial& d, const Monomial& m);
Monomial monomial_div(const Monomial& m, const Monomial& d); // pre: d divides m
Monomial monomial_gcd(const Monomial& a, const Monomial& b);
Monomial monomial_lcm(const Monomial& a, const Monomial& b);

/// Orders monomials descending in pure lex (earlier names weigh more), so
/// map iteration visits the leading term first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class MultiPoly {
public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    MultiPoly() = default; // zero
    explicit MultiPoly(const Rational& c);
    explicit MultiPoly(long c);
    static MultiPoly variable(const std::string& name);
    static MultiPoly term(Monomial m, const Rational& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    /// Single-term polynomials (monomial times coefficient).
    bool is_single_term() const { return terms_.size() == 1; }
    Rational constant_value() const; // pre: is_constant
    const Monomial& leading_monomial() const; // pre: !is_zero
    const Rational& leading_coeff() const;    // pre: !is_zero

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly operator*(const Rational& c) const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

    MultiPoly pow(unsigned e) const;

    /// Per-variable minimum exponent across all terms.  pre: !is_zero
    Monomial monomial_content() const;
    /// Divide every term by m.  pre: m divides every term.
    MultiPoly divided_by_monomial(const Monomial& m) const;

    /// True when at most one distinct indeterminate occurs; names it (or
    /// clears `var` for constants).
    bool univariate_in(std::string& var) const;

    std::set<std::string> variables() const;

    /// Evaluate at a point; every variable of the polynomial must be bound.
    Rational eval(const std::map<std::string, Rational>& point) const;

    /// Exact division f = q * g. Returns false when g does not divide f.
    static bool try_exact_divide(const MultiPoly& f, const MultiPoly& g, MultiPoly* quotient);

private:
    void add_term(const Monomial& m, const Rational& c);
    Terms terms_;
};

/// Monic gcd of two univariate polynomials in the same indeterminate
/// (constants allowed). pre: univariate_in agrees on the variable.
MultiPoly gcd_univariate(const MultiPoly& a, const MultiPoly& b);

} // namespace frieze

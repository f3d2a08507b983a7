#pragma once

/**
 * @file ratfunc.hpp
 * @brief Rational functions in named indeterminates over the rationals.
 *
 * Values are fractions of MultiPoly. Reduction is best effort (common
 * monomial factor, univariate gcd, denominator made monic); equality is
 * decided by cross-multiplication, so unreduced common factors never
 * affect correctness.
 */

#include "frieze/multipoly.hpp"

namespace frieze {

class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    explicit RatFunc(MultiPoly num) : num_(std::move(num)), den_(1) {}
    RatFunc(MultiPoly num, MultiPoly den);
    static RatFunc variable(const std::string& name) { return RatFunc(MultiPoly::variable(name)); }
    static RatFunc constant(const Rational& c) { return RatFunc(MultiPoly(c)); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b); // throws DivisionByZero

    /// Cross-multiplication equality: num*o.den == o.num*den.
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    RatFunc pow(unsigned e) const;

    std::set<std::string> variables() const;

    /// Evaluate at a rational point; throws DivisionByZero when the
    /// denominator vanishes there.
    Rational eval(const std::map<std::string, Rational>& point) const;

private:
    void normalize();
    MultiPoly num_, den_;
};

} // namespace frieze

#pragma once

/**
 * @file scalar.hpp
 * @brief The field elements used throughout: exact rationals or rational
 *        functions, as a tagged union.
 *
 * All scalars taking part in one computation must share the same variant;
 * mixing variants in arithmetic raises VariantMismatch.
 */

#include "frieze/ratfunc.hpp"

#include <iosfwd>
#include <variant>

namespace frieze {

struct VariantMismatch : Error {
    VariantMismatch() : Error("mixed scalar variants in one operation") {}
};

enum class ScalarKind { rational, symbolic };

class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(Rational r) : v_(std::move(r)) {}
    Scalar(RatFunc f) : v_(std::move(f)) {}
    Scalar(long c) : v_(Rational(c)) {}

    static Scalar zero(ScalarKind k) { return constant(k, Rational(0)); }
    static Scalar one(ScalarKind k) { return constant(k, Rational(1)); }
    static Scalar constant(ScalarKind k, const Rational& c) {
        if (k == ScalarKind::rational) return Scalar(c);
        return Scalar(RatFunc::constant(c));
    }

    ScalarKind kind() const {
        return std::holds_alternative<Rational>(v_) ? ScalarKind::rational : ScalarKind::symbolic;
    }

    const Rational& as_rational() const {
        if (const auto* r = std::get_if<Rational>(&v_)) return *r;
        throw VariantMismatch();
    }
    const RatFunc& as_ratfunc() const {
        if (const auto* f = std::get_if<RatFunc>(&v_)) return *f;
        throw VariantMismatch();
    }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    /// Exact equality; scalars of different variants are never equal.
    friend bool operator==(const Scalar& a, const Scalar& b);

    Scalar pow(unsigned e) const;

    /// Rational scalars return themselves; symbolic ones evaluate.
    Rational eval(const std::map<std::string, Rational>& point) const;

    std::set<std::string> variables() const;

private:
    std::variant<Rational, RatFunc> v_;
};

/// Prints the canonical text form (see scalar_text.hpp).
std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace frieze

#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rational numbers.
 *
 * Canonical form is maintained at all times: denominator positive,
 * numerator and denominator coprime, zero stored as 0/1. Backed by GMP.
 */

#include "frieze/error.hpp"

#include <gmpxx.h>

#include <compare>
#include <string>
#include <utility>

namespace frieze {

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

class Rational {
public:
    Rational() : q_(0) {}
    Rational(long value) : q_(static_cast<signed long int>(value)) {}
    explicit Rational(const mpz_class& value) : q_(value) {}

    Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
        if (sgn(den) == 0) throw DivisionByZero();
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return make(-q_); }

    friend Rational operator+(const Rational& a, const Rational& b) { return make(a.q_ + b.q_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return make(a.q_ - b.q_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return make(a.q_ * b.q_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZero();
        return make(a.q_ / b.q_);
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.q_, b.q_) <=> 0;
    }

    /// Multiplicative inverse; throws DivisionByZero on zero.
    Rational inv() const {
        if (is_zero()) throw DivisionByZero();
        return make(1 / q_);
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational pow(unsigned long e) const {
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), e);
        mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), e);
        Rational r;
        r.q_ = mpq_class(n, d); // powers of a canonical pair stay canonical
        return r;
    }

    /// "5/6", "-4", "0" -- the canonical text form.
    std::string str() const { return q_.get_str(); }

private:
    static Rational make(mpq_class q) {
        Rational r;
        r.q_ = std::move(q);
        return r;
    }

    mpq_class q_;
};

} // namespace frieze

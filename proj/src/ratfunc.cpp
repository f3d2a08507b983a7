#include "frieze/ratfunc.hpp"

#include <cassert>

namespace frieze {

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly(1);
        return;
    }

    // cancel the common monomial factor
    Monomial common = monomial_gcd(num_.monomial_content(), den_.monomial_content());
    if (!common.empty()) {
        num_ = num_.divided_by_monomial(common);
        den_ = den_.divided_by_monomial(common);
    }

    // univariate pairs get a real gcd
    std::string vn, vd;
    if (num_.univariate_in(vn) && den_.univariate_in(vd) &&
        (vn.empty() || vd.empty() || vn == vd) && !(vn.empty() && vd.empty())) {
        MultiPoly g = gcd_univariate(num_, den_);
        if (!g.is_constant()) {
            MultiPoly qn, qd;
            bool okn = MultiPoly::try_exact_divide(num_, g, &qn);
            bool okd = MultiPoly::try_exact_divide(den_, g, &qd);
            assert(okn && okd);
            (void)okn;
            (void)okd;
            num_ = std::move(qn);
            den_ = std::move(qd);
        }
    }

    // make the denominator monic under the canonical term order
    const Rational& lc = den_.leading_coeff();
    if (!lc.is_one()) {
        Rational inv = lc.inv();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero();
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(unsigned e) const {
    return RatFunc(num_.pow(e), den_.pow(e));
}

std::set<std::string> RatFunc::variables() const {
    std::set<std::string> r = num_.variables();
    std::set<std::string> d = den_.variables();
    r.insert(d.begin(), d.end());
    return r;
}

Rational RatFunc::eval(const std::map<std::string, Rational>& point) const {
    Rational d = den_.eval(point);
    if (d.is_zero()) throw DivisionByZero();
    return num_.eval(point) / d;
}

} // namespace frieze

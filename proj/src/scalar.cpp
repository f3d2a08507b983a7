#include "frieze/scalar.hpp"

namespace frieze {

namespace {

template <typename RatOp, typename FunOp>
Scalar binary(const Scalar& a, const Scalar& b, RatOp rop, FunOp fop) {
    if (a.kind() != b.kind()) throw VariantMismatch();
    if (a.kind() == ScalarKind::rational) return Scalar(rop(a.as_rational(), b.as_rational()));
    return Scalar(fop(a.as_ratfunc(), b.as_ratfunc()));
}

} // namespace

bool Scalar::is_zero() const {
    if (kind() == ScalarKind::rational) return as_rational().is_zero();
    return as_ratfunc().is_zero();
}

bool Scalar::is_one() const {
    if (kind() == ScalarKind::rational) return as_rational().is_one();
    return as_ratfunc().is_one();
}

Scalar Scalar::operator-() const {
    if (kind() == ScalarKind::rational) return Scalar(-as_rational());
    return Scalar(-as_ratfunc());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return x + y; },
                  [](const auto& x, const auto& y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return x - y; },
                  [](const auto& x, const auto& y) { return x - y; });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return x * y; },
                  [](const auto& x, const auto& y) { return x * y; });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return x / y; },
                  [](const auto& x, const auto& y) { return x / y; });
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.kind() != b.kind()) return false;
    if (a.kind() == ScalarKind::rational) return a.as_rational() == b.as_rational();
    return a.as_ratfunc() == b.as_ratfunc();
}

Scalar Scalar::pow(unsigned e) const {
    if (kind() == ScalarKind::rational) return Scalar(as_rational().pow(e));
    return Scalar(as_ratfunc().pow(e));
}

Rational Scalar::eval(const std::map<std::string, Rational>& point) const {
    if (kind() == ScalarKind::rational) return as_rational();
    return as_ratfunc().eval(point);
}

std::set<std::string> Scalar::variables() const {
    if (kind() == ScalarKind::rational) return {};
    return as_ratfunc().variables();
}

} // namespace frieze

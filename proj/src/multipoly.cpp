#include "frieze/multipoly.hpp"

#include <cassert>
#include <vector>

namespace frieze {

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (const auto& [name, e] : b) r[name] += e;
    return r;
}

bool monomial_divides(const Monomial& d, const Monomial& m) {
    for (const auto& [name, e] : d) {
        auto it = m.find(name);
        if (it == m.end() || it->second < e) return false;
    }
    return true;
}

Monomial monomial_div(const Monomial& m, const Monomial& d) {
    Monomial r = m;
    for (const auto& [name, e] : d) {
        auto it = r.find(name);
        assert(it != r.end() && it->second >= e);
        if (it->second == e)
            r.erase(it);
        else
            it->second -= e;
    }
    return r;
}

Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (const auto& [name, e] : a) {
        auto it = b.find(name);
        if (it != b.end()) r[name] = std::min(e, it->second);
    }
    return r;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (const auto& [name, e] : b) {
        auto& x = r[name];
        x = std::max(x, e);
    }
    return r;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) return true;  // a has a positive power on an earlier name
        if (ib->first < ia->first) return false;
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    return ia != a.end();
}

MultiPoly::MultiPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MultiPoly::MultiPoly(long c) : MultiPoly(Rational(c)) {}

MultiPoly MultiPoly::variable(const std::string& name) {
    MultiPoly p;
    p.terms_.emplace(Monomial{{name, 1u}}, Rational(1));
    return p;
}

MultiPoly MultiPoly::term(Monomial m, const Rational& c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

bool MultiPoly::is_one() const {
    return is_constant() && !is_zero() && terms_.begin()->second.is_one();
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    assert(is_constant());
    return terms_.begin()->second;
}

const Monomial& MultiPoly::leading_monomial() const {
    assert(!is_zero());
    return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coeff() const {
    assert(!is_zero());
    return terms_.begin()->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) { return *this = *this + o; }
MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this = *this - o; }
MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r(Rational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return r;
}

Monomial MultiPoly::monomial_content() const {
    assert(!is_zero());
    auto it = terms_.begin();
    Monomial r = it->first;
    for (++it; it != terms_.end() && !r.empty(); ++it) r = monomial_gcd(r, it->first);
    return r;
}

MultiPoly MultiPoly::divided_by_monomial(const Monomial& m) const {
    MultiPoly r;
    for (const auto& [mono, c] : terms_) r.terms_.emplace(monomial_div(mono, m), c);
    return r;
}

bool MultiPoly::univariate_in(std::string& var) const {
    var.clear();
    for (const auto& [m, c] : terms_) {
        for (const auto& [name, e] : m) {
            if (var.empty())
                var = name;
            else if (var != name)
                return false;
        }
    }
    return true;
}

std::set<std::string> MultiPoly::variables() const {
    std::set<std::string> r;
    for (const auto& [m, c] : terms_)
        for (const auto& [name, e] : m) r.insert(name);
    return r;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& point) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [name, e] : m) {
            auto it = point.find(name);
            if (it == point.end()) throw Error("unbound indeterminate: " + name);
            t *= it->second.pow(e);
        }
        total += t;
    }
    return total;
}

bool MultiPoly::try_exact_divide(const MultiPoly& f, const MultiPoly& g, MultiPoly* quotient) {
    assert(!g.is_zero());
    MultiPoly rem = f;
    MultiPoly quot;
    const Monomial& gm = g.leading_monomial();
    const Rational& gc = g.leading_coeff();
    while (!rem.is_zero()) {
        const Monomial& lm = rem.leading_monomial();
        if (!monomial_divides(gm, lm)) return false;
        MultiPoly t = term(monomial_div(lm, gm), rem.leading_coeff() / gc);
        quot += t;
        rem -= t * g;
    }
    *quotient = quot;
    return true;
}

namespace {

// Dense univariate helpers for the Euclidean gcd (degrees here are small).
std::vector<Rational> to_dense(const MultiPoly& p, const std::string& var) {
    unsigned deg = 0;
    for (const auto& [m, c] : p.terms()) {
        auto it = m.find(var);
        if (it != m.end()) deg = std::max(deg, it->second);
    }
    std::vector<Rational> v(deg + 1, Rational(0));
    for (const auto& [m, c] : p.terms()) {
        auto it = m.find(var);
        v[it == m.end() ? 0 : it->second] = c;
    }
    return v;
}

void trim(std::vector<Rational>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// a mod b, both nonempty after trim; leading coefficient of b nonzero.
std::vector<Rational> poly_mod(std::vector<Rational> a, const std::vector<Rational>& b) {
    while (a.size() >= b.size()) {
        Rational factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
        a.pop_back();
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

MultiPoly from_dense(const std::vector<Rational>& v, const std::string& var) {
    MultiPoly p;
    for (std::size_t e = 0; e < v.size(); ++e) {
        if (v[e].is_zero()) continue;
        Monomial m;
        if (e > 0) m[var] = static_cast<unsigned>(e);
        p += MultiPoly::term(m, v[e]);
    }
    return p;
}

} // namespace

MultiPoly gcd_univariate(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() && b.is_zero()) return MultiPoly();
    std::string va, vb;
    bool ua = a.univariate_in(va);
    bool ub = b.univariate_in(vb);
    assert(ua && ub);
    (void)ua;
    (void)ub;
    assert(va.empty() || vb.empty() || va == vb);
    const std::string var = va.empty() ? vb : va;
    if (var.empty()) return MultiPoly(Rational(1));
    if (a.is_zero() || b.is_zero()) {
        const MultiPoly& p = a.is_zero() ? b : a;
        return p * p.leading_coeff().inv();
    }

    std::vector<Rational> x = to_dense(a, var);
    std::vector<Rational> y = to_dense(b, var);
    trim(x);
    trim(y);
    while (!y.empty()) {
        std::vector<Rational> r = poly_mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    // normalize monic
    Rational lc = x.back();
    for (auto& c : x) c /= lc;
    return from_dense(x, var);
}

} // namespace frieze

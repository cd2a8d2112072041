#include "hopfdom/ratpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfdom {

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

RatPoly RatPoly::monomial(std::size_t degree, Rational c) {
    std::vector<Rational> v(degree + 1);
    v[degree] = std::move(c);
    return RatPoly(std::move(v));
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<std::int64_t>(i));
    return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return {};
    Rational inv = leading().inverse();
    return inv * *this;
}

Rational RatPoly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-() const {
    std::vector<Rational> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return RatPoly(std::move(r));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(r));
}

RatPoly operator*(const Rational& s, const RatPoly& a) {
    if (s.is_zero()) return {};
    std::vector<Rational> r(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = s * a.c_[i];
    return RatPoly(std::move(r));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = c_;
    int dd = divisor.degree();
    if (degree() < dd) return {RatPoly{}, *this};
    std::vector<Rational> quo(static_cast<std::size_t>(degree() - dd + 1));
    Rational lead_inv = divisor.leading().inverse();
    for (int i = degree(); i >= dd; --i) {
        const Rational& top = rem[static_cast<std::size_t>(i)];
        if (top.is_zero()) continue;
        Rational f = top * lead_inv;
        quo[static_cast<std::size_t>(i - dd)] = f;
        for (int j = 0; j <= dd; ++j) {
            rem[static_cast<std::size_t>(i - dd + j)] -= f * divisor.c_[static_cast<std::size_t>(j)];
        }
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::exact_div(const RatPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

std::string RatPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Rational c = c_[i];
        if (!first) {
            os << (c.sign() < 0 ? " - " : " + ");
            c = c.sign() < 0 ? -c : c;
        } else if (c.sign() < 0 && i > 0 && c == Rational(-1)) {
            os << "-";
            c = Rational(1);
        }
        first = false;
        if (i == 0 || !c.is_one()) os << c.to_string();
        if (i > 0) {
            if (!c.is_one()) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        RatPoly r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ExtendedGcd extended_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    RatPoly s0 = RatPoly::constant(Rational(1)), s1;
    RatPoly t0, t1 = RatPoly::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        RatPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        RatPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational inv = r0.leading().inverse();
    return {inv * r0, inv * s0, inv * t0};
}

RatPoly squarefree_part(const RatPoly& f) {
    if (f.degree() <= 0) return f.monic();
    return f.exact_div(gcd(f, f.derivative())).monic();
}

}  // namespace hopfdom

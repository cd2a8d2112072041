#include "hopfdom/qcombinat.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace hopfdom {

namespace {

QPolynomial one_minus_q_pow(int k) {
    return QPolynomial::constant(Rational(1)) - QPolynomial::monomial(static_cast<std::size_t>(k));
}

}  // namespace

QPolynomial q_integer(int n) {
    if (n < 0) throw std::invalid_argument("q_integer requires n >= 0");
    std::vector<Rational> c(static_cast<std::size_t>(n), Rational(1));
    return QPolynomial(std::move(c));
}

QPolynomial gauss_binomial(int a, int r) {
    if (a < 0) throw std::invalid_argument("gauss_binomial requires a >= 0");
    if (r < 0 || r > a) return {};
    if (r > a - r) r = a - r;
    static std::mutex mu;
    static std::map<std::pair<int, int>, QPolynomial> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = memo.find({a, r}); it != memo.end()) return it->second;
    }
    QPolynomial num = QPolynomial::constant(Rational(1));
    QPolynomial den = QPolynomial::constant(Rational(1));
    for (int i = 1; i <= r; ++i) {
        num = num * one_minus_q_pow(a - r + i);
        den = den * one_minus_q_pow(i);
    }
    QPolynomial result = num.exact_div(den);
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(std::make_pair(a, r), result);
    return result;
}

CycloScalar evaluate(const QPolynomial& p, const CycloScalar& q) {
    CycloScalar acc = CycloScalar::zero(q.level());
    CycloScalar power = CycloScalar::one(q.level());
    const auto& c = p.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (!c[j].is_zero()) acc += CycloScalar::rational(q.level(), c[j]) * power;
        if (j + 1 < c.size()) power = power * q;
    }
    return acc;
}

bool vanishes_at(int a, const CycloScalar& xi) {
    if (a < 2) throw std::invalid_argument("vanishes_at requires a >= 2");
    if (xi.is_zero()) throw std::invalid_argument("vanishes_at requires a nonzero argument");
    bool all_zero = true;
    for (int r = 1; r < a && all_zero; ++r) all_zero = evaluate(gauss_binomial(a, r), xi).is_zero();
    const bool primitive = order_of_unity(xi) == a;
    if (all_zero != primitive) {
        throw std::logic_error("q-binomial vanishing disagrees with the order of " + xi.to_string());
    }
    return all_zero;
}

std::vector<CycloScalar> skew_binomial_expand(int a, const CycloScalar& q) {
    if (a < 0) throw std::invalid_argument("skew_binomial_expand requires a >= 0");
    std::vector<CycloScalar> out;
    out.reserve(static_cast<std::size_t>(a) + 1);
    for (int r = 0; r <= a; ++r) out.push_back(evaluate(gauss_binomial(a, r), q));
    return out;
}

}  // namespace hopfdom

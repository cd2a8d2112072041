#include "hopfdom/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace hopfdom {

namespace {

constexpr __int128 kSmallMax = std::numeric_limits<std::int64_t>::max();

bool fits(__int128 v) { return v <= kSmallMax && v >= -kSmallMax; }

__int128 gcd_i128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class mpz_from_i128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

}  // namespace

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) noexcept { return std::gcd(a, b); }

std::int64_t lcm_i64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    __int128 l = static_cast<__int128>(a / std::gcd(a, b)) * b;
    if (l < 0) l = -l;
    if (!fits(l)) throw std::overflow_error("lcm overflow");
    return static_cast<std::int64_t>(l);
}

Rational::Rational(std::int64_t n) noexcept : num_(n) {}

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("division by zero");
    *this = from_i128(n, d);
}

Rational::Rational(const mpq_class& q) { *this = normalized(q); }

Rational Rational::from_i128(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd_i128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n == 0) d = 1;
    Rational r;
    if (fits(n) && fits(d)) {
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
    q.canonicalize();
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

Rational Rational::normalized(mpq_class q) {
    q.canonicalize();
    Rational r;
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        long n = q.get_num().get_si();
        long d = q.get_den().get_si();
        if (n != std::numeric_limits<long>::min() && d != std::numeric_limits<long>::min()) {
            r.num_ = n;
            r.den_ = d;
            return r;
        }
    }
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return normalized(q);
}

bool Rational::is_integer() const noexcept {
    if (!big_) return den_ == 1;
    return big_->get_den() == 1;
}

int Rational::sign() const noexcept {
    if (!big_) return (num_ > 0) - (num_ < 0);
    return sgn(*big_);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q{mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_))};
    return q;
}

std::string Rational::to_string() const {
    if (big_) return big_->get_str(10);
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    if (!big_) {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    return normalized(mpq_class(-*big_));
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (!big_) return from_i128(den_, num_);
    return normalized(mpq_class(1 / *big_));
}

Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            __int128 s = static_cast<__int128>(a.num_) + b.num_;
            if (fits(s)) return Rational(static_cast<std::int64_t>(s));
        }
        __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return Rational::from_i128(n, d);
    }
    return Rational::normalized(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            __int128 p = static_cast<__int128>(a.num_) * b.num_;
            if (fits(p)) return Rational(static_cast<std::int64_t>(p));
        }
        return Rational::from_i128(static_cast<__int128>(a.num_) * b.num_,
                                   static_cast<__int128>(a.den_) * b.den_);
    }
    return Rational::normalized(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        __int128 l = static_cast<__int128>(a.num_) * b.den_;
        __int128 r = static_cast<__int128>(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

}  // namespace hopfdom

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hopfdom {

/// Exact rational number.
///
/// Values whose numerator and denominator both fit in 63 bits are kept
/// inline; anything larger is promoted to a GMP rational. The representation
/// is always normalized (positive denominator, reduced fraction) and a value
/// that fits inline is never stored in GMP form, so structural equality is
/// value equality.
class Rational {
   public:
    Rational() noexcept = default;
    Rational(std::int64_t n) noexcept;  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(const mpq_class& q);

    /// Parses "p", "-p", or "p/q".
    static Rational parse(std::string_view text);

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const noexcept;
    bool is_small() const noexcept { return !big_; }
    bool is_small_integer() const noexcept { return !big_ && den_ == 1; }
    int sign() const noexcept;

    /// Inline numerator/denominator; only meaningful when is_small().
    std::int64_t small_num() const noexcept { return num_; }
    std::int64_t small_den() const noexcept { return den_; }

    mpq_class to_mpq() const;
    std::string to_string() const;

    Rational operator-() const;
    Rational inverse() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

   private:
    static Rational from_i128(__int128 n, __int128 d);
    static Rational normalized(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) noexcept;
std::int64_t lcm_i64(std::int64_t a, std::int64_t b);

}  // namespace hopfdom

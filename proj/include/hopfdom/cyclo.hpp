#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfdom/ratpoly.hpp"
#include "hopfdom/rational.hpp"

namespace hopfdom {

int euler_phi(int n);

/// The l-th cyclotomic polynomial (monic, degree euler_phi(l)). Memoized.
const RatPoly& cyclotomic_polynomial(int level);

struct CycloContext;

/// Exact element of the cyclotomic field Q(zeta_l).
///
/// Stored as the unique residue modulo Phi_l, i.e. euler_phi(l) rational
/// coefficients of 1, z, z^2, ... where z = exp(2*pi*i/l). Operands of
/// different levels are lifted to the lcm level before arithmetic.
class CycloScalar {
   public:
    static constexpr int kMaxLevel = 20000;

    /// Zero at level 1.
    CycloScalar();

    static CycloScalar zero(int level);
    static CycloScalar one(int level);
    /// z_level^k.
    static CycloScalar root_power(int level, std::int64_t k);
    static CycloScalar rational(int level, const Rational& r);
    static CycloScalar integer(int level, std::int64_t n) { return rational(level, Rational(n)); }
    /// Polynomial in z of any length; reduced modulo Phi_level.
    static CycloScalar from_coeffs(int level, const std::vector<Rational>& coeffs);

    int level() const noexcept;
    int degree() const noexcept;  // euler_phi(level)
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    /// The value as a rational number, when it lies in Q.
    std::optional<Rational> as_rational() const;
    /// k in [0, level) with value == z^k, if any.
    std::optional<int> root_exponent() const;

    /// Same value expressed at a multiple of the current level.
    CycloScalar lift(int new_level) const;

    CycloScalar operator-() const;
    CycloScalar inverse() const;
    CycloScalar pow(std::int64_t e) const;

    friend CycloScalar operator+(const CycloScalar& a, const CycloScalar& b);
    friend CycloScalar operator-(const CycloScalar& a, const CycloScalar& b);
    friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);
    friend CycloScalar operator/(const CycloScalar& a, const CycloScalar& b);
    CycloScalar& operator+=(const CycloScalar& b) { return *this = *this + b; }
    CycloScalar& operator-=(const CycloScalar& b) { return *this = *this - b; }
    CycloScalar& operator*=(const CycloScalar& b) { return *this = *this * b; }

    /// Value equality (lifts to a common level).
    friend bool operator==(const CycloScalar& a, const CycloScalar& b);

    /// Fixed total order: level first, then the coefficient sequence
    /// lexicographically. Not a field order; used for deterministic tie-breaks.
    friend bool lex_less(const CycloScalar& a, const CycloScalar& b);

    /// "p/q" strings of the coefficient sequence.
    std::vector<std::string> coeff_strings() const;
    /// Human-readable polynomial in z<level>, e.g. "-1 - z3".
    std::string to_string() const;

   private:
    CycloScalar(const CycloContext* ctx, std::vector<Rational> c, int root_exp);
    static const CycloContext& context(int level);
    static CycloScalar power_of_root(const CycloContext& ctx, std::int64_t k);
    static CycloScalar mul_same_level(const CycloScalar& a, const CycloScalar& b);

    const CycloContext* ctx_;
    std::vector<Rational> c_;
    // k when the value is known to be z^k; -1 when unknown. Pure fast-path
    // hint: never consulted for equality.
    int root_exp_ = -1;
};

/// z_l^k reduced modulo Phi_l.
CycloScalar root_of_unity(int level, std::int64_t k);

/// Least n >= 1 with a^n == 1, or nullopt when a is not a root of unity.
std::optional<int> order_of_unity(const CycloScalar& a);

}  // namespace hopfdom

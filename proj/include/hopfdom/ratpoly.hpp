#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hopfdom/rational.hpp"

namespace hopfdom {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// Trailing zero coefficients are always trimmed; the zero polynomial has no
/// coefficients.
class RatPoly {
   public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    RatPoly(std::initializer_list<Rational> coeffs);

    static RatPoly monomial(std::size_t degree, Rational c = Rational(1));
    static RatPoly constant(Rational c) { return monomial(0, std::move(c)); }

    bool is_zero() const noexcept { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& leading() const { return c_.back(); }

    RatPoly derivative() const;
    RatPoly monic() const;
    Rational eval(const Rational& x) const;

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const Rational& s, const RatPoly& a);
    RatPoly operator-() const;

    /// Euclidean division; throws on division by the zero polynomial.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;
    /// Division that must be exact; throws std::logic_error otherwise.
    RatPoly exact_div(const RatPoly& divisor) const;

    friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

    std::string to_string(const std::string& var = "x") const;

   private:
    void trim();
    std::vector<Rational> c_;
};

/// Monic greatest common divisor.
RatPoly gcd(const RatPoly& a, const RatPoly& b);

/// Solves s*a + t*b = gcd(a, b) (gcd made monic); returns {gcd, s, t}.
struct ExtendedGcd {
    RatPoly g, s, t;
};
ExtendedGcd extended_gcd(const RatPoly& a, const RatPoly& b);

/// Squarefree part f / gcd(f, f'), made monic.
RatPoly squarefree_part(const RatPoly& f);

}  // namespace hopfdom

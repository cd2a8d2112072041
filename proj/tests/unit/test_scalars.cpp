#include <gtest/gtest.h>

#include <complex>
#include <numbers>
#include <random>

#include "hopfdom/cyclo.hpp"

using namespace hopfdom;

namespace {

int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    return n > 1 ? -result : result;
}

RatPoly x_pow_minus_one(int d) { return RatPoly::monomial(static_cast<std::size_t>(d)) - RatPoly::constant(1); }

// Phi_n = prod_{d | n} (x^d - 1)^mu(n/d)
RatPoly mobius_cyclotomic(int n) {
    RatPoly num = RatPoly::constant(1), den = RatPoly::constant(1);
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        const int mu = mobius(n / d);
        if (mu == 1) num = num * x_pow_minus_one(d);
        if (mu == -1) den = den * x_pow_minus_one(d);
    }
    return num.exact_div(den);
}

std::complex<double> embed(const CycloScalar& a) {
    std::complex<double> z = 0;
    const double theta = 2 * std::numbers::pi / a.level();
    for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
        const auto& c = a.coeffs()[k];
        const double v = c.to_mpq().get_d();
        z += v * std::polar(1.0, theta * static_cast<double>(k));
    }
    return z;
}

CycloScalar random_scalar(std::mt19937_64& gen, int level) {
    std::vector<Rational> c;
    for (int k = 0; k < euler_phi(level); ++k) {
        const auto num = static_cast<std::int64_t>(gen() % 11) - 5;
        const auto den = static_cast<std::int64_t>(gen() % 4) + 1;
        c.emplace_back(num, den);
    }
    return CycloScalar::from_coeffs(level, c);
}

}  // namespace

TEST(Rational, ParseAndNormalize) {
    EXPECT_EQ(Rational::parse("3/6").to_string(), "1/2");
    EXPECT_EQ(Rational::parse("-4/2").to_string(), "-2");
    EXPECT_EQ(Rational::parse("7").to_string(), "7");
    EXPECT_THROW(Rational::parse("1/0"), std::exception);
    EXPECT_THROW(Rational::parse("abc"), std::exception);
}

TEST(Rational, OverflowFallsBackToBigIntegers) {
    const Rational big(std::int64_t{1} << 62);
    const Rational sq = big * big;
    EXPECT_FALSE(sq.is_small());
    EXPECT_EQ(sq.to_string(), "21267647932558653966460912964485513216");
    EXPECT_EQ(sq / big, big);
    EXPECT_TRUE((sq / big).is_small());
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_LT(Rational(-1, 2), Rational(1, 3));
}

TEST(Cyclotomic, SmallLevels) {
    EXPECT_EQ(cyclotomic_polynomial(1), (RatPoly{-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(2), (RatPoly{1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(3), (RatPoly{1, 1, 1}));
}

TEST(Cyclotomic, MatchesMobiusFormula) {
    for (int n = 1; n <= 120; ++n) {
        EXPECT_EQ(cyclotomic_polynomial(n), mobius_cyclotomic(n)) << "n = " << n;
        EXPECT_EQ(cyclotomic_polynomial(n).degree(), euler_phi(n));
    }
}

TEST(Cyclotomic, DivisorProductOf105) {
    EXPECT_EQ(cyclotomic_polynomial(105).degree(), 48);
    RatPoly prod = RatPoly::constant(1);
    for (int d = 1; d <= 105; ++d) {
        if (105 % d == 0) prod = prod * cyclotomic_polynomial(d);
    }
    EXPECT_EQ(prod, x_pow_minus_one(105));
}

TEST(CycloScalar, RootExamples) {
    EXPECT_TRUE(root_of_unity(1, 0).is_one());
    EXPECT_EQ(root_of_unity(4, 2), CycloScalar::integer(1, -1));
    EXPECT_TRUE((root_of_unity(3, 1) * root_of_unity(3, 2)).is_one());
    EXPECT_EQ(root_of_unity(5, 1).inverse(), root_of_unity(5, 4));
    EXPECT_EQ(root_of_unity(3, 1) + root_of_unity(3, 2), CycloScalar::integer(3, -1));
    EXPECT_EQ(root_of_unity(6, 7), root_of_unity(6, 1));
    EXPECT_EQ(root_of_unity(6, -1), root_of_unity(6, 5));
}

TEST(CycloScalar, OrderOfUnity) {
    EXPECT_EQ(order_of_unity(CycloScalar::one(1)), 1);
    EXPECT_EQ(order_of_unity(CycloScalar::integer(1, -1)), 2);
    EXPECT_EQ(order_of_unity(CycloScalar::integer(1, 2)), std::nullopt);
    EXPECT_EQ(order_of_unity(root_of_unity(12, 4)), 3);
    EXPECT_EQ(order_of_unity(root_of_unity(105, 7)), 15);
    EXPECT_EQ(order_of_unity(-root_of_unity(3, 1)), 6);
    EXPECT_EQ(order_of_unity(root_of_unity(5, 1) + CycloScalar::one(5)), std::nullopt);
}

TEST(CycloScalar, MixedLevelsLiftToLcm) {
    const CycloScalar p = root_of_unity(3, 1) * root_of_unity(4, 1);
    EXPECT_EQ(p.level(), 12);
    EXPECT_EQ(p, root_of_unity(12, 7));
    const CycloScalar z5 = root_of_unity(5, 2);
    EXPECT_EQ(z5.lift(15), z5);
    EXPECT_EQ(z5.lift(15).level(), 15);
    EXPECT_EQ(z5.lift(15).root_exponent(), 6);
    EXPECT_EQ(CycloScalar::integer(7, 3).as_rational(), Rational(3));
}

TEST(CycloScalar, FieldLawsOnRandomTriples) {
    std::mt19937_64 gen(20261016);
    for (int level : {1, 4, 5, 12, 15, 21, 105}) {
        for (int trial = 0; trial < 25; ++trial) {
            const CycloScalar a = random_scalar(gen, level), b = random_scalar(gen, level),
                              c = random_scalar(gen, level);
            EXPECT_EQ((a + b) + c, a + (b + c));
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a * b, b * a);
            EXPECT_TRUE((a - a).is_zero());
            if (!a.is_zero()) {
                EXPECT_TRUE((a * a.inverse()).is_one());
                EXPECT_EQ((b / a) * a, b);
            }
        }
    }
}

TEST(CycloScalar, ProductsAgreeWithComplexEmbedding) {
    std::mt19937_64 gen(7);
    for (int level : {3, 8, 9, 20, 30}) {
        for (int trial = 0; trial < 20; ++trial) {
            const CycloScalar a = random_scalar(gen, level), b = random_scalar(gen, level);
            EXPECT_LT(std::abs(embed(a * b) - embed(a) * embed(b)), 1e-9);
            EXPECT_LT(std::abs(embed(a + b) - embed(a) - embed(b)), 1e-9);
            if (!a.is_zero()) EXPECT_LT(std::abs(embed(a.inverse()) * embed(a) - 1.0), 1e-8);
        }
    }
}

TEST(CycloScalar, PowersAndRendering) {
    const CycloScalar z = root_of_unity(7, 1);
    EXPECT_TRUE(z.pow(7).is_one());
    EXPECT_EQ(z.pow(-1), root_of_unity(7, 6));
    EXPECT_EQ(CycloScalar::integer(1, 2).pow(10), CycloScalar::integer(1, 1024));
    EXPECT_EQ((root_of_unity(3, 1) * CycloScalar::integer(3, -1) - CycloScalar::one(3)).to_string(), "-1 - z3");
    EXPECT_EQ(root_of_unity(3, 2).coeff_strings(), (std::vector<std::string>{"-1", "-1"}));
}

#include <gtest/gtest.h>

#include "hopfdom/qcombinat.hpp"

using namespace hopfdom;

namespace {

Rational binomial(int a, int r) {
    Rational out(1);
    for (int k = 1; k <= r; ++k) out = out * Rational(a - r + k, k);
    return out;
}

// Expands (u + v)^a letter by letter and bubbles every "vu" to "q uv".
std::vector<CycloScalar> brute_force_skew(int a, const CycloScalar& q) {
    std::vector<CycloScalar> out(static_cast<std::size_t>(a + 1), CycloScalar::zero(q.level()));
    for (unsigned mask = 0; mask < (1u << a); ++mask) {
        std::string w;
        for (int k = 0; k < a; ++k) w += (mask >> k & 1u) ? 'v' : 'u';
        CycloScalar c = CycloScalar::one(q.level());
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t k = 0; k + 1 < w.size(); ++k) {
                if (w[k] == 'v' && w[k + 1] == 'u') {
                    std::swap(w[k], w[k + 1]);
                    c *= q;
                    changed = true;
                }
            }
        }
        const auto r = std::count(w.begin(), w.end(), 'v');
        out[static_cast<std::size_t>(r)] += c;
    }
    return out;
}

}  // namespace

TEST(QInteger, Examples) {
    EXPECT_TRUE(q_integer(0).is_zero());
    EXPECT_EQ(q_integer(1), RatPoly::constant(1));
    EXPECT_EQ(q_integer(4), (RatPoly{1, 1, 1, 1}));
}

TEST(GaussBinomial, Examples) {
    for (int a = 0; a <= 6; ++a) EXPECT_EQ(gauss_binomial(a, 0), RatPoly::constant(1));
    EXPECT_EQ(gauss_binomial(2, 1), (RatPoly{1, 1}));
    EXPECT_EQ(gauss_binomial(4, 2), (RatPoly{1, 1, 2, 1, 1}));
    EXPECT_TRUE(gauss_binomial(3, 4).is_zero());
    EXPECT_TRUE(gauss_binomial(3, -1).is_zero());
}

TEST(GaussBinomial, PascalSymmetryAndClassicalLimit) {
    for (int a = 1; a <= 20; ++a) {
        for (int r = 0; r <= a; ++r) {
            const RatPoly pascal =
                gauss_binomial(a - 1, r - 1) + RatPoly::monomial(static_cast<std::size_t>(r)) * gauss_binomial(a - 1, r);
            EXPECT_EQ(gauss_binomial(a, r), pascal) << a << " choose " << r;
            EXPECT_EQ(gauss_binomial(a, r), gauss_binomial(a, a - r));
            EXPECT_EQ(gauss_binomial(a, r).eval(Rational(1)), binomial(a, r));
            EXPECT_EQ(gauss_binomial(a, r).degree(), r * (a - r));
        }
    }
}

TEST(VanishesAt, Examples) {
    EXPECT_TRUE(vanishes_at(2, CycloScalar::integer(1, -1)));
    EXPECT_FALSE(vanishes_at(4, CycloScalar::integer(1, -1)));
    EXPECT_TRUE(vanishes_at(5, root_of_unity(5, 1)));
    EXPECT_TRUE(vanishes_at(5, root_of_unity(5, 3)));
    EXPECT_FALSE(vanishes_at(5, root_of_unity(10, 1)));
    EXPECT_FALSE(vanishes_at(3, CycloScalar::integer(1, 2)));
}

TEST(SkewBinomial, Examples) {
    const auto zero = skew_binomial_expand(0, root_of_unity(5, 1));
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_TRUE(zero[0].is_one());
    const CycloScalar q = CycloScalar::integer(1, 3);
    const auto two = skew_binomial_expand(2, q);
    EXPECT_EQ(two, (std::vector<CycloScalar>{CycloScalar::one(1), CycloScalar::integer(1, 4), CycloScalar::one(1)}));
    const auto three = skew_binomial_expand(3, root_of_unity(3, 1));
    ASSERT_EQ(three.size(), 4u);
    EXPECT_TRUE(three[0].is_one());
    EXPECT_TRUE(three[1].is_zero());
    EXPECT_TRUE(three[2].is_zero());
    EXPECT_TRUE(three[3].is_one());
}

TEST(SkewBinomial, MatchesBruteForceRewriting) {
    for (const CycloScalar& q : {root_of_unity(5, 1), root_of_unity(12, 5), CycloScalar::integer(1, 2),
                                 CycloScalar::integer(1, -1), CycloScalar::rational(1, Rational(2, 3))}) {
        for (int a = 0; a <= 6; ++a) {
            EXPECT_EQ(skew_binomial_expand(a, q), brute_force_skew(a, q)) << "a = " << a << ", q = " << q.to_string();
        }
    }
}

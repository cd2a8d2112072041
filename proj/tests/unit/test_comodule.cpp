#include <gtest/gtest.h>

#include "hopfdom/comodule.hpp"
#include "hopfdom/linalg.hpp"

using namespace hopfdom;

namespace {

const CycloScalar kOne = CycloScalar::one(1);

std::vector<Element> y_powers(const StructureProvider& alg, int lo, int hi) {
    std::vector<Element> out;
    for (int a = lo; a <= hi; ++a) out.push_back(alg.basis({a, 0}));
    return out;
}

bool same_span(const std::vector<Element>& a, const std::vector<Element>& b) {
    auto sa = span_basis<BasisIndex>(a);
    const auto sb = span_basis<BasisIndex>(b);
    if (sa.dim() != sb.dim()) return false;
    for (const auto& v : b) {
        if (!sa.member(v)) return false;
    }
    return true;
}

}  // namespace

TEST(Rho, UnitAndWorkedValues) {
    for (int n = 1; n <= 3; ++n) {
        const auto alg = build(FamilyParams::a(n, kOne));
        const auto spec = QuotientSpec::builtin(*alg, "y");
        const Element y = alg->basis({1, 0});
        EXPECT_EQ(rho(*alg, spec, alg->unit()), (std::map<int, Element>{{0, alg->unit()}}));
        EXPECT_EQ(lambda(*alg, spec, y), (std::map<int, Element>{{n, y}}));
        EXPECT_EQ(rho(*alg, spec, y), (std::map<int, Element>{{0, y}}));
    }
    const auto c3 = build(FamilyParams::c(3));
    const auto spec = QuotientSpec::builtin(*c3, "y-1");
    EXPECT_EQ(spec.kind(), QuotientKind::Polynomial);
    EXPECT_EQ(rho(*c3, spec, c3->basis({0, 1})), (std::map<int, Element>{{0, c3->basis({0, 1})}, {1, c3->unit()}}));
}

TEST(GradeProjections, Bidegrees) {
    const auto a = build(FamilyParams::a(2, kOne));
    const auto spec = QuotientSpec::builtin(*a, "y");
    EXPECT_EQ(spec.kind(), QuotientKind::Laurent);
    const Element y = a->basis({1, 0}), x = a->basis({0, 1});
    EXPECT_EQ(grade_projections(*a, spec, y), (std::map<std::pair<int, int>, Element>{{{0, 2}, y}}));
    const auto aq = build(FamilyParams::a(3, root_of_unity(5, 1)));
    const auto specq = QuotientSpec::builtin(*aq, "y");
    EXPECT_EQ(grade_projections(*aq, specq, aq->basis({0, 1})),
              (std::map<std::pair<int, int>, Element>{{{1, 1}, aq->basis({0, 1})}}));
    const Element x3 = aq->basis({0, -3});
    EXPECT_EQ(grade_projections(*aq, specq, x3), (std::map<std::pair<int, int>, Element>{{{-3, -3}, x3}}));
    const Element mixed = y + x;
    const auto parts = grade_projections(*a, spec, mixed);
    Element sum;
    for (const auto& [ij, e] : parts) sum = sum + e;
    EXPECT_EQ(sum, mixed);
    const auto poly = QuotientSpec::builtin(*build(FamilyParams::env_nonabelian()), "y");
    EXPECT_THROW(grade_projections(*build(FamilyParams::env_nonabelian()), poly, a->unit()), std::invalid_argument);
}

TEST(StrongGrading, Examples) {
    const auto a = build(FamilyParams::a(2, kOne));
    const auto spec = QuotientSpec::builtin(*a, "y");
    for (int n = -2; n <= 2; ++n) EXPECT_TRUE(check_strong_grading(*a, spec, n, 3)) << n;
    const auto z2 = build(FamilyParams::group_z2());
    const auto gspec = QuotientSpec::builtin(*z2, "y-1");
    EXPECT_TRUE(check_strong_grading(*z2, gspec, 1, 2));
    EXPECT_TRUE(check_strong_grading(*z2, gspec, 0, 2));
}

TEST(Derivations, EnvelopingAlgebra) {
    const auto env = build(FamilyParams::env_nonabelian());
    const auto spec = QuotientSpec::builtin(*env, "y");
    EXPECT_EQ(delta_r(*env, spec, env->basis({0, 1})), env->unit());
    EXPECT_EQ(delta_r(*env, spec, env->basis({1, 1})), env->basis({1, 0}));
    EXPECT_TRUE(delta_r(*env, spec, env->basis({3, 0})).is_zero());
    const auto a = build(FamilyParams::a(1, kOne));
    EXPECT_THROW(delta_r(*a, QuotientSpec::builtin(*a, "y"), a->unit()), std::invalid_argument);
}

TEST(Coinvariants, BuiltInAnswers) {
    for (int n = 2; n <= 4; ++n) {
        const auto c = build(FamilyParams::c(n));
        const auto spec = QuotientSpec::builtin(*c, "y-1");
        EXPECT_TRUE(same_span(coinvariants_basis(*c, spec, 3), y_powers(*c, -3, 3))) << n;
    }
    for (const auto& q : {kOne, root_of_unity(3, 1), CycloScalar::integer(1, 2)}) {
        const auto a = build(FamilyParams::a(2, q));
        const auto spec = QuotientSpec::builtin(*a, "y");
        EXPECT_TRUE(same_span(coinvariants_basis(*a, spec, 3), y_powers(*a, 0, 3)));
        // y has lambda-degree 2, so it is no left coinvariant
        const auto left = span_basis<BasisIndex>(left_coinvariants_basis(*a, spec, 3));
        EXPECT_FALSE(left.member(a->basis({1, 0})));
        EXPECT_TRUE(left.member(a->unit()));
    }
    const auto env = build(FamilyParams::env_nonabelian());
    EXPECT_TRUE(same_span(coinvariants_basis(*env, QuotientSpec::builtin(*env, "y"), 3), y_powers(*env, 0, 3)));
}

TEST(QuotientSpec, Validation) {
    const auto clift = build(FamilyParams::clift(3, root_of_unity(4, 1)));
    EXPECT_THROW(QuotientSpec::builtin(*clift, "y-1"), InvalidQuotient);
    const auto c3 = build(FamilyParams::c(3));
    EXPECT_THROW(QuotientSpec::builtin(*c3, "y"), InvalidQuotient);
    EXPECT_THROW(QuotientSpec::builtin(*c3, "z"), std::invalid_argument);
    // t -> 2t is not a coalgebra map for grouplike t
    const auto a = build(FamilyParams::a(1, kOne));
    std::vector<QuotientPolynomial> slots{QuotientPolynomial::term(0, CycloScalar()),
                                          QuotientPolynomial::term(1, CycloScalar::integer(1, 2))};
    EXPECT_THROW(QuotientSpec::make(*a, QuotientKind::Laurent, "bad", slots), InvalidQuotient);
}

TEST(PropertyChecks, AllBuiltInsPass) {
    const std::vector<std::pair<FamilyParams, std::string>> cases{
        {FamilyParams::a(2, kOne), "y"},         {FamilyParams::a(1, root_of_unity(4, 1)), "y"},
        {FamilyParams::b(1, {1, 2, 3}, root_of_unity(6, 1)), "y"},
        {FamilyParams::c(2), "y-1"},             {FamilyParams::c(3), "y-1"},
        {FamilyParams::env_abelian(), "y"},      {FamilyParams::env_nonabelian(), "y"},
        {FamilyParams::group_z2(), "y-1"},       {FamilyParams::group_z_semi_z(), "y-1"},
        {FamilyParams::clift(3, kOne), "y-1"}};
    for (const auto& [p, q] : cases) {
        const auto alg = build(p);
        for (const auto& c : comodule_property_checks(*alg, QuotientSpec::builtin(*alg, q), 3)) {
            EXPECT_TRUE(c.passed) << alg->label() << " " << c.name << ": " << c.detail;
            EXPECT_GT(c.cases, 0u) << alg->label() << " " << c.name;
        }
    }
}

#include <gtest/gtest.h>

#include "hopfdom/report.hpp"

using namespace hopfdom;

TEST(Report, HeaderCarriesConfig) {
    const Json h = report_header({"verify", 3, 42, 64});
    EXPECT_EQ(h["tool"], "hopfdom");
    EXPECT_EQ(h["command"], "verify");
    EXPECT_EQ(h["config"]["window"], 3);
    EXPECT_EQ(h["config"]["seed"], 42);
    EXPECT_EQ(h["config"]["samples"], 64);
    EXPECT_FALSE(h.contains("timing"));
}

TEST(Report, InstanceEchoIsCanonical) {
    const FamilyParams p = FamilyParams::a(-2, root_of_unity(5, 1));
    const auto alg = build(p);
    const Json j = instance_to_json(p, *alg);
    EXPECT_EQ(j["input"]["n"], -2);
    EXPECT_EQ(j["canonical"]["n"], 2);
    EXPECT_EQ(j["canonical"]["q"]["order"], 5);
    EXPECT_EQ(j["canonical"]["q"]["power"], 4);
    EXPECT_EQ(j["label"], "A(2,zeta5^4)");
}

TEST(Report, ElementsAsIndexScalarRecords) {
    const auto alg = build(FamilyParams::a(1, root_of_unity(3, 1)));
    const Element h = alg->basis({1, -1}).scaled(root_of_unity(3, 2)) + alg->unit();
    const Json j = element_to_json(h, *alg);
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0]["index"], Json::array({0, 0}));
    EXPECT_EQ(j[0]["scalar"]["coeffs"], Json::array({"1", "0"}));
    EXPECT_EQ(j[1]["monomial"], "y*x^-1");
    EXPECT_EQ(j[1]["scalar"]["level"], 3);
    EXPECT_EQ(j[1]["scalar"]["coeffs"], Json::array({"-1", "-1"}));
}

TEST(Report, InvariantsSection) {
    const auto b = build(FamilyParams::b(7, {1, 3, 5}, root_of_unity(105, 1)));
    const Json inv = invariants_to_json(*b, 2);
    EXPECT_EQ(inv["pi"]["pideg"], 105);
    EXPECT_EQ(inv["pi"]["io"], 15);
    EXPECT_EQ(inv["gldim"], "infinite");
    EXPECT_EQ(inv["vector"]["ext1_dim"], "1");
    const auto c = build(FamilyParams::c(4));
    const Json cinv = invariants_to_json(*c, 2);
    EXPECT_EQ(cinv["abelianization"]["goldie_rank"], 3);
    EXPECT_EQ(cinv["pi"]["pideg"], "infinite");
    EXPECT_TRUE(cinv["pi"]["io"].is_null());
}

TEST(Report, ComoduleSectionAndDeterminism) {
    const auto a = build(FamilyParams::a(2, CycloScalar::one(1)));
    const auto spec = QuotientSpec::builtin(*a, default_quotient(a->params()));
    const Json j1 = comodule_to_json(*a, spec, 2), j2 = comodule_to_json(*a, spec, 2);
    EXPECT_EQ(j1.dump(), j2.dump());
    EXPECT_TRUE(j1["passed"].get<bool>());
    EXPECT_EQ(j1["kind"], "laurent");
    EXPECT_TRUE(j1.contains("grading_table"));
    const auto c = build(FamilyParams::c(2));
    const Json jc = comodule_to_json(*c, QuotientSpec::builtin(*c, default_quotient(c->params())), 2);
    EXPECT_TRUE(jc.contains("derivation_table"));
    EXPECT_EQ(default_quotient(FamilyParams::env_abelian()), "y");
    EXPECT_EQ(default_quotient(FamilyParams::c(3)), "y-1");
}

TEST(Report, IsoSection) {
    const Json j = iso_to_json(isomorphic(FamilyParams::c(3), FamilyParams::c(4)));
    EXPECT_FALSE(j["isomorphic"].get<bool>());
    EXPECT_EQ(j["difference"]["invariant"], "abelianization_goldie_rank");
    EXPECT_EQ(j["explanation"], "distinguished by abelianization_goldie_rank 2 ≠ 3");
}

#include <gtest/gtest.h>

#include "hopfdom/families.hpp"
#include "hopfdom/linalg.hpp"

using namespace hopfdom;

namespace {

const CycloScalar kZeta5 = root_of_unity(5, 1);

Element mono(const StructureProvider& alg, int a, int b) { return alg.basis({a, b}); }

}  // namespace

TEST(BasisIndex, OrderingAndRendering) {
    const BasisIndex i{1, -2}, j{1, 3};
    EXPECT_LT(i, j);
    EXPECT_EQ(i.size(), 2u);
    EXPECT_EQ(i.to_string(), "(1,-2)");
    EXPECT_THROW(BasisIndex({1, 2, 3, 4, 5, 6, 7, 8, 9}), std::invalid_argument);
}

TEST(Sparse, CancellationKeepsCanonicalForm) {
    Element e = Element::term({1, 0}, CycloScalar::integer(1, 2));
    e.add({1, 0}, CycloScalar::integer(1, -2));
    EXPECT_TRUE(e.is_zero());
    e.add({0, 0}, CycloScalar::zero(3));
    EXPECT_EQ(e.size(), 0u);
    const Element a = Element::term({0, 1}, kZeta5);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(-(-a), a);
    EXPECT_EQ(a.scaled(kZeta5.inverse()).coeff({0, 1}), CycloScalar::one(5));
}

TEST(Elements, UnitAndCommutationInA) {
    const auto alg = build(FamilyParams::a(2, kZeta5));
    const Element h = mono(*alg, 2, -1) + mono(*alg, 0, 3).scaled(CycloScalar::integer(1, 4));
    EXPECT_EQ(el_mul(alg->unit(), h, *alg), h);
    EXPECT_EQ(el_mul(h, alg->unit(), *alg), h);
    const Element x = mono(*alg, 0, 1), y = mono(*alg, 1, 0);
    EXPECT_EQ(el_mul(y, x, *alg), mono(*alg, 1, 1));
    EXPECT_EQ(el_mul(x, y, *alg), mono(*alg, 1, 1).scaled(kZeta5));
}

TEST(Elements, StructureMapsInA) {
    const auto alg = build(FamilyParams::a(2, kZeta5));
    const Element x = mono(*alg, 0, 1), y = mono(*alg, 1, 0);
    EXPECT_TRUE(apply_counit(alg->unit(), *alg).is_one());
    EXPECT_EQ(apply_coproduct(x, *alg), tensor(x, x));
    // S(y) = -x^-2 y = -q^-2 y x^-2
    EXPECT_EQ(apply_antipode(y, *alg), -mono(*alg, 1, -2).scaled(kZeta5.pow(-2)));
    const Tensor2 dy = apply_coproduct(y, *alg);
    EXPECT_EQ(dy, tensor(y, alg->unit()) + tensor(mono(*alg, 0, 2), y));
    EXPECT_EQ(tensor_flip(dy), tensor(alg->unit(), y) + tensor(y, mono(*alg, 0, 2)));
    EXPECT_EQ(tensor_flip(tensor_flip(dy)), dy);
}

TEST(Elements, ForeignIndicesAreRejected) {
    const auto a = build(FamilyParams::a(1, kZeta5));
    const auto b = build(FamilyParams::b(1, {1, 2, 3}, root_of_unity(6, 1)));
    EXPECT_THROW(el_mul(b->unit(), a->unit(), *a), InstanceMismatch);
    EXPECT_THROW(el_mul(mono(*a, -1, 0), a->unit(), *a), InstanceMismatch);
}

TEST(Elements, Formatting) {
    const auto alg = build(FamilyParams::a(1, CycloScalar::integer(1, 2)));
    const Element h = mono(*alg, 1, 0) - mono(*alg, 0, -1).scaled(CycloScalar::integer(1, 3)) + alg->unit();
    EXPECT_EQ(format(h, *alg), "-3*x^-1 + 1 + y");
}

TEST(Linalg, SpanMemberAndDimension) {
    const auto alg = build(FamilyParams::a(1, kZeta5));
    const Element x = mono(*alg, 0, 1), y = mono(*alg, 1, 0);
    const auto s = span_basis<BasisIndex>({y, x});
    EXPECT_TRUE(s.member(y.scaled(CycloScalar::integer(1, 2)) - x.scaled(CycloScalar::integer(1, 3))));
    EXPECT_FALSE(s.member(alg->unit()));
    EXPECT_EQ(span_basis<BasisIndex>({y, y.scaled(kZeta5)}).dim(), 1u);
    EXPECT_EQ(span_basis<BasisIndex>({}).dim(), 0u);
}

TEST(Linalg, KernelCombinationsVanish) {
    const auto alg = build(FamilyParams::a(1, kZeta5));
    const Element x = mono(*alg, 0, 1), y = mono(*alg, 1, 0);
    const std::vector<Element> vs{x, y, x + y.scaled(kZeta5), x - y, alg->unit()};
    const auto ker = kernel(vs);
    EXPECT_EQ(ker.size(), 2u);
    for (const auto& c : ker) {
        EXPECT_FALSE(c.is_zero());
        EXPECT_TRUE(combine(c, vs).is_zero());
    }
}

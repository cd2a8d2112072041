#include <gtest/gtest.h>

#include "hopfdom/families.hpp"
#include "hopfdom/verify.hpp"

using namespace hopfdom;

namespace {

// Delegates to a real instance, corrupting one structure map.
class BrokenProvider : public StructureProvider {
   public:
    enum class Fault { Coproduct, Antipode, Counit, Product };
    BrokenProvider(std::shared_ptr<const FamilyAlgebra> base, Fault f) : base_(std::move(base)), fault_(f) {}

    std::string label() const override { return "broken " + base_->label(); }
    int level() const override { return base_->level(); }
    std::size_t arity() const override { return base_->arity(); }
    BasisIndex unit_index() const override { return base_->unit_index(); }
    std::vector<Generator> generators() const override { return base_->generators(); }
    bool is_valid_index(const BasisIndex& i) const override { return base_->is_valid_index(i); }
    Element multiply_basis(const BasisIndex& i, const BasisIndex& j) const override {
        Element e = base_->multiply_basis(i, j);
        if (fault_ == Fault::Product && i == BasisIndex{1, 0} && j == BasisIndex{0, 1}) e = e.scaled(integer(2));
        return e;
    }
    Tensor2 coproduct_basis(const BasisIndex& i) const override {
        Tensor2 t = base_->coproduct_basis(i);
        if (fault_ == Fault::Coproduct && i == BasisIndex{1, 0}) t.add({BasisIndex{1, 0}, unit_index()}, one());
        return t;
    }
    CycloScalar counit_basis(const BasisIndex& i) const override {
        if (fault_ == Fault::Counit && i == BasisIndex{0, 2}) return integer(2);
        return base_->counit_basis(i);
    }
    Element antipode_basis(const BasisIndex& i) const override {
        Element e = base_->antipode_basis(i);
        if (fault_ == Fault::Antipode && i == BasisIndex{1, 1}) e = -e;
        return e;
    }
    std::vector<BasisIndex> window(int bound) const override { return base_->window(bound); }
    std::vector<BasisIndex> unit_monomials(int bound) const override { return base_->unit_monomials(bound); }
    std::string format_index(const BasisIndex& i) const override { return base_->format_index(i); }

   private:
    std::shared_ptr<const FamilyAlgebra> base_;
    Fault fault_;
};

const AxiomResult& find_axiom(const AxiomReport& r, const std::string& name) {
    for (const auto& a : r.axioms) {
        if (a.axiom == name) return a;
    }
    throw std::out_of_range(name);
}

}  // namespace

TEST(Axioms, CoassociativityExamples) {
    const auto a = build(FamilyParams::a(2, root_of_unity(3, 1)));
    EXPECT_TRUE(check_coassociativity(*a, a->unit_index()));
    EXPECT_TRUE(check_coassociativity(*a, {1, 0}));
    const BasisIndex y{1, 0}, x2{0, 2}, one{0, 0};
    Tensor3 expected;
    expected.add({y, one, one}, a->one());
    expected.add({x2, y, one}, a->one());
    expected.add({x2, x2, y}, a->one());
    Tensor3 left;
    for (const auto& [k, c] : a->coproduct_basis(y)) {
        for (const auto& [kk, cc] : a->coproduct_basis(k[0])) left.add({kk[0], kk[1], k[1]}, c * cc);
    }
    EXPECT_EQ(left, expected);

    const auto c3 = build(FamilyParams::c(3));
    EXPECT_TRUE(check_coassociativity(*c3, {0, 1}));
    Tensor3 right;
    for (const auto& [k, c] : c3->coproduct_basis({0, 1})) {
        for (const auto& [kk, cc] : c3->coproduct_basis(k[1])) right.add({k[0], kk[0], kk[1]}, c * cc);
    }
    Tensor3 want;
    want.add({BasisIndex{0, 1}, BasisIndex{2, 0}, BasisIndex{2, 0}}, c3->one());
    want.add({BasisIndex{0, 0}, BasisIndex{0, 1}, BasisIndex{2, 0}}, c3->one());
    want.add({BasisIndex{0, 0}, BasisIndex{0, 0}, BasisIndex{0, 1}}, c3->one());
    EXPECT_EQ(right, want);
}

TEST(Axioms, UnitPairsAreTrivial) {
    const auto b = build(FamilyParams::b(1, {1, 2, 3}, root_of_unity(6, 1)));
    for (const auto& i : b->window(2)) {
        EXPECT_TRUE(check_bialgebra(*b, b->unit_index(), i));
        EXPECT_TRUE(check_bialgebra(*b, i, b->unit_index()));
    }
}

TEST(Axioms, SuiteDetectsCorruptedMaps) {
    const auto base = build(FamilyParams::a(1, root_of_unity(5, 1)));
    SuiteOptions opts;
    opts.window = 2;
    const AxiomReport clean = run_axiom_suite(*base, opts);
    EXPECT_TRUE(clean.passed());

    const AxiomReport cop = run_axiom_suite(BrokenProvider(base, BrokenProvider::Fault::Coproduct), opts);
    EXPECT_FALSE(cop.passed());
    EXPECT_FALSE(find_axiom(cop, "counit").passed());
    const auto& f = find_axiom(cop, "counit").failures.front();
    EXPECT_EQ(f.indices, (std::vector<BasisIndex>{BasisIndex{1, 0}}));
    EXPECT_FALSE(f.residual.empty());

    const AxiomReport anti = run_axiom_suite(BrokenProvider(base, BrokenProvider::Fault::Antipode), opts);
    EXPECT_FALSE(find_axiom(anti, "antipode").passed());
    EXPECT_TRUE(find_axiom(anti, "coassociativity").passed());

    const AxiomReport eps = run_axiom_suite(BrokenProvider(base, BrokenProvider::Fault::Counit), opts);
    EXPECT_FALSE(find_axiom(eps, "counit").passed());

    const AxiomReport mul = run_axiom_suite(BrokenProvider(base, BrokenProvider::Fault::Product), opts);
    EXPECT_FALSE(find_axiom(mul, "associativity").passed());
    EXPECT_FALSE(find_axiom(mul, "bialgebra").passed());
}

TEST(Axioms, ReportIndependentOfJobs) {
    const auto b = build(FamilyParams::b(1, {1, 2, 3}, root_of_unity(6, 1)));
    const auto base = build(FamilyParams::a(1, root_of_unity(5, 1)));
    const BrokenProvider broken(base, BrokenProvider::Fault::Product);
    for (const StructureProvider* p : {static_cast<const StructureProvider*>(b.get()),
                                       static_cast<const StructureProvider*>(&broken)}) {
        SuiteOptions one{2, -1, 1, 16, 5};
        SuiteOptions many = one;
        many.jobs = 4;
        const AxiomReport r1 = run_axiom_suite(*p, one), r4 = run_axiom_suite(*p, many);
        ASSERT_EQ(r1.axioms.size(), r4.axioms.size());
        for (std::size_t k = 0; k < r1.axioms.size(); ++k) {
            EXPECT_EQ(r1.axioms[k].axiom, r4.axioms[k].axiom);
            EXPECT_EQ(r1.axioms[k].checks, r4.axioms[k].checks);
            ASSERT_EQ(r1.axioms[k].failures.size(), r4.axioms[k].failures.size());
            for (std::size_t f = 0; f < r1.axioms[k].failures.size(); ++f) {
                EXPECT_EQ(r1.axioms[k].failures[f].indices, r4.axioms[k].failures[f].indices);
                EXPECT_EQ(r1.axioms[k].failures[f].residual, r4.axioms[k].failures[f].residual);
            }
        }
    }
}

TEST(Axioms, SampledChecksAreSeeded) {
    const auto base = build(FamilyParams::c(3));
    const auto a = sampled_checks(*base, 2, 11, 40);
    ASSERT_EQ(a.size(), 2u);
    EXPECT_TRUE(a[0].passed());
    EXPECT_TRUE(a[1].passed());
    const BrokenProvider broken(build(FamilyParams::a(1, root_of_unity(5, 1))), BrokenProvider::Fault::Coproduct);
    const auto r1 = sampled_checks(broken, 2, 11, 60), r2 = sampled_checks(broken, 2, 11, 60);
    EXPECT_FALSE(r1[0].passed());
    ASSERT_EQ(r1[0].failures.size(), r2[0].failures.size());
    for (std::size_t k = 0; k < r1[0].failures.size(); ++k) {
        EXPECT_EQ(r1[0].failures[k].residual, r2[0].failures[k].residual);
    }
}

TEST(Axioms, WindowFourOnRepresentatives) {
    SuiteOptions opts;
    opts.window = 4;
    opts.associativity_window = 2;
    for (const auto& p : {FamilyParams::group_z_semi_z(), FamilyParams::env_nonabelian(),
                          FamilyParams::a(3, root_of_unity(5, 1)), FamilyParams::c(5),
                          FamilyParams::clift(3, root_of_unity(4, 1)),
                          FamilyParams::b(2, {1, 2, 3}, root_of_unity(12, 1))}) {
        const auto alg = build(p);
        EXPECT_TRUE(run_axiom_suite(*alg, opts).passed()) << alg->label();
    }
}

TEST(Grouplikes, Examples) {
    const auto a = build(FamilyParams::a(2, root_of_unity(3, 1)));
    std::vector<Element> want;
    for (int b = -2; b <= 2; ++b) want.push_back(a->basis({0, b}));
    EXPECT_EQ(find_grouplikes(*a, 2), want);
    EXPECT_EQ(find_grouplikes(*build(FamilyParams::group_z2()), 1).size(), 9u);
    const auto c3 = build(FamilyParams::c(3));
    std::vector<Element> cwant;
    for (int k = -2; k <= 2; ++k) cwant.push_back(c3->basis({k, 0}));
    EXPECT_EQ(find_grouplikes(*c3, 2), cwant);
    const auto env = build(FamilyParams::env_nonabelian());
    EXPECT_EQ(find_grouplikes(*env, 3), std::vector<Element>{env->unit()});
}

TEST(Grouplikes, FormAGroup) {
    for (const auto& p : {FamilyParams::group_z_semi_z(), FamilyParams::group_z2(),
                          FamilyParams::b(1, {1, 2, 3}, root_of_unity(6, 1)), FamilyParams::c(4)}) {
        const auto alg = build(p);
        const auto g1 = find_grouplikes(*alg, 1);
        const auto g2 = find_grouplikes(*alg, 2);
        for (const auto& g : g1) {
            EXPECT_TRUE(is_grouplike(*alg, g));
            bool has_inverse = false;
            for (const auto& h : g1) {
                const Element gh = el_mul(g, h, *alg);
                EXPECT_NE(std::find(g2.begin(), g2.end(), gh), g2.end()) << alg->label();
                has_inverse = has_inverse || gh == alg->unit();
            }
            EXPECT_TRUE(has_inverse);
        }
    }
}

TEST(SkewPrimitives, Examples) {
    const auto a = build(FamilyParams::a(2, root_of_unity(5, 1)));
    const auto sols = find_skew_primitives(*a, a->basis({0, 2}), a->unit(), 2);
    bool has_y = false;
    for (const auto& s : sols) has_y = has_y || s == a->basis({1, 0});
    EXPECT_TRUE(has_y);
    // 1 - x^2 is the trivial solution next to y
    EXPECT_EQ(sols.size(), 2u);

    const auto b = build(FamilyParams::b(1, {1, 2, 3}, root_of_unity(6, 1)));
    const auto bs = find_skew_primitives(*b, b->basis({0, 0, 3}), b->unit(), 2);
    bool has_y1 = false;
    for (const auto& s : bs) has_y1 = has_y1 || s == b->basis({1, 0, 0});
    EXPECT_TRUE(has_y1);

    const auto env = build(FamilyParams::env_abelian());
    const auto prims = find_skew_primitives(*env, env->unit(), env->unit(), 2);
    EXPECT_EQ(prims.size(), 2u);

    EXPECT_THROW(find_skew_primitives(*a, a->basis({1, 0}), a->unit(), 1), std::invalid_argument);
}

TEST(Cocommutativity, ExactlyTheExpectedFamilies) {
    struct Case {
        FamilyParams p;
        bool cocomm;
        bool comm;
    };
    const std::vector<Case> cases{
        {FamilyParams::group_z2(), true, true},
        {FamilyParams::group_z_semi_z(), true, false},
        {FamilyParams::env_abelian(), true, true},
        {FamilyParams::env_nonabelian(), true, false},
        {FamilyParams::a(0, root_of_unity(3, 1)), true, false},
        {FamilyParams::a(0, CycloScalar::one(1)), true, true},
        {FamilyParams::a(1, CycloScalar::one(1)), false, true},
        {FamilyParams::a(2, CycloScalar::integer(1, 2)), false, false},
        {FamilyParams::b(1, {1, 2, 3}, root_of_unity(6, 1)), false, false},
        {FamilyParams::c(3), false, false},
        {FamilyParams::clift(3, root_of_unity(4, 1)), false, false},
    };
    for (const auto& c : cases) {
        const auto alg = build(c.p);
        EXPECT_EQ(is_cocommutative(*alg), c.cocomm) << alg->label();
        EXPECT_EQ(is_commutative(*alg), c.comm) << alg->label();
    }
}

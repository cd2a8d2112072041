#include "hopfdom/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hopfdom/linalg.hpp"
#include "hopfdom/verify.hpp"

namespace hopfdom {

namespace {

class PresentationBuilder {
   public:
    int gen(const std::string& name, int counit) {
        p_.generators.push_back(name);
        p_.counits.push_back(CycloScalar::integer(1, counit));
        return static_cast<int>(p_.generators.size()) - 1;
    }
    void relation(const std::string& label, std::vector<std::pair<CycloScalar, std::vector<int>>> terms) {
        NCPoly rel;
        for (auto& [c, w] : terms) {
            auto [it, inserted] = rel.try_emplace(w, c);
            if (!inserted) it->second += c;
            if (it->second.is_zero()) rel.erase(it);
        }
        p_.relation_labels.push_back(label);
        p_.relations.push_back(std::move(rel));
    }
    void unit_relations(int g, int ginv) {
        const std::string& name = p_.generators[static_cast<std::size_t>(g)];
        relation(name + " " + name + "^-1 = 1", {{one(), {g, ginv}}, {-one(), {}}});
        relation(name + "^-1 " + name + " = 1", {{one(), {ginv, g}}, {-one(), {}}});
    }
    static CycloScalar one() { return CycloScalar::one(1); }
    Presentation take() { return std::move(p_); }

   private:
    Presentation p_;
};

std::vector<int> repeat(int g, int times) { return std::vector<int>(static_cast<std::size_t>(times), g); }

bool is_root_of_unity(const CycloScalar& q) { return order_of_unity(q).has_value(); }

}  // namespace

Presentation presentation(const FamilyParams& params) {
    validate(params);
    PresentationBuilder pb;
    const CycloScalar one = PresentationBuilder::one();
    switch (params.family) {
        case Family::GroupZ2:
        case Family::GroupZSemiZ: {
            const int x = pb.gen("x", 1), xi = pb.gen("x^-1", 1), y = pb.gen("y", 1), yi = pb.gen("y^-1", 1);
            pb.unit_relations(x, xi);
            pb.unit_relations(y, yi);
            if (params.family == Family::GroupZ2) {
                pb.relation("x y = y x", {{one, {x, y}}, {-one, {y, x}}});
            } else {
                pb.relation("x y = y^-1 x", {{one, {x, y}}, {-one, {yi, x}}});
            }
            break;
        }
        case Family::EnvAbelian:
        case Family::EnvNonabelian: {
            const int x = pb.gen("x", 0), y = pb.gen("y", 0);
            if (params.family == Family::EnvAbelian) {
                pb.relation("x y = y x", {{one, {x, y}}, {-one, {y, x}}});
            } else {
                pb.relation("x y - y x = y", {{one, {x, y}}, {-one, {y, x}}, {-one, {y}}});
            }
            break;
        }
        case Family::A: {
            const int x = pb.gen("x", 1), xi = pb.gen("x^-1", 1), y = pb.gen("y", 0);
            pb.unit_relations(x, xi);
            pb.relation("x y = q y x", {{one, {x, y}}, {-params.q, {y, x}}});
            break;
        }
        case Family::B: {
            const BData bd = b_data(params);
            const int x = pb.gen("x", 1), xi = pb.gen("x^-1", 1);
            std::vector<int> y;
            for (int i = 0; i < bd.s; ++i) y.push_back(pb.gen("y" + std::to_string(i + 1), 0));
            pb.unit_relations(x, xi);
            for (int i = 0; i < bd.s; ++i) {
                const auto ii = static_cast<std::size_t>(i);
                const std::string yn = "y" + std::to_string(i + 1);
                pb.relation("x " + yn + " = q^m" + std::to_string(i + 1) + " " + yn + " x",
                            {{one, {x, y[ii]}}, {-params.q.pow(bd.mi[ii]), {y[ii], x}}});
            }
            for (int i = 0; i < bd.s; ++i) {
                for (int j = i + 1; j < bd.s; ++j) {
                    const auto ii = static_cast<std::size_t>(i), jj = static_cast<std::size_t>(j);
                    const std::string yi = "y" + std::to_string(i + 1), yj = "y" + std::to_string(j + 1);
                    pb.relation(yi + " " + yj + " = " + yj + " " + yi, {{one, {y[ii], y[jj]}}, {-one, {y[jj], y[ii]}}});
                    pb.relation(yi + "^p" + std::to_string(i + 1) + " = " + yj + "^p" + std::to_string(j + 1),
                                {{one, repeat(y[ii], params.p[ii + 1])}, {-one, repeat(y[jj], params.p[jj + 1])}});
                }
            }
            break;
        }
        case Family::C:
        case Family::CLift: {
            const CycloScalar q = params.family == Family::C ? one : params.q;
            const int y = pb.gen("y", 1), yi = pb.gen("y^-1", 1), x = pb.gen("x", 0);
            pb.unit_relations(y, yi);
            pb.relation("x y = q y x + y^n - y",
                        {{one, {x, y}}, {-q, {y, x}}, {-one, repeat(y, params.n)}, {one, {y}}});
            break;
        }
    }
    return pb.take();
}

Element evaluate_relation(const StructureProvider& alg, const Presentation& pres, const NCPoly& rel) {
    const auto gens = alg.generators();
    std::vector<BasisIndex> image;
    for (const auto& name : pres.generators) {
        auto it = std::find_if(gens.begin(), gens.end(), [&](const Generator& g) { return g.name == name; });
        if (it == gens.end()) throw std::invalid_argument("generator " + name + " missing from " + alg.label());
        image.push_back(it->index);
    }
    Element out;
    for (const auto& [word, c] : rel) {
        Element w = alg.unit();
        for (int g : word) w = el_mul_unchecked(w, alg.basis(image[static_cast<std::size_t>(g)]), alg);
        out.add_scaled(w, c);
    }
    return out;
}

Linearization linearize(const Presentation& pres) {
    Linearization lin;
    Subspace<std::size_t> span;
    const std::size_t ng = pres.generators.size();
    for (const auto& rel : pres.relations) {
        std::vector<CycloScalar> row(ng, CycloScalar::zero(1));
        for (const auto& [word, c] : rel) {
            for (std::size_t pos = 0; pos < word.size(); ++pos) {
                CycloScalar coeff = c;
                for (std::size_t other = 0; other < word.size(); ++other) {
                    if (other != pos) coeff *= pres.counits[static_cast<std::size_t>(word[other])];
                }
                row[static_cast<std::size_t>(word[pos])] += coeff;
            }
        }
        Sparse<std::size_t> v;
        for (std::size_t g = 0; g < ng; ++g) v.add(g, row[g]);
        span.insert(v);
        lin.rows.push_back(std::move(row));
    }
    lin.rank = span.dim();
    return lin;
}

int ext1_dimension(const FamilyParams& params) {
    const Presentation pres = presentation(params);
    return static_cast<int>(pres.generators.size() - linearize(pres).rank);
}

namespace {

/// Distinct roots of f in the algebraic closure (characteristic zero).
int distinct_roots(const RatPoly& f) { return squarefree_part(f).degree(); }

RatPoly y_power_minus_one(int k) {
    return RatPoly::monomial(static_cast<std::size_t>(k)) - RatPoly::constant(Rational(1));
}

}  // namespace

Abelianization abelianization_goldie_rank(const FamilyParams& raw) {
    validate(raw);
    const FamilyParams p = canonicalize(raw);
    switch (p.family) {
        case Family::GroupZ2: return {std::nullopt, "k[x^±1,y^±1]"};
        case Family::EnvAbelian: return {std::nullopt, "k[x,y]"};
        case Family::EnvNonabelian: return {1, "k[x]"};
        case Family::GroupZSemiZ:
            // y = y^-1 forces y^2 - 1 = 0
            return {distinct_roots(y_power_minus_one(2)), "k[x^±1][y]/(y^2-1)"};
        case Family::A:
            if (p.q.is_one()) return {std::nullopt, "k[x^±1,y]"};
            return {1, "k[x^±1]"};
        case Family::B: return {1, "k[x^±1]"};
        case Family::C:
        case Family::CLift: {
            if (p.family == Family::CLift && !p.q.is_one()) return {1, "k[y^±1]"};
            if (p.n == 1) return {std::nullopt, "k[y^±1,x]"};
            // [x, y] = y^n - y and y a unit force y^{n-1} = 1
            const int k = p.n - 1;
            return {distinct_roots(y_power_minus_one(k)), "k[y^±1]/(y^" + std::to_string(k) + "-1) ⊗ k[x]"};
        }
    }
    throw std::logic_error("unknown family");
}

GrouplikeProfile grouplike_profile(const StructureProvider& alg, int bound) {
    const auto g = find_grouplikes(alg, bound);
    GrouplikeProfile prof;
    prof.found = g.size();
    Subspace<std::size_t> lattice;
    for (const auto& e : g) {
        const BasisIndex& i = e.begin()->first;
        Sparse<std::size_t> v;
        for (std::size_t k = 0; k < i.size(); ++k) v.add(k, CycloScalar::integer(1, i[k]));
        lattice.insert(v);
    }
    prof.rank = static_cast<int>(lattice.dim());
    for (std::size_t a = 0; a < g.size() && prof.abelian; ++a) {
        for (std::size_t b = a + 1; b < g.size(); ++b) {
            if (!(el_mul(g[a], g[b], alg) == el_mul(g[b], g[a], alg))) {
                prof.abelian = false;
                break;
            }
        }
    }
    return prof;
}

std::string gldim_name(Gldim g) { return g == Gldim::Infinite ? "infinite" : "finite_2"; }

Gldim gldim_class(const FamilyParams& params) {
    return params.family == Family::B ? Gldim::Infinite : Gldim::Finite2;
}

std::pair<std::int64_t, std::int64_t> pi_degree_and_io(const FamilyParams& params) {
    if (params.family != Family::B) throw std::invalid_argument("pi_degree_and_io is defined for family B");
    validate(params);
    const BData bd = b_data(params);
    std::int64_t d = bd.ell + bd.m * (bd.s - 1);
    for (auto mi : bd.mi) d -= mi;
    return {bd.ell, bd.ell / std::gcd(d, bd.ell)};
}

PiProfile pi_profile(const FamilyParams& raw) {
    const FamilyParams p = resolve(raw).params;
    PiProfile out;
    if (raw.family == Family::B) {
        const auto [pideg, io] = pi_degree_and_io(raw);
        return {PiProfile::Kind::Finite, pideg, io};
    }
    const bool commutative = !abelianization_goldie_rank(p).goldie_rank.has_value();
    if (commutative) return {PiProfile::Kind::Finite, 1, std::nullopt};
    switch (p.family) {
        case Family::C:
        case Family::EnvNonabelian: out.kind = PiProfile::Kind::Infinite; break;
        case Family::A:
            if (!is_root_of_unity(p.q)) out.kind = PiProfile::Kind::Infinite;
            break;
        default: break;
    }
    return out;
}

InvariantVector compute_invariants(const FamilyAlgebra& alg, int bound) {
    const FamilyParams& p = alg.params();
    InvariantVector v;
    v.abelianization = abelianization_goldie_rank(p);
    v.is_commutative = is_commutative(alg);
    v.is_cocommutative = is_cocommutative(alg);
    const GrouplikeProfile g = grouplike_profile(alg, bound);
    v.grouplike_rank = g.rank;
    v.grouplike_abelian = g.abelian;
    v.ext1_dim = ext1_dimension(p);
    v.gldim_finite = gldim_class(p) == Gldim::Finite2;
    v.family_tag = p.family;
    return v;
}

std::vector<std::pair<std::string, std::string>> invariant_components(const InvariantVector& v) {
    auto b = [](bool x) { return std::string(x ? "true" : "false"); };
    const auto& ab = v.abelianization;
    return {
        {"abelianization_goldie_rank",
         ab.goldie_rank ? std::to_string(*ab.goldie_rank) : "infinite-dimensional-quotient"},
        {"is_commutative", b(v.is_commutative)},
        {"is_cocommutative", b(v.is_cocommutative)},
        {"grouplike_rank", std::to_string(v.grouplike_rank)},
        {"grouplike_abelian", b(v.grouplike_abelian)},
        {"ext1_dim", std::to_string(v.ext1_dim)},
        {"gldim_finite", b(v.gldim_finite)},
    };
}

std::optional<InvariantDifference> distinguish(const FamilyAlgebra& a, const FamilyAlgebra& b, int bound) {
    const InvariantVector va = compute_invariants(a, bound), vb = compute_invariants(b, bound);
    const auto ca = invariant_components(va);
    const auto cb = invariant_components(vb);
    for (std::size_t k = 0; k < ca.size(); ++k) {
        if (ca[k].second == cb[k].second) continue;
        InvariantDifference d{ca[k].first, ca[k].second, cb[k].second};
        if (k == 0) {
            // name the quotient on the marker side
            if (!va.abelianization.goldie_rank) d.left += " " + va.abelianization.quotient;
            if (!vb.abelianization.goldie_rank) d.right += " " + vb.abelianization.quotient;
        }
        return d;
    }
    return std::nullopt;
}

namespace {

const char* kAInversion = "a-inversion: A(n,q) ≅ A(-n,q^-1)";
const char* kLiftAtOne = "lift-at-one: CLift(n,1) = C(n)";
const char* kLiftToA = "lift-to-a: CLift(n,q) ≅ A(n-1,q^-1) for q ≠ 1";
const char* kC1 = "c1-is-a01: C(1) = A(0,1)";

void canonicalize_a(Resolution& r) {
    const FamilyParams c = canonicalize(r.params);
    if (!(c == r.params) && (r.params.n < 0 || !(c.q == r.params.q))) r.rules.emplace_back(kAInversion);
    r.params = c;
}

}  // namespace

Resolution resolve(const FamilyParams& params) {
    validate(params);
    Resolution r{canonicalize(params), {}};
    if (r.params.family == Family::CLift) {
        if (r.params.q.is_one()) {
            r.params = FamilyParams::c(r.params.n);
            r.rules.emplace_back(kLiftAtOne);
        } else {
            r.params = FamilyParams::a(r.params.n - 1, minimal_level(r.params.q.inverse()));
            r.rules.emplace_back(kLiftToA);
        }
    }
    if (r.params.family == Family::C && r.params.n == 1) {
        r.params = FamilyParams::a(0, CycloScalar::one(1));
        r.rules.emplace_back(kC1);
    }
    if (r.params.family == Family::A) {
        r.params = params.family == Family::A ? params : r.params;
        canonicalize_a(r);
    }
    return r;
}

std::string IsoResult::explanation() const {
    if (isomorphic) return "isomorphic via " + rule;
    if (difference) return "distinguished by " + difference->describe();
    return "distinguished by parameters (" + rule + ")";
}

IsoResult isomorphic(const FamilyParams& p1, const FamilyParams& p2, int bound) {
    const Resolution r1 = resolve(p1), r2 = resolve(p2);
    IsoResult out;
    out.left = r1.params;
    out.right = r2.params;
    if (r1.params == r2.params) {
        out.isomorphic = true;
        std::vector<std::string> rules = r1.rules;
        for (const auto& s : r2.rules) {
            if (std::find(rules.begin(), rules.end(), s) == rules.end()) rules.push_back(s);
        }
        if (rules.empty()) {
            out.rule = "identical canonical parameters";
        } else {
            for (std::size_t k = 0; k < rules.size(); ++k) out.rule += (k ? " ; " : "") + rules[k];
        }
        return out;
    }
    const auto a1 = build(r1.params), a2 = build(r2.params);
    out.difference = distinguish(*a1, *a2, bound);
    if (!out.difference) {
        switch (r1.params.family) {
            case Family::A: out.rule = "a-parameters: A(n,q) ≅ A(m,r) only if (m,r) = (n,q) or (-n,q^-1)"; break;
            case Family::B: out.rule = "b-parameters: B(n,p0..ps,q) ≅ B(n',p'0..p't,r) only if all parameters agree"; break;
            case Family::C: out.rule = "c-parameters: C(m) ≅ C(n) only if m = n"; break;
            default: out.rule = "family parameters differ"; break;
        }
    }
    return out;
}

}  // namespace hopfdom

#include "hopfdom/comodule.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

#include "hopfdom/invariants.hpp"
#include "hopfdom/linalg.hpp"

namespace hopfdom {

std::string quotient_kind_name(QuotientKind k) { return k == QuotientKind::Laurent ? "laurent" : "polynomial"; }

namespace {

CycloScalar one1() { return CycloScalar::one(1); }

QuotientPolynomial tmono(int k, const CycloScalar& c) { return QuotientPolynomial::term(k, c); }

QuotientPolynomial tpoly_pow(const QuotientPolynomial& a, int e) {
    QuotientPolynomial acc = tmono(0, one1());
    for (int k = 0; k < e; ++k) acc = tpoly_mul(acc, a);
    return acc;
}

using TPair = std::pair<int, int>;

Sparse<TPair> quotient_coproduct(const QuotientPolynomial& p, QuotientKind kind) {
    Sparse<TPair> out;
    for (const auto& [k, c] : p) {
        if (kind == QuotientKind::Laurent) {
            out.add({k, k}, c);
            continue;
        }
        CycloScalar binom = one1();
        for (int i = 0; i <= k; ++i) {
            out.add({i, k - i}, c * binom);
            binom = binom * CycloScalar::integer(1, k - i) / CycloScalar::integer(1, i + 1);
        }
    }
    return out;
}

CycloScalar quotient_counit(const QuotientPolynomial& p, QuotientKind kind) {
    if (kind == QuotientKind::Polynomial) return p.coeff(0);
    CycloScalar s = CycloScalar::zero(1);
    for (const auto& [k, c] : p) s += c;
    return s;
}

std::string render(const QuotientPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [k, c] : p) {
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ")t^" + std::to_string(k);
    }
    return s;
}

}  // namespace

QuotientPolynomial tpoly_mul(const QuotientPolynomial& a, const QuotientPolynomial& b) {
    QuotientPolynomial out;
    for (const auto& [i, ci] : a) {
        for (const auto& [j, cj] : b) out.add(i + j, ci * cj);
    }
    return out;
}

QuotientPolynomial QuotientSpec::image(const BasisIndex& i) const {
    QuotientPolynomial acc = tmono(0, one1());
    for (std::size_t s = 0; s < i.size(); ++s) {
        const int e = i[s];
        if (e >= 0) {
            acc = tpoly_mul(acc, tpoly_pow(slots_[s], e));
            continue;
        }
        const QuotientPolynomial& img = slots_[s];
        if (img.size() != 1 || (kind_ == QuotientKind::Polynomial && img.begin()->first != 0)) {
            throw InvalidQuotient("image " + render(img) + " of slot " + std::to_string(s) + " is not a unit");
        }
        const auto& [k, c] = *img.begin();
        acc = tpoly_mul(acc, tmono(-k * -e, c.inverse().pow(-e)));
    }
    return acc;
}

QuotientPolynomial QuotientSpec::apply(const Element& h) const {
    QuotientPolynomial out;
    for (const auto& [i, c] : h) out.add_scaled(image(i), c);
    return out;
}

QuotientSpec QuotientSpec::make(const FamilyAlgebra& alg, QuotientKind kind, std::string name,
                                std::vector<QuotientPolynomial> slot_images) {
    if (slot_images.size() != alg.arity()) throw InvalidQuotient("one image per index slot is required");
    for (const auto& img : slot_images) {
        bool ok = img.size() <= 1;
        if (ok && !img.is_zero()) {
            const auto& [k, c] = *img.begin();
            if (kind == QuotientKind::Laurent) {
                ok = c.is_one() || (-c).is_one();
            } else {
                ok = c.is_one() && (k == 0 || k == 1);
            }
        }
        if (!ok) throw InvalidQuotient("image " + render(img) + " not allowed for the " + quotient_kind_name(kind) +
                                       " quotient");
    }
    QuotientSpec spec(kind, std::move(name), std::move(slot_images));

    const Presentation pres = presentation(alg.params());
    const auto gens = alg.generators();
    std::vector<QuotientPolynomial> gen_image;
    for (const auto& gname : pres.generators) {
        auto it = std::find_if(gens.begin(), gens.end(), [&](const Generator& g) { return g.name == gname; });
        gen_image.push_back(spec.image(it->index));
    }
    for (std::size_t r = 0; r < pres.relations.size(); ++r) {
        QuotientPolynomial v;
        for (const auto& [word, c] : pres.relations[r]) {
            QuotientPolynomial w = tmono(0, one1());
            for (int g : word) w = tpoly_mul(w, gen_image[static_cast<std::size_t>(g)]);
            v.add_scaled(w, c);
        }
        if (!v.is_zero()) {
            throw InvalidQuotient("relation " + pres.relation_labels[r] + " maps to " + render(v) + ", not 0");
        }
    }
    for (const auto& g : gens) {
        Sparse<TPair> lhs;
        for (const auto& [k, c] : alg.coproduct_basis(g.index)) {
            const QuotientPolynomial a = spec.image(k[0]), b = spec.image(k[1]);
            for (const auto& [i, ci] : a) {
                for (const auto& [j, cj] : b) lhs.add({i, j}, c * ci * cj);
            }
        }
        const QuotientPolynomial pg = spec.image(g.index);
        if (!(lhs == quotient_coproduct(pg, kind))) {
            throw InvalidQuotient("pi does not respect the coproduct on " + g.name);
        }
        if (!(alg.counit_basis(g.index) == quotient_counit(pg, kind))) {
            throw InvalidQuotient("pi does not respect the counit on " + g.name);
        }
    }
    return spec;
}

QuotientSpec QuotientSpec::builtin(const FamilyAlgebra& alg, const std::string& name) {
    if (name != "y" && name != "y-1") throw InvalidQuotient("unknown quotient '" + name + "' (expected y or y-1)");
    const auto gens = alg.generators();
    const bool laurent =
        std::any_of(gens.begin(), gens.end(), [](const Generator& g) { return g.name == "x^-1"; });
    std::vector<QuotientPolynomial> slots(alg.arity());
    const CycloScalar y_image = name == "y" ? CycloScalar::zero(1) : one1();
    for (std::size_t s = 0; s + 1 < slots.size(); ++s) slots[s] = tmono(0, y_image);
    slots.back() = tmono(1, one1());
    return make(alg, laurent ? QuotientKind::Laurent : QuotientKind::Polynomial, "K=<" + name + ">",
                std::move(slots));
}

namespace {

std::map<int, Element> coaction(const StructureProvider& alg, const QuotientSpec& spec, const Element& h,
                                bool right) {
    std::map<int, Element> out;
    for (const auto& [i, c] : h) {
        for (const auto& [k, ck] : alg.coproduct_basis(i)) {
            const BasisIndex& kept = right ? k[0] : k[1];
            for (const auto& [n, cn] : spec.image(right ? k[1] : k[0])) out[n].add(kept, c * ck * cn);
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

void require_kind(const QuotientSpec& spec, QuotientKind kind, const char* what) {
    if (spec.kind() != kind) {
        throw std::invalid_argument(std::string(what) + " needs a " + quotient_kind_name(kind) + " quotient");
    }
}

Element component(const std::map<int, Element>& m, int n) {
    auto it = m.find(n);
    return it == m.end() ? Element() : it->second;
}

}  // namespace

std::map<int, Element> rho(const StructureProvider& alg, const QuotientSpec& spec, const Element& h) {
    return coaction(alg, spec, h, true);
}

std::map<int, Element> lambda(const StructureProvider& alg, const QuotientSpec& spec, const Element& h) {
    return coaction(alg, spec, h, false);
}

Element right_projection(const StructureProvider& alg, const QuotientSpec& spec, const Element& h, int n) {
    require_kind(spec, QuotientKind::Laurent, "right_projection");
    return component(rho(alg, spec, h), n);
}

Element left_projection(const StructureProvider& alg, const QuotientSpec& spec, const Element& h, int m) {
    require_kind(spec, QuotientKind::Laurent, "left_projection");
    return component(lambda(alg, spec, h), m);
}

std::map<std::pair<int, int>, Element> grade_projections(const StructureProvider& alg, const QuotientSpec& spec,
                                                         const Element& h) {
    require_kind(spec, QuotientKind::Laurent, "grade_projections");
    std::map<std::pair<int, int>, Element> out;
    for (const auto& [i, hi] : rho(alg, spec, h)) {
        for (const auto& [j, hij] : lambda(alg, spec, hi)) out.emplace(std::make_pair(i, j), hij);
    }
    return out;
}

bool check_strong_grading(const StructureProvider& alg, const QuotientSpec& spec, int n, int window) {
    require_kind(spec, QuotientKind::Laurent, "check_strong_grading");
    std::vector<Element> neg, pos, zero;
    for (const auto& i : alg.window(std::max(window, std::abs(n)))) {
        const auto r = rho(alg, spec, alg.basis(i));
        if (auto v = component(r, -n); !v.is_zero()) neg.push_back(v);
        if (auto v = component(r, n); !v.is_zero()) pos.push_back(v);
        if (auto v = component(r, 0); !v.is_zero()) zero.push_back(v);
    }
    Subspace<BasisIndex> products;
    for (const auto& u : neg) {
        for (const auto& v : pos) products.insert(el_mul_unchecked(u, v, alg));
    }
    return std::all_of(zero.begin(), zero.end(), [&](const Element& z) { return products.member(z); });
}

Element delta_r(const StructureProvider& alg, const QuotientSpec& spec, const Element& h) {
    require_kind(spec, QuotientKind::Polynomial, "delta_r");
    return component(rho(alg, spec, h), 1);
}

Element delta_l(const StructureProvider& alg, const QuotientSpec& spec, const Element& h) {
    require_kind(spec, QuotientKind::Polynomial, "delta_l");
    return component(lambda(alg, spec, h), 1);
}

namespace {

std::vector<Element> coinvariants(const StructureProvider& alg, const QuotientSpec& spec, int window, bool right) {
    using Key = std::pair<int, BasisIndex>;
    const auto idx = alg.window(window);
    std::vector<Sparse<Key>> images;
    for (const auto& i : idx) {
        Sparse<Key> v;
        for (const auto& [n, e] : coaction(alg, spec, alg.basis(i), right)) {
            for (const auto& [k, c] : e) v.add({n, k}, c);
        }
        v.add({0, i}, -alg.one());
        images.push_back(std::move(v));
    }
    std::vector<Element> out;
    for (const auto& c : kernel(images)) {
        Element h;
        for (const auto& [j, cj] : c) h.add(idx[j], cj);
        out.push_back(std::move(h));
    }
    return out;
}

}  // namespace

std::vector<Element> coinvariants_basis(const StructureProvider& alg, const QuotientSpec& spec, int window) {
    return coinvariants(alg, spec, window, true);
}

std::vector<Element> left_coinvariants_basis(const StructureProvider& alg, const QuotientSpec& spec, int window) {
    return coinvariants(alg, spec, window, false);
}

}  // namespace hopfdom

namespace hopfdom {

namespace {

class CheckRecorder {
   public:
    explicit CheckRecorder(std::string name) { c_.name = std::move(name); }
    void record(bool ok, const std::function<std::string()>& detail) {
        ++c_.cases;
        if (ok || !c_.passed) return;
        c_.passed = false;
        c_.detail = detail();
    }
    PropertyCheck take() { return std::move(c_); }

   private:
    PropertyCheck c_;
};

std::map<int, Element> convolve(const StructureProvider& alg, const std::map<int, Element>& a,
                                const std::map<int, Element>& b) {
    std::map<int, Element> out;
    for (const auto& [i, ai] : a) {
        for (const auto& [j, bj] : b) out[i + j] = out[i + j] + el_mul_unchecked(ai, bj, alg);
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

std::set<int> degrees(const std::map<int, Element>& m) {
    std::set<int> out;
    for (const auto& [k, v] : m) out.insert(k);
    return out;
}

Element iterate(const std::function<Element(const Element&)>& f, Element h, int times) {
    for (int k = 0; k < times && !h.is_zero(); ++k) h = f(h);
    return h;
}

}  // namespace

std::vector<PropertyCheck> comodule_property_checks(const StructureProvider& alg, const QuotientSpec& spec,
                                                    int window) {
    std::vector<PropertyCheck> out;
    const auto idx = alg.window(window);
    auto label = [&](const BasisIndex& i) { return alg.format_index(i); };

    if (spec.kind() == QuotientKind::Laurent) {
        CheckRecorder comm("projection_commutation"), decomp("bigraded_decomposition");
        for (const auto& i : idx) {
            const Element h = alg.basis(i);
            const auto r = rho(alg, spec, h), l = lambda(alg, spec, h);
            std::set<int> ns = degrees(r), ms = degrees(l);
            for (int n : ns) {
                for (int m : ms) {
                    const Element rl = right_projection(alg, spec, left_projection(alg, spec, h, m), n);
                    const Element lr = left_projection(alg, spec, right_projection(alg, spec, h, n), m);
                    comm.record(rl == lr, [&] {
                        return label(i) + " at (" + std::to_string(n) + "," + std::to_string(m) + ")";
                    });
                }
            }
            const auto parts = grade_projections(alg, spec, h);
            Element sum;
            bool idempotent = true;
            for (const auto& [ij, c] : parts) {
                sum = sum + c;
                const auto again = grade_projections(alg, spec, c);
                idempotent = idempotent && again.size() == 1 && again.begin()->first == ij && again.begin()->second == c;
            }
            decomp.record(sum == h && idempotent, [&] { return label(i); });
        }
        out.push_back(comm.take());
        out.push_back(decomp.take());
        CheckRecorder strong("strong_grading");
        for (int n = -2; n <= 2; ++n) {
            strong.record(check_strong_grading(alg, spec, n, window), [&] { return "n=" + std::to_string(n); });
        }
        out.push_back(strong.take());
    } else {
        auto dr = [&](const Element& h) { return delta_r(alg, spec, h); };
        auto dl = [&](const Element& h) { return delta_l(alg, spec, h); };
        CheckRecorder comm("derivations_commute"), taylor("taylor_coefficients"), nil("local_nilpotence");
        for (const auto& i : idx) {
            const Element h = alg.basis(i);
            comm.record(dr(dl(h)) == dl(dr(h)), [&] { return label(i); });
            const auto r = rho(alg, spec, h), l = lambda(alg, spec, h);
            Element pr = h, pl = h;
            CycloScalar factorial = alg.one();
            for (int n = 0; n <= 6; ++n) {
                if (n > 0) {
                    pr = dr(pr);
                    pl = dl(pl);
                    factorial = factorial * alg.integer(n);
                }
                const CycloScalar inv = factorial.inverse();
                const bool ok = component(r, n) == pr.scaled(inv) && component(l, n) == pl.scaled(inv);
                taylor.record(ok, [&] { return label(i) + " at t^" + std::to_string(n); });
            }
            const auto g = alg.grading(i);
            const int bound = (g ? g->first : 0) + 1;
            nil.record(iterate(dr, h, bound).is_zero() && iterate(dl, h, bound).is_zero(),
                       [&] { return label(i); });
        }
        out.push_back(comm.take());
        out.push_back(taylor.take());
        out.push_back(nil.take());
    }

    CheckRecorder rmul("rho_multiplicative"), lmul("lambda_multiplicative");
    const auto small = alg.window(std::min(window, 2));
    for (const auto& i : small) {
        for (const auto& j : small) {
            const Element a = alg.basis(i), b = alg.basis(j), ab = alg.multiply_basis(i, j);
            rmul.record(rho(alg, spec, ab) == convolve(alg, rho(alg, spec, a), rho(alg, spec, b)),
                        [&] { return label(i) + " * " + label(j); });
            lmul.record(lambda(alg, spec, ab) == convolve(alg, lambda(alg, spec, a), lambda(alg, spec, b)),
                        [&] { return label(i) + " * " + label(j); });
        }
    }
    out.push_back(rmul.take());
    out.push_back(lmul.take());
    return out;
}

}  // namespace hopfdom

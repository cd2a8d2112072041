#include "hopfdom/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "hopfdom/linalg.hpp"

namespace hopfdom {

namespace {

Tensor3 delta_left(const Tensor2& d, const StructureProvider& alg) {
    // (Delta (x) id) d
    Tensor3 out;
    for (const auto& [k, c] : d) {
        for (const auto& [kk, cc] : alg.coproduct_basis(k[0])) out.add({kk[0], kk[1], k[1]}, c * cc);
    }
    return out;
}

Tensor3 delta_right(const Tensor2& d, const StructureProvider& alg) {
    // (id (x) Delta) d
    Tensor3 out;
    for (const auto& [k, c] : d) {
        for (const auto& [kk, cc] : alg.coproduct_basis(k[1])) out.add({k[0], kk[0], kk[1]}, c * cc);
    }
    return out;
}

Residual describe(const Element& r, const StructureProvider& alg) {
    if (r.is_zero()) return std::nullopt;
    return format(r, alg);
}

}  // namespace

Residual coassociativity_residual(const StructureProvider& alg, const BasisIndex& i) {
    const Tensor2 d = alg.coproduct_basis(i);
    const Tensor3 r = delta_right(d, alg) - delta_left(d, alg);
    if (r.is_zero()) return std::nullopt;
    return format(r, alg);
}

Residual counit_residual(const StructureProvider& alg, const BasisIndex& i) {
    const Tensor2 d = alg.coproduct_basis(i);
    Element left, right;
    for (const auto& [k, c] : d) {
        left.add(k[1], c * alg.counit_basis(k[0]));
        right.add(k[0], c * alg.counit_basis(k[1]));
    }
    const Element h = alg.basis(i);
    if (auto r = describe(left - h, alg)) return "(eps(x)id)Delta - id = " + *r;
    if (auto r = describe(right - h, alg)) return "(id(x)eps)Delta - id = " + *r;
    return std::nullopt;
}

Residual antipode_residual(const StructureProvider& alg, const BasisIndex& i) {
    const Tensor2 d = alg.coproduct_basis(i);
    Element left, right;
    for (const auto& [k, c] : d) {
        left.add_scaled(el_mul_unchecked(alg.antipode_basis(k[0]), alg.basis(k[1]), alg), c);
        right.add_scaled(el_mul_unchecked(alg.basis(k[0]), alg.antipode_basis(k[1]), alg), c);
    }
    const Element target = alg.unit().scaled(alg.counit_basis(i));
    if (auto r = describe(left - target, alg)) return "m(S(x)id)Delta - eps = " + *r;
    if (auto r = describe(right - target, alg)) return "m(id(x)S)Delta - eps = " + *r;
    return std::nullopt;
}

Residual bialgebra_residual(const StructureProvider& alg, const BasisIndex& i, const BasisIndex& j) {
    const Element prod = alg.multiply_basis(i, j);
    const Tensor2 r = apply_coproduct(prod, alg) - t2_mul(alg.coproduct_basis(i), alg.coproduct_basis(j), alg);
    if (!r.is_zero()) return "Delta(ab) - Delta(a)Delta(b) = " + format(r, alg);
    const CycloScalar e = apply_counit(prod, alg) - alg.counit_basis(i) * alg.counit_basis(j);
    if (!e.is_zero()) return "eps(ab) - eps(a)eps(b) = " + e.to_string();
    return std::nullopt;
}

Residual associativity_residual(const StructureProvider& alg, const BasisIndex& i, const BasisIndex& j,
                                const BasisIndex& k) {
    const Element left = el_mul_unchecked(alg.multiply_basis(i, j), alg.basis(k), alg);
    const Element right = el_mul_unchecked(alg.basis(i), alg.multiply_basis(j, k), alg);
    return describe(left - right, alg);
}

bool check_coassociativity(const StructureProvider& alg, const BasisIndex& i) {
    return !coassociativity_residual(alg, i);
}
bool check_counit(const StructureProvider& alg, const BasisIndex& i) { return !counit_residual(alg, i); }
bool check_antipode(const StructureProvider& alg, const BasisIndex& i) { return !antipode_residual(alg, i); }
bool check_bialgebra(const StructureProvider& alg, const BasisIndex& i, const BasisIndex& j) {
    return !bialgebra_residual(alg, i, j);
}
bool check_associativity(const StructureProvider& alg, const BasisIndex& i, const BasisIndex& j, const BasisIndex& k) {
    return !associativity_residual(alg, i, j, k);
}

bool AxiomReport::passed() const noexcept {
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.passed(); });
}

std::size_t AxiomReport::total_checks() const noexcept {
    std::size_t n = 0;
    for (const auto& a : axioms) n += a.checks;
    return n;
}

namespace {

/// Runs task(t) for t in [0, count) on `jobs` threads; each task fills its own
/// slot, so the merged result does not depend on scheduling.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (jobs == 1) {
        for (std::size_t t = 0; t < count; ++t) task(t);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) {
        pool.emplace_back([&] {
            for (std::size_t t = next++; t < count; t = next++) {
                try {
                    task(t);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mu);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

AxiomResult run_axiom(const std::string& name, std::size_t count, unsigned jobs,
                      const std::function<std::vector<AxiomFailure>(std::size_t)>& slot_checks,
                      std::size_t checks) {
    std::vector<std::vector<AxiomFailure>> slots(count);
    parallel_for(count, jobs, [&](std::size_t t) { slots[t] = slot_checks(t); });
    AxiomResult res{name, checks, {}};
    for (auto& s : slots) {
        for (auto& f : s) res.failures.push_back(std::move(f));
    }
    std::sort(res.failures.begin(), res.failures.end(),
              [](const AxiomFailure& a, const AxiomFailure& b) { return a.indices < b.indices; });
    return res;
}

}  // namespace

AxiomReport run_axiom_suite(const StructureProvider& alg, const SuiteOptions& opts) {
    if (opts.window < 0) throw std::invalid_argument("window must be nonnegative");
    const auto idx = alg.window(opts.window);
    const std::size_t n = idx.size();
    AxiomReport rep;

    auto single = [&](const std::string& name, Residual (*fn)(const StructureProvider&, const BasisIndex&)) {
        return run_axiom(
            name, n, opts.jobs,
            [&](std::size_t t) {
                std::vector<AxiomFailure> f;
                if (auto r = fn(alg, idx[t])) f.push_back({{idx[t]}, *r});
                return f;
            },
            n);
    };
    rep.axioms.push_back(single("coassociativity", &coassociativity_residual));
    rep.axioms.push_back(single("counit", &counit_residual));
    rep.axioms.push_back(single("antipode", &antipode_residual));
    rep.axioms.push_back(run_axiom(
        "bialgebra", n, opts.jobs,
        [&](std::size_t t) {
            std::vector<AxiomFailure> f;
            for (const auto& j : idx) {
                if (auto r = bialgebra_residual(alg, idx[t], j)) f.push_back({{idx[t], j}, *r});
            }
            return f;
        },
        n * n));

    const int aw = opts.associativity_window < 0 ? opts.window : opts.associativity_window;
    if (aw > 0) {
        const auto aidx = alg.window(aw);
        const std::size_t m = aidx.size();
        rep.axioms.push_back(run_axiom(
            "associativity", m, opts.jobs,
            [&](std::size_t t) {
                std::vector<AxiomFailure> f;
                for (const auto& j : aidx) {
                    const Element ij = alg.multiply_basis(aidx[t], j);
                    for (const auto& k : aidx) {
                        const Element left = el_mul_unchecked(ij, alg.basis(k), alg);
                        const Element right = el_mul_unchecked(alg.basis(aidx[t]), alg.multiply_basis(j, k), alg);
                        if (!(left == right)) f.push_back({{aidx[t], j, k}, format(left - right, alg)});
                    }
                }
                return f;
            },
            m * m * m));
    }
    if (opts.samples > 0) {
        for (auto& r : sampled_checks(alg, opts.window, opts.seed, opts.samples)) rep.axioms.push_back(std::move(r));
    }
    return rep;
}

std::vector<AxiomResult> sampled_checks(const StructureProvider& alg, int window, std::uint64_t seed,
                                        std::size_t samples) {
    const auto idx = alg.window(window);
    std::mt19937_64 gen(seed);
    // raw engine output only: distributions are implementation-defined
    auto pick = [&](std::uint64_t n) { return gen() % n; };
    auto random_element = [&] {
        Element e;
        const std::uint64_t terms = 1 + pick(3);
        for (std::uint64_t t = 0; t < terms; ++t) {
            e.add(idx[pick(idx.size())], alg.integer(static_cast<std::int64_t>(pick(7)) - 3));
        }
        return e;
    };
    AxiomResult bi{"sampled_bialgebra", samples, {}}, anti{"sampled_antipode_antimultiplicative", samples, {}};
    for (std::size_t k = 0; k < samples; ++k) {
        const Element a = random_element(), b = random_element();
        const Element ab = el_mul_unchecked(a, b, alg);
        const Tensor2 r = apply_coproduct(ab, alg) - t2_mul(apply_coproduct(a, alg), apply_coproduct(b, alg), alg);
        if (!r.is_zero()) bi.failures.push_back({{}, "a = " + format(a, alg) + ", b = " + format(b, alg)});
        const Element s = apply_antipode(ab, alg) - el_mul_unchecked(apply_antipode(b, alg), apply_antipode(a, alg), alg);
        if (!s.is_zero()) anti.failures.push_back({{}, "a = " + format(a, alg) + ", b = " + format(b, alg)});
    }
    return {bi, anti};
}

bool is_grouplike(const StructureProvider& alg, const Element& g) {
    if (g.is_zero()) return false;
    return apply_coproduct(g, alg) == tensor(g, g) && apply_counit(g, alg).is_one();
}

std::vector<Element> find_grouplikes(const StructureProvider& alg, int bound) {
    std::vector<Element> out;
    for (const auto& m : alg.unit_monomials(bound)) {
        const Tensor2 d = alg.coproduct_basis(m);
        // Delta(m) = lambda m(x)m and lambda eps(m) = 1 make lambda*m grouplike.
        if (d.size() != 1 || d.begin()->first != Tensor2Key{m, m}) continue;
        const CycloScalar lambda = d.begin()->second;
        if (!(lambda * alg.counit_basis(m)).is_one()) continue;
        out.push_back(Element::term(m, lambda));
    }
    return out;
}

std::vector<Element> find_skew_primitives(const StructureProvider& alg, const Element& g, const Element& h,
                                          int window) {
    require_member(g, alg);
    require_member(h, alg);
    if (!is_grouplike(alg, g)) throw std::invalid_argument("g is not grouplike");
    if (!is_grouplike(alg, h)) throw std::invalid_argument("h is not grouplike");
    const auto idx = alg.window(window);
    std::vector<Tensor2> images;
    images.reserve(idx.size());
    for (const auto& i : idx) {
        const Element e = alg.basis(i);
        images.push_back(alg.coproduct_basis(i) - tensor(g, e) - tensor(e, h));
    }
    std::vector<Element> out;
    for (const auto& c : kernel(images)) {
        Element p;
        for (const auto& [j, cj] : c) p.add(idx[j], cj);
        out.push_back(std::move(p));
    }
    return out;
}

bool is_commutative(const StructureProvider& alg) {
    const auto gens = alg.generators();
    for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            if (!(alg.multiply_basis(gens[a].index, gens[b].index) ==
                  alg.multiply_basis(gens[b].index, gens[a].index))) {
                return false;
            }
        }
    }
    return true;
}

bool is_cocommutative(const StructureProvider& alg) {
    for (const auto& g : alg.generators()) {
        const Tensor2 d = alg.coproduct_basis(g.index);
        if (!(tensor_flip(d) == d)) return false;
    }
    return true;
}

}  // namespace hopfdom

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfdom/algebra.hpp"

namespace hopfdom {

/// Residual of a failed check, rendered in the instance's monomial notation.
using Residual = std::optional<std::string>;

Residual coassociativity_residual(const StructureProvider& alg, const BasisIndex& i);
Residual counit_residual(const StructureProvider& alg, const BasisIndex& i);
Residual antipode_residual(const StructureProvider& alg, const BasisIndex& i);
Residual bialgebra_residual(const StructureProvider& alg, const BasisIndex& i, const BasisIndex& j);
Residual associativity_residual(const StructureProvider& alg, const BasisIndex& i, const BasisIndex& j,
                                const BasisIndex& k);

bool check_coassociativity(const StructureProvider& alg, const BasisIndex& i);
bool check_counit(const StructureProvider& alg, const BasisIndex& i);
bool check_antipode(const StructureProvider& alg, const BasisIndex& i);
bool check_bialgebra(const StructureProvider& alg, const BasisIndex& i, const BasisIndex& j);
bool check_associativity(const StructureProvider& alg, const BasisIndex& i, const BasisIndex& j, const BasisIndex& k);

struct AxiomFailure {
    std::vector<BasisIndex> indices;
    std::string residual;
};

struct AxiomResult {
    std::string axiom;
    std::size_t checks = 0;
    std::vector<AxiomFailure> failures;  // sorted by indices
    bool passed() const noexcept { return failures.empty(); }
};

struct AxiomReport {
    std::vector<AxiomResult> axioms;
    bool passed() const noexcept;
    std::size_t total_checks() const noexcept;
};

struct SuiteOptions {
    int window = 3;
    /// Window for the cubic associativity sweep; negative means `window`,
    /// zero skips it.
    int associativity_window = -1;
    unsigned jobs = 1;
    /// Random sparse combinations checked for Delta(ab) = Delta(a)Delta(b)
    /// and S(ab) = S(b)S(a); drawn from a generator seeded with `seed`.
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

/// Deterministic for a given seed on every platform.
std::vector<AxiomResult> sampled_checks(const StructureProvider& alg, int window, std::uint64_t seed,
                                        std::size_t samples);

/// Runs every axiom on every index (pairs for bialgebra, triples for
/// associativity) of the window. Output is independent of `jobs`.
AxiomReport run_axiom_suite(const StructureProvider& alg, const SuiteOptions& opts);

/// Grouplike elements among scalar multiples of unit monomials in the window.
std::vector<Element> find_grouplikes(const StructureProvider& alg, int bound);
bool is_grouplike(const StructureProvider& alg, const Element& g);

/// Basis of { p in span(window) : Delta(p) = g (x) p + p (x) h }. Throws
/// std::invalid_argument when g or h is not grouplike.
std::vector<Element> find_skew_primitives(const StructureProvider& alg, const Element& g, const Element& h,
                                          int window);

/// Checked on generators, which suffices for algebra maps.
bool is_commutative(const StructureProvider& alg);
bool is_cocommutative(const StructureProvider& alg);

}  // namespace hopfdom

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hopfdom/families.hpp"

namespace hopfdom {

/// Element of k[t^{+-1}] or k[t]: exponent to coefficient.
using QuotientPolynomial = Sparse<int>;

enum class QuotientKind { Laurent, Polynomial };
std::string quotient_kind_name(QuotientKind k);

class InvalidQuotient : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Hopf quotient pi: H -> k[t^{+-1}] (t grouplike) or k[t] (t primitive),
/// fixed by the image of the generator behind each index slot.
class QuotientSpec {
   public:
    /// "y": y-generators to 0, x to t. "y-1": y-generators to 1, x to t.
    /// The kind is Laurent when x is invertible in the family.
    static QuotientSpec builtin(const FamilyAlgebra& alg, const std::string& name);
    /// Checks that pi kills every defining relation and respects Delta and
    /// eps on generators; throws InvalidQuotient otherwise.
    static QuotientSpec make(const FamilyAlgebra& alg, QuotientKind kind, std::string name,
                             std::vector<QuotientPolynomial> slot_images);

    QuotientKind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }
    const std::vector<QuotientPolynomial>& slot_images() const noexcept { return slots_; }

    QuotientPolynomial image(const BasisIndex& i) const;
    QuotientPolynomial apply(const Element& h) const;

   private:
    QuotientSpec(QuotientKind kind, std::string name, std::vector<QuotientPolynomial> slots)
        : kind_(kind), name_(std::move(name)), slots_(std::move(slots)) {}

    QuotientKind kind_;
    std::string name_;
    std::vector<QuotientPolynomial> slots_;
};

QuotientPolynomial tpoly_mul(const QuotientPolynomial& a, const QuotientPolynomial& b);

/// rho(h) = sum_n rho_n(h) (x) t^n with rho = (id (x) pi) Delta.
std::map<int, Element> rho(const StructureProvider& alg, const QuotientSpec& spec, const Element& h);
/// lambda(h) = sum_n t^n (x) lambda_n(h) with lambda = (pi (x) id) Delta.
std::map<int, Element> lambda(const StructureProvider& alg, const QuotientSpec& spec, const Element& h);

/// pi^r_n: component of h in H_n (Laurent kind).
Element right_projection(const StructureProvider& alg, const QuotientSpec& spec, const Element& h, int n);
/// pi^l_m: component of h in _mH (Laurent kind).
Element left_projection(const StructureProvider& alg, const QuotientSpec& spec, const Element& h, int m);

/// (i, j) -> component in H_i ∩ _jH. Throws std::invalid_argument for the
/// polynomial kind.
std::map<std::pair<int, int>, Element> grade_projections(const StructureProvider& alg, const QuotientSpec& spec,
                                                         const Element& h);

/// H_{-n} H_n ⊇ H_0, on the spanning sets cut out by the window.
bool check_strong_grading(const StructureProvider& alg, const QuotientSpec& spec, int n, int window);

/// t^1-coefficient of rho (resp. lambda). Polynomial kind only.
Element delta_r(const StructureProvider& alg, const QuotientSpec& spec, const Element& h);
Element delta_l(const StructureProvider& alg, const QuotientSpec& spec, const Element& h);

/// Kernel basis of h -> rho(h) - h (x) 1 on span(window).
std::vector<Element> coinvariants_basis(const StructureProvider& alg, const QuotientSpec& spec, int window);
/// Kernel basis of h -> lambda(h) - 1 (x) h on span(window).
std::vector<Element> left_coinvariants_basis(const StructureProvider& alg, const QuotientSpec& spec, int window);

struct PropertyCheck {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string detail;  // first counterexample, if any
};

/// Laurent kind: projection commutation, bigraded decomposition, strong
/// grading for n in [-2, 2]. Polynomial kind: delta_r/delta_l commutation,
/// Taylor coefficients up to t^6, local nilpotence. Both: rho and lambda
/// multiplicative on window pairs (window capped at 2).
std::vector<PropertyCheck> comodule_property_checks(const StructureProvider& alg, const QuotientSpec& spec,
                                                    int window);

}  // namespace hopfdom

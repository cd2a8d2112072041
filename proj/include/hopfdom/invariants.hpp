#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfdom/families.hpp"

namespace hopfdom {

/// Noncommutative polynomial over the scalars: word (generator positions) to
/// coefficient.
using NCPoly = std::map<std::vector<int>, CycloScalar>;

struct Presentation {
    std::vector<std::string> generators;  // names match the provider's generators
    std::vector<CycloScalar> counits;
    std::vector<std::string> relation_labels;
    std::vector<NCPoly> relations;
};

/// Defining relations of the instance, with x x^-1 = 1 = x^-1 x for every
/// Laurent generator.
Presentation presentation(const FamilyParams& params);

/// Value of a relation inside the built instance (zero when it holds).
Element evaluate_relation(const StructureProvider& alg, const Presentation& pres, const NCPoly& rel);

struct Linearization {
    /// One row per relation: coefficients of t_g in the degree-one part after
    /// substituting g -> eps(g) + t_g.
    std::vector<std::vector<CycloScalar>> rows;
    std::size_t rank = 0;
};

Linearization linearize(const Presentation& pres);
/// dim (m/m^2)^* = #generators - rank of the linearized relations.
int ext1_dimension(const FamilyParams& params);

struct Abelianization {
    /// Absent for commutative instances, whose abelianization is the whole
    /// (infinite-dimensional, domain) algebra.
    std::optional<int> goldie_rank;
    std::string quotient;
};

Abelianization abelianization_goldie_rank(const FamilyParams& params);

struct GrouplikeProfile {
    int rank = 0;
    bool abelian = true;
    std::size_t found = 0;
};

GrouplikeProfile grouplike_profile(const StructureProvider& alg, int bound);

enum class Gldim { Finite2, Infinite };
std::string gldim_name(Gldim g);
/// Family metadata: infinite exactly for B.
Gldim gldim_class(const FamilyParams& params);

/// (pideg, io) for family B: pideg = l, io = l / gcd(d, l) with
/// d = l + m(s-1) - sum m_i. Throws for other families.
std::pair<std::int64_t, std::int64_t> pi_degree_and_io(const FamilyParams& params);

struct PiProfile {
    enum class Kind { Finite, Infinite, Unreported } kind = Kind::Unreported;
    std::int64_t pideg = 0;
    std::optional<std::int64_t> io;
};

/// Report-level view: B via the formula, commutative instances pideg 1,
/// known non-PI instances infinite, everything else unreported.
PiProfile pi_profile(const FamilyParams& params);

struct InvariantVector {
    Abelianization abelianization;
    bool is_commutative = false;
    bool is_cocommutative = false;
    int grouplike_rank = 0;
    bool grouplike_abelian = true;
    int ext1_dim = 0;
    bool gldim_finite = true;
    Family family_tag = Family::GroupZ2;
};

InvariantVector compute_invariants(const FamilyAlgebra& alg, int bound = 2);

/// (name, rendered value) in comparison order; family_tag excluded.
std::vector<std::pair<std::string, std::string>> invariant_components(const InvariantVector& v);

struct InvariantDifference {
    std::string name;
    std::string left;
    std::string right;
    std::string describe() const { return name + " " + left + " ≠ " + right; }
};

/// First differing instance-level invariant. A difference proves the two
/// algebras non-isomorphic; absence is inconclusive.
std::optional<InvariantDifference> distinguish(const FamilyAlgebra& a, const FamilyAlgebra& b, int bound = 2);

struct Resolution {
    FamilyParams params;
    std::vector<std::string> rules;
};

/// Canonical representative after the known coincidences between families.
Resolution resolve(const FamilyParams& params);

struct IsoResult {
    bool isomorphic = false;
    /// Rule that identifies the pair, or the parameter rule separating it
    /// when no instance-level invariant differs.
    std::string rule;
    std::optional<InvariantDifference> difference;
    FamilyParams left, right;
    std::string explanation() const;
};

IsoResult isomorphic(const FamilyParams& p1, const FamilyParams& p2, int bound = 2);

}  // namespace hopfdom

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hopfdom/algebra.hpp"
#include "hopfdom/cyclo.hpp"

namespace hopfdom {

enum class Family { GroupZ2, GroupZSemiZ, EnvAbelian, EnvNonabelian, A, B, C, CLift };

std::string family_name(Family f);
std::optional<Family> parse_family(std::string_view s);
bool family_has_q(Family f);
bool family_has_n(Family f);

struct FamilyParams {
    Family family = Family::GroupZ2;
    int n = 0;
    std::vector<int> p;  // p0..ps, family B only
    CycloScalar q = CycloScalar::one(1);

    static FamilyParams group_z2() { return {Family::GroupZ2, 0, {}, CycloScalar::one(1)}; }
    static FamilyParams group_z_semi_z() { return {Family::GroupZSemiZ, 0, {}, CycloScalar::one(1)}; }
    static FamilyParams env_abelian() { return {Family::EnvAbelian, 0, {}, CycloScalar::one(1)}; }
    static FamilyParams env_nonabelian() { return {Family::EnvNonabelian, 0, {}, CycloScalar::one(1)}; }
    static FamilyParams a(int n, const CycloScalar& q) { return {Family::A, n, {}, q}; }
    static FamilyParams b(int n, std::vector<int> p, const CycloScalar& q) { return {Family::B, n, std::move(p), q}; }
    static FamilyParams c(int n) { return {Family::C, n, {}, CycloScalar::one(1)}; }
    static FamilyParams clift(int n, const CycloScalar& q) { return {Family::CLift, n, {}, q}; }

    std::string label() const;
    /// Field-by-field equality; q compared by value and only where it is a
    /// parameter of the family.
    friend bool operator==(const FamilyParams& a, const FamilyParams& b);
};

/// Violated parameter condition. `pointer()` is a JSON-pointer to the
/// offending field of the instance spec ("/p", "/q", ...).
class InvalidParams : public std::invalid_argument {
   public:
    InvalidParams(std::string pointer, const std::string& what)
        : std::invalid_argument(what), pointer_(std::move(pointer)) {}
    const std::string& pointer() const noexcept { return pointer_; }

   private:
    std::string pointer_;
};

/// Derived data of a B instance: s, m = p1...ps, m_i = m/p_i, l = (n/p0) m.
struct BData {
    int s = 0;
    std::int64_t m = 0;
    std::vector<std::int64_t> mi;  // m_1..m_s at positions 0..s-1
    std::int64_t ell = 0;
};

void validate(const FamilyParams& params);
BData b_data(const FamilyParams& params);

/// q re-expressed at the smallest level that holds it: level 1 for rationals,
/// level order(q) for roots of unity.
CycloScalar minimal_level(const CycloScalar& q);
/// "2", "-1/3", "zeta5^2", or the reduced polynomial for other values.
std::string scalar_label(const CycloScalar& q);

/// Fixed representative of each parameter class the families themselves
/// identify: A(n,q) = A(-n,q^-1), and A(0,q) = A(0,q^-1) resolved towards the
/// lex-larger of q, q^-1. Scalars are brought to minimal level. Idempotent.
FamilyParams canonicalize(const FamilyParams& params);

std::int64_t mu_degree(const FamilyParams& params, const std::vector<int>& d);
/// Carries d_i >= p_i (i >= 2) into d_1 until canonical.
std::vector<int> renormalize_b_index(const FamilyParams& params, std::vector<int> d_raw);

/// Structure provider of one validated instance.
class FamilyAlgebra : public StructureProvider {
   public:
    const FamilyParams& params() const noexcept { return params_; }
    std::string label() const override { return params_.label(); }
    int level() const override { return level_; }

   protected:
    FamilyAlgebra(FamilyParams params, int level) : params_(std::move(params)), level_(level) {}

    FamilyParams params_;
    int level_;
};

/// Validates and builds. Throws InvalidParams.
std::shared_ptr<const FamilyAlgebra> build(const FamilyParams& params);

}  // namespace hopfdom

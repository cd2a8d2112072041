#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hopfdom/cyclo.hpp"

namespace hopfdom {

/// Exponent record of a canonical basis monomial. The meaning of each slot is
/// fixed by the family; this layer only needs equality and a total order.
class BasisIndex {
   public:
    static constexpr std::size_t kMaxArity = 8;

    BasisIndex() = default;
    BasisIndex(std::initializer_list<std::int32_t> e);
    explicit BasisIndex(std::span<const std::int32_t> e);

    std::size_t size() const noexcept { return n_; }
    std::int32_t operator[](std::size_t i) const noexcept { return e_[i]; }
    std::int32_t& operator[](std::size_t i) noexcept { return e_[i]; }
    std::span<const std::int32_t> values() const noexcept { return {e_.data(), n_}; }

    friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
    friend bool operator==(const BasisIndex&, const BasisIndex&) = default;

    std::string to_string() const;

   private:
    std::array<std::int32_t, kMaxArity> e_{};
    std::uint8_t n_ = 0;
};

/// Finite linear combination keyed by `Key`, with no stored zero coefficient.
/// Iteration follows the total order of `Key`.
template <class Key>
class Sparse {
   public:
    using Map = std::map<Key, CycloScalar>;

    Sparse() = default;
    static Sparse term(const Key& k, const CycloScalar& c) {
        Sparse s;
        s.add(k, c);
        return s;
    }

    void add(const Key& k, const CycloScalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    void add_scaled(const Sparse& other, const CycloScalar& c) {
        if (c.is_zero()) return;
        const bool unit = c.is_one();
        for (const auto& [k, v] : other.terms_) add(k, unit ? v : c * v);
    }

    Sparse scaled(const CycloScalar& c) const {
        Sparse out;
        out.add_scaled(*this, c);
        return out;
    }

    CycloScalar coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? CycloScalar() : it->second;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const Map& terms() const noexcept { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    Sparse operator-() const {
        Sparse out;
        for (const auto& [k, v] : terms_) out.terms_.emplace(k, -v);
        return out;
    }
    friend Sparse operator+(Sparse a, const Sparse& b) {
        for (const auto& [k, v] : b.terms_) a.add(k, v);
        return a;
    }
    friend Sparse operator-(Sparse a, const Sparse& b) {
        for (const auto& [k, v] : b.terms_) a.add(k, -v);
        return a;
    }
    friend bool operator==(const Sparse& a, const Sparse& b) { return a.terms_ == b.terms_; }

   private:
    Map terms_;
};

using Element = Sparse<BasisIndex>;
using Tensor2Key = std::array<BasisIndex, 2>;
using Tensor3Key = std::array<BasisIndex, 3>;
using Tensor2 = Sparse<Tensor2Key>;
using Tensor3 = Sparse<Tensor3Key>;

struct Generator {
    std::string name;
    BasisIndex index;
};

/// Raised when an element does not belong to the algebra it is used with.
class InstanceMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Uniform access to the structure constants of one Hopf algebra instance.
/// Implementations are immutable after construction and safe to call from
/// several threads at once.
class StructureProvider {
   public:
    virtual ~StructureProvider() = default;

    virtual std::string label() const = 0;
    /// Level of the cyclotomic field every scalar of this instance lives in.
    virtual int level() const = 0;
    virtual std::size_t arity() const = 0;
    virtual BasisIndex unit_index() const = 0;
    virtual std::vector<Generator> generators() const = 0;
    virtual bool is_valid_index(const BasisIndex& i) const = 0;

    virtual Element multiply_basis(const BasisIndex& i, const BasisIndex& j) const = 0;
    virtual Tensor2 coproduct_basis(const BasisIndex& i) const = 0;
    virtual CycloScalar counit_basis(const BasisIndex& i) const = 0;
    virtual Element antipode_basis(const BasisIndex& i) const = 0;

    /// Canonical indices whose exponents lie in [-bound, bound] (or
    /// [0, bound] for one-sided slots), in ascending order.
    virtual std::vector<BasisIndex> window(int bound) const = 0;
    /// Monomials in the invertible generators within the same bounds.
    virtual std::vector<BasisIndex> unit_monomials(int bound) const = 0;
    virtual std::string format_index(const BasisIndex& i) const = 0;

    /// (x-degree, y-degree) when the family carries such a grading.
    virtual std::optional<std::pair<int, int>> grading(const BasisIndex&) const { return std::nullopt; }

    CycloScalar one() const { return CycloScalar::one(level()); }
    CycloScalar zero() const { return CycloScalar::zero(level()); }
    CycloScalar integer(std::int64_t n) const { return CycloScalar::integer(level(), n); }
    Element basis(const BasisIndex& i) const { return Element::term(i, one()); }
    Element unit() const { return basis(unit_index()); }
};

Element el_add(const Element& a, const Element& b);
Element el_scale(const CycloScalar& c, const Element& a);
/// Product in `alg`; throws InstanceMismatch for foreign indices.
Element el_mul(const Element& a, const Element& b, const StructureProvider& alg);
/// Product without membership validation, for internal hot loops.
Element el_mul_unchecked(const Element& a, const Element& b, const StructureProvider& alg);
void require_member(const Element& a, const StructureProvider& alg);

Tensor2 tensor(const Element& a, const Element& b);
Tensor2 t2_mul(const Tensor2& a, const Tensor2& b, const StructureProvider& alg);
Tensor3 t3_mul(const Tensor3& a, const Tensor3& b, const StructureProvider& alg);
Tensor2 tensor_flip(const Tensor2& t);

Tensor2 apply_coproduct(const Element& h, const StructureProvider& alg);
CycloScalar apply_counit(const Element& h, const StructureProvider& alg);
Element apply_antipode(const Element& h, const StructureProvider& alg);

/// h^e for e >= 0.
Element el_pow(const Element& h, int e, const StructureProvider& alg);
Tensor2 t2_pow(const Tensor2& t, int e, const StructureProvider& alg);

std::string format(const Element& h, const StructureProvider& alg);
std::string format(const Tensor2& t, const StructureProvider& alg);
std::string format(const Tensor3& t, const StructureProvider& alg);

}  // namespace hopfdom

#include "hopfdom/algebra.hpp"

#include <sstream>

namespace hopfdom {

BasisIndex::BasisIndex(std::initializer_list<std::int32_t> e)
    : BasisIndex(std::span<const std::int32_t>(e.begin(), e.size())) {}

BasisIndex::BasisIndex(std::span<const std::int32_t> e) {
    if (e.size() > kMaxArity) throw std::invalid_argument("basis index arity exceeds 8");
    for (std::size_t i = 0; i < e.size(); ++i) e_[i] = e[i];
    n_ = static_cast<std::uint8_t>(e.size());
}

std::string BasisIndex::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < n_; ++i) {
        if (i) s += ",";
        s += std::to_string(e_[i]);
    }
    return s + ")";
}

Element el_add(const Element& a, const Element& b) { return a + b; }

Element el_scale(const CycloScalar& c, const Element& a) { return a.scaled(c); }

void require_member(const Element& a, const StructureProvider& alg) {
    for (const auto& [k, v] : a) {
        if (!alg.is_valid_index(k)) {
            throw InstanceMismatch("index " + k.to_string() + " does not belong to " + alg.label());
        }
        (void)v;
    }
}

Element el_mul_unchecked(const Element& a, const Element& b, const StructureProvider& alg) {
    Element out;
    for (const auto& [i, ci] : a) {
        for (const auto& [j, cj] : b) out.add_scaled(alg.multiply_basis(i, j), ci * cj);
    }
    return out;
}

Element el_mul(const Element& a, const Element& b, const StructureProvider& alg) {
    require_member(a, alg);
    require_member(b, alg);
    return el_mul_unchecked(a, b, alg);
}

Tensor2 tensor(const Element& a, const Element& b) {
    Tensor2 out;
    for (const auto& [i, ci] : a) {
        for (const auto& [j, cj] : b) out.add({i, j}, ci * cj);
    }
    return out;
}

Tensor2 t2_mul(const Tensor2& a, const Tensor2& b, const StructureProvider& alg) {
    Tensor2 out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            const Element left = alg.multiply_basis(ka[0], kb[0]);
            const Element right = alg.multiply_basis(ka[1], kb[1]);
            const CycloScalar c = ca * cb;
            for (const auto& [i, ci] : left) {
                const CycloScalar cl = c * ci;
                for (const auto& [j, cj] : right) out.add({i, j}, cl * cj);
            }
        }
    }
    return out;
}

Tensor3 t3_mul(const Tensor3& a, const Tensor3& b, const StructureProvider& alg) {
    Tensor3 out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            const Element e0 = alg.multiply_basis(ka[0], kb[0]);
            const Element e1 = alg.multiply_basis(ka[1], kb[1]);
            const Element e2 = alg.multiply_basis(ka[2], kb[2]);
            const CycloScalar c = ca * cb;
            for (const auto& [i, ci] : e0) {
                const CycloScalar c0 = c * ci;
                for (const auto& [j, cj] : e1) {
                    const CycloScalar c1 = c0 * cj;
                    for (const auto& [k, ck] : e2) out.add({i, j, k}, c1 * ck);
                }
            }
        }
    }
    return out;
}

Tensor2 tensor_flip(const Tensor2& t) {
    Tensor2 out;
    for (const auto& [k, c] : t) out.add({k[1], k[0]}, c);
    return out;
}

Tensor2 apply_coproduct(const Element& h, const StructureProvider& alg) {
    Tensor2 out;
    for (const auto& [i, c] : h) out.add_scaled(alg.coproduct_basis(i), c);
    return out;
}

CycloScalar apply_counit(const Element& h, const StructureProvider& alg) {
    CycloScalar out = alg.zero();
    for (const auto& [i, c] : h) out += c * alg.counit_basis(i);
    return out;
}

Element apply_antipode(const Element& h, const StructureProvider& alg) {
    Element out;
    for (const auto& [i, c] : h) out.add_scaled(alg.antipode_basis(i), c);
    return out;
}

Element el_pow(const Element& h, int e, const StructureProvider& alg) {
    if (e < 0) throw std::invalid_argument("el_pow requires a nonnegative exponent");
    Element acc = alg.unit();
    for (int k = 0; k < e; ++k) acc = el_mul_unchecked(acc, h, alg);
    return acc;
}

Tensor2 t2_pow(const Tensor2& t, int e, const StructureProvider& alg) {
    if (e < 0) throw std::invalid_argument("t2_pow requires a nonnegative exponent");
    Tensor2 acc = Tensor2::term({alg.unit_index(), alg.unit_index()}, alg.one());
    for (int k = 0; k < e; ++k) acc = t2_mul(acc, t, alg);
    return acc;
}

namespace {

std::string coeff_prefix(const CycloScalar& c, bool first) {
    if (c.is_one()) return first ? "" : " + ";
    if ((-c).is_one()) return first ? "-" : " - ";
    const std::string s = c.to_string();
    const bool compound = s.find_first_of("+-", 1) != std::string::npos;
    std::string body = compound ? "(" + s + ")" : s;
    if (first) return body + "*";
    if (!compound && s.starts_with('-')) return " - " + s.substr(1) + "*";
    return " + " + body + "*";
}

}  // namespace

std::string format(const Element& h, const StructureProvider& alg) {
    if (h.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : h) {
        os << coeff_prefix(c, first) << alg.format_index(i);
        first = false;
    }
    return os.str();
}

std::string format(const Tensor2& t, const StructureProvider& alg) {
    if (t.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t) {
        os << coeff_prefix(c, first) << alg.format_index(k[0]) << "(x)" << alg.format_index(k[1]);
        first = false;
    }
    return os.str();
}

std::string format(const Tensor3& t, const StructureProvider& alg) {
    if (t.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t) {
        os << coeff_prefix(c, first) << alg.format_index(k[0]) << "(x)" << alg.format_index(k[1]) << "(x)"
           << alg.format_index(k[2]);
        first = false;
    }
    return os.str();
}

}  // namespace hopfdom

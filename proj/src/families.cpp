#include "hopfdom/families.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>

#include "hopfdom/qcombinat.hpp"

namespace hopfdom {

std::string family_name(Family f) {
    switch (f) {
        case Family::GroupZ2: return "GroupZ2";
        case Family::GroupZSemiZ: return "GroupZSemiZ";
        case Family::EnvAbelian: return "EnvAbelian";
        case Family::EnvNonabelian: return "EnvNonabelian";
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::CLift: return "CLift";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view s) {
    for (Family f : {Family::GroupZ2, Family::GroupZSemiZ, Family::EnvAbelian, Family::EnvNonabelian, Family::A,
                     Family::B, Family::C, Family::CLift}) {
        if (family_name(f) == s) return f;
    }
    return std::nullopt;
}

bool family_has_q(Family f) { return f == Family::A || f == Family::B || f == Family::CLift; }

bool family_has_n(Family f) { return f == Family::A || f == Family::B || f == Family::C || f == Family::CLift; }

CycloScalar minimal_level(const CycloScalar& q) {
    if (auto r = q.as_rational()) return CycloScalar::rational(1, *r);
    if (auto d = order_of_unity(q)) {
        for (int k = 1; k < *d; ++k) {
            if (std::gcd(k, *d) != 1) continue;
            CycloScalar z = root_of_unity(*d, k);
            if (z == q) return z;
        }
    }
    return q;
}

std::string scalar_label(const CycloScalar& q) {
    const CycloScalar m = minimal_level(q);
    if (auto r = m.as_rational()) return r->to_string();
    if (auto k = m.root_exponent()) {
        const std::string base = "zeta" + std::to_string(m.level());
        return *k == 1 ? base : base + "^" + std::to_string(*k);
    }
    return "(" + m.to_string() + ")";
}

std::string FamilyParams::label() const {
    switch (family) {
        case Family::A: return "A(" + std::to_string(n) + "," + scalar_label(q) + ")";
        case Family::B: {
            std::string s = "B(" + std::to_string(n);
            for (int v : p) s += "," + std::to_string(v);
            return s + "," + scalar_label(q) + ")";
        }
        case Family::C: return "C(" + std::to_string(n) + ")";
        case Family::CLift: return "CLift(" + std::to_string(n) + "," + scalar_label(q) + ")";
        default: return family_name(family);
    }
}

bool operator==(const FamilyParams& a, const FamilyParams& b) {
    if (a.family != b.family) return false;
    if (family_has_n(a.family) && a.n != b.n) return false;
    if (a.family == Family::B && a.p != b.p) return false;
    if (family_has_q(a.family) && !(a.q == b.q)) return false;
    return true;
}

BData b_data(const FamilyParams& params) {
    BData d;
    d.s = static_cast<int>(params.p.size()) - 1;
    d.m = 1;
    for (int i = 1; i <= d.s; ++i) d.m *= params.p[static_cast<std::size_t>(i)];
    for (int i = 1; i <= d.s; ++i) d.mi.push_back(d.m / params.p[static_cast<std::size_t>(i)]);
    d.ell = (params.n / params.p[0]) * d.m;
    return d;
}

void validate(const FamilyParams& params) {
    const Family f = params.family;
    if (family_has_q(f) && params.q.is_zero()) throw InvalidParams("/q", "q must be nonzero");
    if ((f == Family::C || f == Family::CLift) && params.n < 1) throw InvalidParams("/n", "n must be >= 1");
    if (f != Family::B) return;
    if (params.n < 1) throw InvalidParams("/n", "n must be positive");
    const auto& p = params.p;
    if (p.size() < 3) throw InvalidParams("/p", "p needs p0 and at least two further entries (s >= 2)");
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) throw InvalidParams("/p/" + std::to_string(i), "p entries must be positive");
    }
    if (p[1] <= 1) throw InvalidParams("/p/1", "p1 must exceed 1");
    for (std::size_t i = 2; i < p.size(); ++i) {
        if (p[i] <= p[i - 1]) throw InvalidParams("/p/" + std::to_string(i), "p1..ps must be strictly increasing");
    }
    if (params.n % p[0] != 0) throw InvalidParams("/p/0", "p0 must divide n");
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (std::gcd(p[i], p[j]) != 1) throw InvalidParams("/p", "p not pairwise coprime");
        }
    }
    std::int64_t ell = params.n / p[0];
    for (std::size_t i = 1; i < p.size(); ++i) {
        ell *= p[i];
        if (ell > CycloScalar::kMaxLevel) throw InvalidParams("/p", "l exceeds the supported cyclotomic level");
    }
    const auto ord = order_of_unity(params.q);
    if (!ord || *ord != ell) throw InvalidParams("/q", "order(q) ≠ ℓ (ℓ = " + std::to_string(ell) + ")");
}

FamilyParams canonicalize(const FamilyParams& params) {
    FamilyParams out = params;
    if (family_has_q(out.family)) out.q = minimal_level(out.q);
    if (!family_has_n(out.family)) out.n = 0;
    if (out.family != Family::B) out.p.clear();
    if (!family_has_q(out.family)) out.q = CycloScalar::one(1);
    if (out.family == Family::A) {
        if (out.n < 0) {
            out.n = -out.n;
            out.q = minimal_level(out.q.inverse());
        } else if (out.n == 0) {
            CycloScalar inv = minimal_level(out.q.inverse());
            if (lex_less(out.q, inv)) out.q = inv;
        }
    }
    return out;
}

std::int64_t mu_degree(const FamilyParams& params, const std::vector<int>& d) {
    const BData bd = b_data(params);
    if (static_cast<int>(d.size()) != bd.s) throw std::invalid_argument("mu_degree: d must have s entries");
    std::int64_t mu = 0;
    for (int i = 0; i < bd.s; ++i) mu += bd.mi[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(i)];
    return mu;
}

std::vector<int> renormalize_b_index(const FamilyParams& params, std::vector<int> d) {
    const int s = static_cast<int>(params.p.size()) - 1;
    if (static_cast<int>(d.size()) != s) throw std::invalid_argument("renormalize_b_index: d must have s entries");
    for (int i = 1; i < s; ++i) {
        const int pi = params.p[static_cast<std::size_t>(i) + 1];
        const int carry = d[static_cast<std::size_t>(i)] / pi;
        d[static_cast<std::size_t>(i)] -= carry * pi;
        d[0] += carry * params.p[1];
    }
    return d;
}

namespace {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::string power_factor(const std::string& name, int e) {
    if (e == 0) return {};
    if (e == 1) return name;
    return name + "^" + std::to_string(e);
}

std::string join_factors(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& s : parts) {
        if (s.empty()) continue;
        if (!out.empty()) out += "*";
        out += s;
    }
    return out.empty() ? "1" : out;
}

std::vector<BasisIndex> grid2(int lo0, int hi0, int lo1, int hi1) {
    std::vector<BasisIndex> out;
    for (int a = lo0; a <= hi0; ++a) {
        for (int b = lo1; b <= hi1; ++b) out.push_back({a, b});
    }
    return out;
}

/// Thread-safe memo keyed by K.
template <class K, class V>
class Memo {
   public:
    template <class F>
    V get(const K& k, F&& compute) const {
        {
            std::lock_guard<std::mutex> lock(mu_);
            if (auto it = map_.find(k); it != map_.end()) return it->second;
        }
        V v = compute();
        std::lock_guard<std::mutex> lock(mu_);
        return map_.emplace(k, std::move(v)).first->second;
    }

   private:
    mutable std::mutex mu_;
    mutable std::map<K, V> map_;
};

// Families whose basis is y^a x^b, index (a, b).
class TwoSlotAlgebra : public FamilyAlgebra {
   public:
    using FamilyAlgebra::FamilyAlgebra;
    std::size_t arity() const override { return 2; }
    BasisIndex unit_index() const override { return {0, 0}; }
    std::string format_index(const BasisIndex& i) const override {
        return join_factors({power_factor("y", i[0]), power_factor("x", i[1])});
    }
    std::optional<std::pair<int, int>> grading(const BasisIndex& i) const override {
        return std::make_pair(i[1], i[0]);
    }
    Tensor2 coproduct_basis(const BasisIndex& i) const override {
        return cache_.get(i, [&] { return compute_coproduct(i); });
    }

   protected:
    virtual Tensor2 compute_coproduct(const BasisIndex& i) const = 0;
    Element term(int a, int b, const CycloScalar& c) const { return Element::term({a, b}, c); }

   private:
    Memo<BasisIndex, Tensor2> cache_;
};

class GroupZ2Algebra final : public TwoSlotAlgebra {
   public:
    explicit GroupZ2Algebra(FamilyParams p) : TwoSlotAlgebra(std::move(p), 1) {}
    std::vector<Generator> generators() const override {
        return {{"x", {0, 1}}, {"x^-1", {0, -1}}, {"y", {1, 0}}, {"y^-1", {-1, 0}}};
    }
    bool is_valid_index(const BasisIndex& i) const override { return i.size() == 2; }
    Element multiply_basis(const BasisIndex& i, const BasisIndex& j) const override {
        return term(i[0] + j[0], i[1] + j[1], one());
    }
    CycloScalar counit_basis(const BasisIndex&) const override { return one(); }
    Element antipode_basis(const BasisIndex& i) const override { return term(-i[0], -i[1], one()); }
    std::vector<BasisIndex> window(int w) const override { return grid2(-w, w, -w, w); }
    std::vector<BasisIndex> unit_monomials(int w) const override { return window(w); }

   protected:
    Tensor2 compute_coproduct(const BasisIndex& i) const override { return Tensor2::term({i, i}, one()); }
};

class GroupZSemiZAlgebra final : public TwoSlotAlgebra {
   public:
    explicit GroupZSemiZAlgebra(FamilyParams p) : TwoSlotAlgebra(std::move(p), 1) {}
    std::vector<Generator> generators() const override {
        return {{"x", {0, 1}}, {"x^-1", {0, -1}}, {"y", {1, 0}}, {"y^-1", {-1, 0}}};
    }
    bool is_valid_index(const BasisIndex& i) const override { return i.size() == 2; }
    Element multiply_basis(const BasisIndex& i, const BasisIndex& j) const override {
        const int sign = (i[1] % 2 == 0) ? 1 : -1;
        return term(i[0] + sign * j[0], i[1] + j[1], one());
    }
    CycloScalar counit_basis(const BasisIndex&) const override { return one(); }
    Element antipode_basis(const BasisIndex& i) const override {
        const int sign = (i[1] % 2 == 0) ? 1 : -1;
        return term(-sign * i[0], -i[1], one());
    }
    std::vector<BasisIndex> window(int w) const override { return grid2(-w, w, -w, w); }
    std::vector<BasisIndex> unit_monomials(int w) const override { return window(w); }

   protected:
    Tensor2 compute_coproduct(const BasisIndex& i) const override { return Tensor2::term({i, i}, one()); }
};

// U(g) for a two-dimensional Lie algebra; [x, y] = commutator * y.
class EnvAlgebra final : public TwoSlotAlgebra {
   public:
    EnvAlgebra(FamilyParams p, int commutator) : TwoSlotAlgebra(std::move(p), 1), commutator_(commutator) {}
    std::vector<Generator> generators() const override { return {{"x", {0, 1}}, {"y", {1, 0}}}; }
    bool is_valid_index(const BasisIndex& i) const override { return i.size() == 2 && i[0] >= 0 && i[1] >= 0; }
    Element multiply_basis(const BasisIndex& i, const BasisIndex& j) const override {
        // x^b y^c = y^c (x + commutator*c)^b
        Element out;
        const int b = i[1], c = j[0];
        const std::int64_t shift = static_cast<std::int64_t>(commutator_) * c;
        for (int k = 0; k <= b; ++k) {
            std::int64_t coeff = binomial(b, k);
            for (int e = 0; e < b - k; ++e) coeff *= shift;
            if (coeff != 0) out.add({i[0] + c, k + j[1]}, integer(coeff));
        }
        return out;
    }
    CycloScalar counit_basis(const BasisIndex& i) const override { return (i[0] == 0 && i[1] == 0) ? one() : zero(); }
    Element antipode_basis(const BasisIndex& i) const override {
        // S(y^a x^b) = (-x)^b (-y)^a
        const CycloScalar sign = integer(((i[0] + i[1]) % 2 == 0) ? 1 : -1);
        return multiply_basis({0, i[1]}, {i[0], 0}).scaled(sign);
    }
    std::vector<BasisIndex> window(int w) const override { return grid2(0, w, 0, w); }
    std::vector<BasisIndex> unit_monomials(int) const override { return {unit_index()}; }

   protected:
    Tensor2 compute_coproduct(const BasisIndex& i) const override {
        Tensor2 out;
        for (int a = 0; a <= i[0]; ++a) {
            for (int b = 0; b <= i[1]; ++b) {
                out.add({BasisIndex{a, b}, BasisIndex{i[0] - a, i[1] - b}},
                        integer(binomial(i[0], a) * binomial(i[1], b)));
            }
        }
        return out;
    }

   private:
    int commutator_;
};

class AAlgebra final : public TwoSlotAlgebra {
   public:
    AAlgebra(FamilyParams p, const CycloScalar& q)
        : TwoSlotAlgebra(std::move(p), q.level()), n_(params_.n), q_(q), qn_(q.pow(params_.n)) {}
    std::vector<Generator> generators() const override { return {{"x", {0, 1}}, {"x^-1", {0, -1}}, {"y", {1, 0}}}; }
    bool is_valid_index(const BasisIndex& i) const override { return i.size() == 2 && i[0] >= 0; }
    Element multiply_basis(const BasisIndex& i, const BasisIndex& j) const override {
        return term(i[0] + j[0], i[1] + j[1], q_.pow(static_cast<std::int64_t>(i[1]) * j[0]));
    }
    CycloScalar counit_basis(const BasisIndex& i) const override { return i[0] == 0 ? one() : zero(); }
    Element antipode_basis(const BasisIndex& i) const override {
        // S(y^a x^b) = x^-b (-x^-n y)^a
        const Element sy = multiply_basis({0, -n_}, {1, 0}).scaled(integer(-1));
        return el_mul_unchecked(basis({0, -i[1]}), el_pow(sy, i[0], *this), *this);
    }
    std::vector<BasisIndex> window(int w) const override { return grid2(0, w, -w, w); }
    std::vector<BasisIndex> unit_monomials(int w) const override { return grid2(0, 0, -w, w); }

   protected:
    Tensor2 compute_coproduct(const BasisIndex& i) const override {
        // (y(x)1 + x^n(x)y)^a with (x^n(x)y)(y(x)1) = q^n (y(x)1)(x^n(x)y), then (x(x)x)^b
        const int a = i[0], b = i[1];
        const auto c = skew_binomial_expand(a, qn_);
        Tensor2 out;
        for (int r = 0; r <= a; ++r) {
            out.add({BasisIndex{a - r, n_ * r + b}, BasisIndex{r, b}}, c[static_cast<std::size_t>(r)]);
        }
        return out;
    }

   private:
    int n_;
    CycloScalar q_, qn_;
};

// C(n) and its lift: k[y^{+-1}][x] with x y = q y x + y^n - y.
class CAlgebra final : public TwoSlotAlgebra {
   public:
    CAlgebra(FamilyParams p, const CycloScalar& q) : TwoSlotAlgebra(std::move(p), q.level()), n_(params_.n), q_(q) {}
    std::vector<Generator> generators() const override { return {{"y", {1, 0}}, {"y^-1", {-1, 0}}, {"x", {0, 1}}}; }
    bool is_valid_index(const BasisIndex& i) const override { return i.size() == 2 && i[1] >= 0; }
    Element multiply_basis(const BasisIndex& i, const BasisIndex& j) const override {
        Element out;
        for (const auto& [k, c] : x_pow_y_pow(i[1], j[0])) out.add({i[0] + k[0], k[1] + j[1]}, c);
        return out;
    }
    CycloScalar counit_basis(const BasisIndex& i) const override { return i[1] == 0 ? one() : zero(); }
    Element antipode_basis(const BasisIndex& i) const override {
        // S(y^a x^b) = (-x y^{1-n})^b y^-a
        const Element sx = x_pow_y_pow(1, 1 - n_).scaled(integer(-1));
        return el_mul_unchecked(el_pow(sx, i[1], *this), basis({-i[0], 0}), *this);
    }
    std::vector<BasisIndex> window(int w) const override { return grid2(-w, w, 0, w); }
    std::vector<BasisIndex> unit_monomials(int w) const override { return grid2(-w, w, 0, 0); }

   protected:
    Tensor2 compute_coproduct(const BasisIndex& i) const override {
        const Tensor2 ya = Tensor2::term({BasisIndex{i[0], 0}, BasisIndex{i[0], 0}}, one());
        return t2_mul(ya, delta_x_pow(i[1]), *this);
    }

   private:
    /// [a]_q, also for negative a.
    CycloScalar q_integer_at(int a) const {
        CycloScalar s = zero();
        if (a >= 0) {
            for (int k = 0; k < a; ++k) s += q_.pow(k);
        } else {
            for (int k = a; k < 0; ++k) s -= q_.pow(k);
        }
        return s;
    }

    /// x^b y^c in normal form.
    Element x_pow_y_pow(int b, int c) const {
        if (b == 0) return basis({c, 0});
        return xy_memo_.get({b, c}, [&] {
            // x y^c = q^c y^c x + [c]_q (y^{c+n-1} - y^c)
            const CycloScalar qc = q_integer_at(c);
            Element out;
            for (const auto& [k, v] : x_pow_y_pow(b - 1, c)) out.add({k[0], k[1] + 1}, v * q_.pow(c));
            if (!qc.is_zero()) {
                for (const auto& [k, v] : x_pow_y_pow(b - 1, c + n_ - 1)) out.add(k, v * qc);
                for (const auto& [k, v] : x_pow_y_pow(b - 1, c)) out.add(k, -(v * qc));
            }
            return out;
        });
    }

    Tensor2 delta_x_pow(int b) const {
        if (b == 0) return Tensor2::term({unit_index(), unit_index()}, one());
        return dx_memo_.get(b, [&] {
            Tensor2 dx;
            dx.add({BasisIndex{0, 1}, BasisIndex{n_ - 1, 0}}, one());
            dx.add({BasisIndex{0, 0}, BasisIndex{0, 1}}, one());
            return t2_mul(delta_x_pow(b - 1), dx, *this);
        });
    }

    int n_;
    CycloScalar q_;
    Memo<std::pair<int, int>, Element> xy_memo_;
    Memo<int, Tensor2> dx_memo_;
};

// Index (d_1..d_s, b) for y_1^{d_1}...y_s^{d_s} x^b with d_i < p_i for i >= 2.
class BAlgebra final : public FamilyAlgebra {
   public:
    explicit BAlgebra(FamilyParams p)
        : FamilyAlgebra(std::move(p), 0), bd_(b_data(params_)), s_(bd_.s), n_(params_.n) {
        q_ = minimal_level(params_.q);
        level_ = q_.level();
    }
    std::size_t arity() const override { return static_cast<std::size_t>(s_) + 1; }
    BasisIndex unit_index() const override { return make({}, 0); }
    std::vector<Generator> generators() const override {
        std::vector<Generator> g{{"x", make({}, 1)}, {"x^-1", make({}, -1)}};
        for (int i = 0; i < s_; ++i) g.push_back({"y" + std::to_string(i + 1), y_index(i, 1)});
        return g;
    }
    bool is_valid_index(const BasisIndex& i) const override {
        if (i.size() != arity()) return false;
        for (int k = 0; k < s_; ++k) {
            if (i[static_cast<std::size_t>(k)] < 0) return false;
            if (k > 0 && i[static_cast<std::size_t>(k)] >= params_.p[static_cast<std::size_t>(k) + 1]) return false;
        }
        return true;
    }
    Element multiply_basis(const BasisIndex& i, const BasisIndex& j) const override {
        // x^b y^{d'} = q^{b mu.d'} y^{d'} x^b
        std::vector<int> d(static_cast<std::size_t>(s_));
        std::int64_t mu = 0;
        for (int k = 0; k < s_; ++k) {
            const auto kk = static_cast<std::size_t>(k);
            d[kk] = i[kk] + j[kk];
            mu += bd_.mi[kk] * j[kk];
        }
        const int b = i[static_cast<std::size_t>(s_)];
        return Element::term(make(renormalize_b_index(params_, std::move(d)), b + j[static_cast<std::size_t>(s_)]),
                             q_.pow((static_cast<std::int64_t>(b) * mu) % bd_.ell));
    }
    Tensor2 coproduct_basis(const BasisIndex& i) const override {
        return cache_.get(i, [&] {
            Tensor2 acc = Tensor2::term({unit_index(), unit_index()}, one());
            for (int k = 0; k < s_; ++k) {
                const int dk = i[static_cast<std::size_t>(k)];
                if (dk > 0) acc = t2_mul(acc, delta_y_pow(k, dk), *this);
            }
            const BasisIndex xb = make({}, i[static_cast<std::size_t>(s_)]);
            return t2_mul(acc, Tensor2::term({xb, xb}, one()), *this);
        });
    }
    CycloScalar counit_basis(const BasisIndex& i) const override {
        for (int k = 0; k < s_; ++k) {
            if (i[static_cast<std::size_t>(k)] != 0) return zero();
        }
        return one();
    }
    Element antipode_basis(const BasisIndex& i) const override {
        // S(y_1^{d_1}...y_s^{d_s} x^b) = x^-b S(y_s)^{d_s} ... S(y_1)^{d_1}, S(y_k) = -x^{-m_k n} y_k
        Element acc = basis(make({}, -i[static_cast<std::size_t>(s_)]));
        for (int k = s_ - 1; k >= 0; --k) {
            const int xe = static_cast<int>(-bd_.mi[static_cast<std::size_t>(k)] * n_);
            const Element sy = multiply_basis(make({}, xe), y_index(k, 1)).scaled(integer(-1));
            acc = el_mul_unchecked(acc, el_pow(sy, i[static_cast<std::size_t>(k)], *this), *this);
        }
        return acc;
    }
    std::vector<BasisIndex> window(int w) const override {
        std::vector<BasisIndex> out;
        std::vector<int> d(static_cast<std::size_t>(s_), 0);
        enumerate(0, w, d, out, w);
        return out;
    }
    std::vector<BasisIndex> unit_monomials(int w) const override {
        std::vector<BasisIndex> out;
        for (int b = -w; b <= w; ++b) out.push_back(make({}, b));
        return out;
    }
    std::string format_index(const BasisIndex& i) const override {
        std::vector<std::string> parts;
        for (int k = 0; k < s_; ++k) {
            parts.push_back(power_factor("y" + std::to_string(k + 1), i[static_cast<std::size_t>(k)]));
        }
        parts.push_back(power_factor("x", i[static_cast<std::size_t>(s_)]));
        return join_factors(parts);
    }
    std::optional<std::pair<int, int>> grading(const BasisIndex& i) const override {
        std::int64_t mu = 0;
        for (int k = 0; k < s_; ++k) mu += bd_.mi[static_cast<std::size_t>(k)] * i[static_cast<std::size_t>(k)];
        return std::make_pair(i[static_cast<std::size_t>(s_)], static_cast<int>(mu));
    }

   private:
    BasisIndex make(const std::vector<int>& d, int b) const {
        std::array<std::int32_t, BasisIndex::kMaxArity> e{};
        for (std::size_t k = 0; k < d.size(); ++k) e[k] = d[k];
        e[static_cast<std::size_t>(s_)] = b;
        return BasisIndex(std::span<const std::int32_t>(e.data(), static_cast<std::size_t>(s_) + 1));
    }
    BasisIndex y_index(int k, int e) const {
        std::vector<int> d(static_cast<std::size_t>(s_), 0);
        d[static_cast<std::size_t>(k)] = e;
        return make(renormalize_b_index(params_, std::move(d)), 0);
    }
    void enumerate(int k, int w, std::vector<int>& d, std::vector<BasisIndex>& out, int bound) const {
        if (k == s_) {
            for (int b = -bound; b <= bound; ++b) out.push_back(make(d, b));
            return;
        }
        const int hi = k == 0 ? w : std::min(w, params_.p[static_cast<std::size_t>(k) + 1] - 1);
        for (int v = 0; v <= hi; ++v) {
            d[static_cast<std::size_t>(k)] = v;
            enumerate(k + 1, w, d, out, bound);
        }
        d[static_cast<std::size_t>(k)] = 0;
    }
    /// Delta(y_k)^e = sum_r c_r y_k^{e-r} x^{m_k n r} (x) y_k^r, ratio q^{m_k^2 n}.
    Tensor2 delta_y_pow(int k, int e) const {
        const std::int64_t mk = bd_.mi[static_cast<std::size_t>(k)];
        const CycloScalar ratio = q_.pow((mk * mk * n_) % bd_.ell);
        const auto c = skew_binomial_expand(e, ratio);
        Tensor2 out;
        for (int r = 0; r <= e; ++r) {
            const Element left = multiply_basis(y_index(k, e - r), make({}, static_cast<int>(mk * n_ * r)));
            const Element right = basis(y_index(k, r));
            for (const auto& [li, lc] : left) out.add({li, right.begin()->first}, lc * c[static_cast<std::size_t>(r)]);
        }
        return out;
    }

    BData bd_;
    int s_;
    int n_;
    CycloScalar q_;
    Memo<BasisIndex, Tensor2> cache_;
};

}  // namespace

std::shared_ptr<const FamilyAlgebra> build(const FamilyParams& raw) {
    validate(raw);
    FamilyParams p = raw;
    if (family_has_q(p.family)) p.q = minimal_level(p.q);
    switch (p.family) {
        case Family::GroupZ2: return std::make_shared<GroupZ2Algebra>(p);
        case Family::GroupZSemiZ: return std::make_shared<GroupZSemiZAlgebra>(p);
        case Family::EnvAbelian: return std::make_shared<EnvAlgebra>(p, 0);
        case Family::EnvNonabelian: return std::make_shared<EnvAlgebra>(p, 1);
        case Family::A: {
            const CycloScalar q = p.q;
            return std::make_shared<AAlgebra>(p, q);
        }
        case Family::B: return std::make_shared<BAlgebra>(p);
        case Family::C: return std::make_shared<CAlgebra>(p, CycloScalar::one(1));
        case Family::CLift: {
            const CycloScalar q = p.q;
            return std::make_shared<CAlgebra>(p, q);
        }
    }
    throw std::logic_error("unknown family");
}

}  // namespace hopfdom

#include "hopfdom/cyclo.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hopfdom {

struct CycloContext {
    int level = 1;
    int phi = 1;
    // z^k reduced modulo Phi_level, for k in [0, level).
    std::vector<std::vector<Rational>> powers;
    // Integer copy of `powers`, valid when every entry is small.
    std::vector<std::vector<std::int64_t>> int_powers;
    bool int_powers_ok = false;
};

int euler_phi(int n) {
    if (n < 1) throw std::invalid_argument("euler_phi requires n >= 1");
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

const RatPoly& cyclotomic_polynomial(int level) {
    static std::recursive_mutex mu;
    static std::map<int, RatPoly> memo;
    if (level < 1) throw std::invalid_argument("cyclotomic level must be >= 1");
    std::lock_guard<std::recursive_mutex> lock(mu);
    if (auto it = memo.find(level); it != memo.end()) return it->second;
    RatPoly num = RatPoly::monomial(static_cast<std::size_t>(level)) - RatPoly::constant(Rational(1));
    for (int d = 1; d < level; ++d) {
        if (level % d == 0) num = num.exact_div(cyclotomic_polynomial(d));
    }
    return memo.emplace(level, std::move(num)).first->second;
}

namespace {

constexpr std::int64_t kFastCoeffBound = std::int64_t{1} << 24;
constexpr std::int64_t kFastTableBound = std::int64_t{1} << 20;

std::unique_ptr<CycloContext> make_context(int level) {
    auto ctx = std::make_unique<CycloContext>();
    ctx->level = level;
    ctx->phi = euler_phi(level);
    const RatPoly& phi_poly = cyclotomic_polynomial(level);
    const auto n = static_cast<std::size_t>(ctx->phi);
    ctx->powers.reserve(static_cast<std::size_t>(level));
    std::vector<Rational> cur(n);
    cur[0] = Rational(1);
    for (int k = 0; k < level; ++k) {
        ctx->powers.push_back(cur);
        // multiply by z: shift up and fold the overflow with Phi (monic).
        Rational top = cur[n - 1];
        for (std::size_t i = n - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = Rational(0);
        if (!top.is_zero()) {
            for (std::size_t i = 0; i < n; ++i) cur[i] -= top * phi_poly.coeff(i);
        }
    }
    ctx->int_powers_ok = true;
    ctx->int_powers.resize(ctx->powers.size());
    for (std::size_t k = 0; k < ctx->powers.size() && ctx->int_powers_ok; ++k) {
        ctx->int_powers[k].resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Rational& r = ctx->powers[k][i];
            if (!r.is_small_integer() || std::llabs(r.small_num()) >= kFastTableBound) {
                ctx->int_powers_ok = false;
                break;
            }
            ctx->int_powers[k][i] = r.small_num();
        }
    }
    if (!ctx->int_powers_ok) ctx->int_powers.clear();
    return ctx;
}

bool all_fast_integers(const std::vector<Rational>& v) {
    for (const Rational& r : v) {
        if (!r.is_small_integer() || std::llabs(r.small_num()) >= kFastCoeffBound) return false;
    }
    return true;
}

Rational from_i128(__int128 v) {
    constexpr __int128 lim = std::numeric_limits<std::int64_t>::max();
    if (v <= lim && v >= -lim) return Rational(static_cast<std::int64_t>(v));
    // assemble from two 64-bit halves.
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
    mpz_class z = (hi << 64) + lo;
    if (neg) z = -z;
    return Rational(mpq_class(z));
}

int lcm_level(int a, int b) {
    std::int64_t l = lcm_i64(a, b);
    if (l > CycloScalar::kMaxLevel) throw std::domain_error("cyclotomic level too large");
    return static_cast<int>(l);
}

}  // namespace

const CycloContext& CycloScalar::context(int level) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycloContext>> registry;
    if (level < 1) throw std::invalid_argument("cyclotomic level must be >= 1");
    if (level > kMaxLevel) throw std::domain_error("cyclotomic level too large");
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[level];
    if (!slot) slot = make_context(level);
    return *slot;
}

CycloScalar::CycloScalar(const CycloContext* ctx, std::vector<Rational> c, int root_exp)
    : ctx_(ctx), c_(std::move(c)), root_exp_(root_exp) {}

CycloScalar::CycloScalar() : CycloScalar(zero(1)) {}

CycloScalar CycloScalar::zero(int level) {
    const CycloContext& ctx = context(level);
    return CycloScalar(&ctx, std::vector<Rational>(static_cast<std::size_t>(ctx.phi)), -1);
}

CycloScalar CycloScalar::one(int level) { return power_of_root(context(level), 0); }

CycloScalar CycloScalar::root_power(int level, std::int64_t k) { return power_of_root(context(level), k); }

CycloScalar CycloScalar::rational(int level, const Rational& r) {
    CycloScalar s = zero(level);
    s.c_[0] = r;
    if (r.is_one()) s.root_exp_ = 0;
    return s;
}

CycloScalar CycloScalar::from_coeffs(int level, const std::vector<Rational>& coeffs) {
    const CycloContext& ctx = context(level);
    const auto n = static_cast<std::size_t>(ctx.phi);
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        if (i < n) {
            out[i] += coeffs[i];
            continue;
        }
        const auto& p = ctx.powers[i % static_cast<std::size_t>(ctx.level)];
        for (std::size_t j = 0; j < n; ++j) {
            if (!p[j].is_zero()) out[j] += coeffs[i] * p[j];
        }
    }
    return CycloScalar(&ctx, std::move(out), -1);
}

CycloScalar CycloScalar::power_of_root(const CycloContext& ctx, std::int64_t k) {
    std::int64_t r = k % ctx.level;
    if (r < 0) r += ctx.level;
    return CycloScalar(&ctx, ctx.powers[static_cast<std::size_t>(r)], static_cast<int>(r));
}

int CycloScalar::level() const noexcept { return ctx_->level; }
int CycloScalar::degree() const noexcept { return ctx_->phi; }

bool CycloScalar::is_zero() const noexcept {
    for (const Rational& r : c_) {
        if (!r.is_zero()) return false;
    }
    return true;
}

bool CycloScalar::is_one() const noexcept {
    if (root_exp_ == 0) return true;
    if (!c_[0].is_one()) return false;
    for (std::size_t i = 1; i < c_.size(); ++i) {
        if (!c_[i].is_zero()) return false;
    }
    return true;
}

std::optional<Rational> CycloScalar::as_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i) {
        if (!c_[i].is_zero()) return std::nullopt;
    }
    return c_[0];
}

std::optional<int> CycloScalar::root_exponent() const {
    if (root_exp_ >= 0) return root_exp_;
    for (int k = 0; k < ctx_->level; ++k) {
        if (ctx_->powers[static_cast<std::size_t>(k)] == c_) return k;
    }
    return std::nullopt;
}

CycloScalar CycloScalar::lift(int new_level) const {
    if (new_level == level()) return *this;
    if (new_level % level() != 0) throw std::invalid_argument("lift target must be a multiple of the level");
    const CycloContext& target = context(new_level);
    const std::int64_t f = new_level / level();
    if (root_exp_ >= 0) return power_of_root(target, root_exp_ * f);
    std::vector<Rational> spread(static_cast<std::size_t>((c_.size() - 1) * f + 1));
    for (std::size_t i = 0; i < c_.size(); ++i) spread[i * static_cast<std::size_t>(f)] = c_[i];
    return from_coeffs(new_level, spread);
}

CycloScalar CycloScalar::operator-() const {
    std::vector<Rational> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
    int tag = -1;
    if (root_exp_ >= 0 && ctx_->level % 2 == 0) tag = (root_exp_ + ctx_->level / 2) % ctx_->level;
    return CycloScalar(ctx_, std::move(out), tag);
}

CycloScalar operator+(const CycloScalar& a, const CycloScalar& b) {
    if (a.level() != b.level()) {
        int l = lcm_level(a.level(), b.level());
        return a.lift(l) + b.lift(l);
    }
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::vector<Rational> out(a.c_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.c_[i] + b.c_[i];
    return CycloScalar(a.ctx_, std::move(out), -1);
}

CycloScalar operator-(const CycloScalar& a, const CycloScalar& b) { return a + (-b); }

CycloScalar CycloScalar::mul_same_level(const CycloScalar& a, const CycloScalar& b) {
    const CycloContext& ctx = *a.ctx_;
    if (a.root_exp_ >= 0 && b.root_exp_ >= 0) {
        return power_of_root(ctx, static_cast<std::int64_t>(a.root_exp_) + b.root_exp_);
    }
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    const auto n = static_cast<std::size_t>(ctx.phi);
    if (auto ra = a.as_rational()) {
        if (ra->is_zero()) return zero(ctx.level);
        std::vector<Rational> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = *ra * b.c_[i];
        return CycloScalar(&ctx, std::move(out), -1);
    }
    if (b.as_rational()) return mul_same_level(b, a);

    const std::size_t conv_len = 2 * n - 1;
    if (ctx.int_powers_ok && all_fast_integers(a.c_) && all_fast_integers(b.c_)) {
        std::vector<__int128> conv(conv_len, 0);
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t ai = a.c_[i].small_num();
            if (ai == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                std::int64_t bj = b.c_[j].small_num();
                if (bj != 0) conv[i + j] += static_cast<__int128>(ai) * bj;
            }
        }
        std::vector<__int128> acc(conv.begin(), conv.begin() + static_cast<std::ptrdiff_t>(n));
        for (std::size_t k = n; k < conv_len; ++k) {
            if (conv[k] == 0) continue;
            const auto& p = ctx.int_powers[k % static_cast<std::size_t>(ctx.level)];
            for (std::size_t j = 0; j < n; ++j) {
                if (p[j] != 0) acc[j] += conv[k] * p[j];
            }
        }
        std::vector<Rational> out(n);
        for (std::size_t j = 0; j < n; ++j) out[j] = from_i128(acc[j]);
        return CycloScalar(&ctx, std::move(out), -1);
    }

    std::vector<Rational> conv(conv_len);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (!b.c_[j].is_zero()) conv[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return from_coeffs(ctx.level, conv);
}

CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
    if (a.level() != b.level()) {
        int l = lcm_level(a.level(), b.level());
        return CycloScalar::mul_same_level(a.lift(l), b.lift(l));
    }
    return CycloScalar::mul_same_level(a, b);
}

CycloScalar CycloScalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
    if (root_exp_ >= 0) return power_of_root(*ctx_, -static_cast<std::int64_t>(root_exp_));
    if (auto r = as_rational()) return rational(level(), r->inverse());
    RatPoly a(c_);
    ExtendedGcd eg = extended_gcd(a, cyclotomic_polynomial(level()));
    if (eg.g.degree() != 0) throw std::logic_error("cyclotomic inverse: non-unit gcd");
    return from_coeffs(level(), eg.s.coeffs());
}

CycloScalar CycloScalar::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    if (root_exp_ >= 0) {
        std::int64_t k = static_cast<std::int64_t>(root_exp_) * (e % ctx_->level);
        return power_of_root(*ctx_, k);
    }
    CycloScalar result = one(level());
    CycloScalar base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

CycloScalar operator/(const CycloScalar& a, const CycloScalar& b) { return a * b.inverse(); }

bool operator==(const CycloScalar& a, const CycloScalar& b) {
    if (a.level() == b.level()) return a.c_ == b.c_;
    int l = lcm_level(a.level(), b.level());
    return a.lift(l).c_ == b.lift(l).c_;
}

bool lex_less(const CycloScalar& a, const CycloScalar& b) {
    if (a.level() != b.level()) return a.level() < b.level();
    return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end(),
                                        [](const Rational& x, const Rational& y) { return x < y; });
}

std::vector<std::string> CycloScalar::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const Rational& r : c_) out.push_back(r.to_string());
    return out;
}

std::string CycloScalar::to_string() const {
    if (level() <= 2) return c_[0].to_string();
    std::ostringstream os;
    bool first = true;
    const std::string z = "z" + std::to_string(level());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        Rational c = c_[i];
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << c.to_string();
            continue;
        }
        if (!c.is_one()) os << c.to_string() << "*";
        os << z;
        if (i > 1) os << "^" << i;
    }
    return first ? "0" : os.str();
}

CycloScalar root_of_unity(int level, std::int64_t k) { return CycloScalar::root_power(level, k); }

std::optional<int> order_of_unity(const CycloScalar& a) {
    if (a.is_zero()) return std::nullopt;
    if (auto k = a.root_exponent()) {
        int l = a.level();
        return l / std::gcd(*k, l);
    }
    const int bound = static_cast<int>(lcm_i64(2, a.level()));
    if (!a.pow(bound).is_one()) return std::nullopt;
    for (int d = 1; d <= bound; ++d) {
        if (bound % d == 0 && a.pow(d).is_one()) return d;
    }
    return std::nullopt;
}

}  // namespace hopfdom

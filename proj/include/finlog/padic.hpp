#pragma once

#include <cstdint>
#include <utility>

#include "finlog/errors.hpp"
#include "finlog/modring.hpp"
#include "finlog/primes.hpp"
#include "finlog/rational.hpp"

namespace finlog {

// Working precision for truncated p-adic arithmetic: target exponent k plus
// g guard digits; all unit arithmetic is carried modulo p^(k+g).
struct PadicContext {
    std::uint64_t p;
    int k;
    int g;
    std::uint64_t modulus;  // p^(k+g)

    PadicContext(std::uint64_t p_, int k_, int g_ = 2) : p(p_), k(k_), g(g_) {
        if (k < 1 || g < 0) throw ArithError("PadicContext: need k >= 1, g >= 0");
        if (p < 3 || !is_prime(p)) throw ArithError("PadicContext: odd prime required");
        modulus = pow_u64_checked(p, k + g);
    }

    int digits() const { return k + g; }
};

// A nonzero value is stored as unit * p^v with the unit residue held modulo
// p^(k+g); only the low (k+g - lost) unit digits are certified, i.e. the
// value is known modulo p^(v + k + g - lost). A zero is either exact or
// "fuzzy": certified to vanish modulo p^zknown only. A fuzzy zero arises
// from total cancellation (or a residue of 0) and reduce() charges it the
// full guard allowance. Values are immutable and cheap to copy.
class PadicApprox {
    static constexpr std::int64_t kExactZero = INT64_MAX / 4;

public:
    static PadicApprox zero(const PadicContext& ctx) {
        PadicApprox x(ctx);
        x.zero_ = true;
        x.fuzzy_ = false;
        x.zknown_ = kExactZero;
        return x;
    }

    static PadicApprox fuzzy_zero(const PadicContext& ctx, std::int64_t known_exp) {
        PadicApprox x(ctx);
        x.zero_ = true;
        x.fuzzy_ = true;
        x.zknown_ = std::min(known_exp, kExactZero);
        return x;
    }

    static PadicApprox from_integer(std::int64_t n, const PadicContext& ctx) {
        if (n == 0) return zero(ctx);
        PadicApprox x(ctx);
        x.zero_ = false;
        x.lost_ = 0;
        bool neg = n < 0;
        std::uint64_t a = neg ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
        x.v_ = 0;
        while (a % ctx.p == 0) {
            a /= ctx.p;
            ++x.v_;
        }
        x.u_ = a % ctx.modulus;
        if (neg) x.u_ = ctx.modulus - x.u_;
        return x;
    }

    // unit * p^v with the unit taken exactly (residue coprime to p required).
    static PadicApprox from_unit(std::uint64_t u, std::int64_t v, const PadicContext& ctx) {
        PadicApprox x(ctx);
        x.zero_ = false;
        x.v_ = v;
        x.u_ = u % ctx.modulus;
        x.lost_ = 0;
        if (x.u_ % ctx.p == 0) throw ArithError("from_unit: residue divisible by p");
        return x;
    }

    // An integer known only as a residue modulo p^(k+g).
    static PadicApprox from_residue(std::uint64_t r, const PadicContext& ctx) {
        r %= ctx.modulus;
        if (r == 0) return fuzzy_zero(ctx, ctx.digits());
        PadicApprox x(ctx);
        x.zero_ = false;
        x.v_ = 0;
        while (r % ctx.p == 0) {
            r /= ctx.p;
            ++x.v_;
        }
        x.u_ = r;
        x.lost_ = static_cast<int>(x.v_);  // unit digits shortened by the shift
        return x;
    }

    const PadicContext& ctx() const { return *ctx_; }
    bool is_zero() const { return zero_; }
    std::int64_t valuation() const {
        if (zero_) throw ArithError("valuation of zero");
        return v_;
    }
    std::uint64_t unit() const { return u_; }

    // Guard digits consumed. A fuzzy zero reports at least g, per the total
    // cancellation policy.
    int lost() const {
        if (!zero_) return lost_;
        if (!fuzzy_) return 0;
        std::int64_t missing = ctx_->digits() - std::min<std::int64_t>(zknown_, ctx_->digits());
        return static_cast<int>(std::max<std::int64_t>(ctx_->g, missing));
    }

    // Exponent N such that the value is certified modulo p^N.
    std::int64_t known_exponent() const {
        return zero_ ? zknown_ : v_ + ctx_->digits() - lost_;
    }

    PadicApprox operator-() const {
        PadicApprox r = *this;
        if (!r.zero_) r.u_ = ctx_->modulus - r.u_;
        return r;
    }

    friend PadicApprox operator+(const PadicApprox& x, const PadicApprox& y) {
        x.check(y);
        const PadicContext& c = *x.ctx_;
        if (x.zero_ && y.zero_) {
            if (!x.fuzzy_ && !y.fuzzy_) return zero(c);
            return fuzzy_zero(c, std::min(x.zknown_, y.zknown_));
        }
        if (x.zero_) return y.degraded_to(x.zknown_);
        if (y.zero_) return x.degraded_to(y.zknown_);

        std::int64_t A = std::min(x.v_, y.v_);
        std::int64_t N = std::min(x.known_exponent(), y.known_exponent());
        std::int64_t W = std::min<std::int64_t>(c.digits(), N - A);
        if (W <= 0) throw PrecisionExhausted("add: no representable digits left");
        std::uint64_t wmod = pow_u64_checked(c.p, static_cast<int>(W));
        std::uint64_t r = add_mod(x.shifted_residue(A, wmod), y.shifted_residue(A, wmod), wmod);
        if (r == 0) return fuzzy_zero(c, A + W);  // indistinguishable from zero
        PadicApprox out(c);
        out.zero_ = false;
        std::int64_t e = 0;
        while (r % c.p == 0) {
            r /= c.p;
            ++e;
        }
        out.v_ = A + e;
        out.u_ = r;
        out.lost_ = static_cast<int>(c.digits() - std::min<std::int64_t>(c.digits(), N - out.v_));
        return out;
    }

    friend PadicApprox operator-(const PadicApprox& x, const PadicApprox& y) { return x + (-y); }

    friend PadicApprox operator*(const PadicApprox& x, const PadicApprox& y) {
        x.check(y);
        const PadicContext& c = *x.ctx_;
        if ((x.zero_ && !x.fuzzy_) || (y.zero_ && !y.fuzzy_)) return zero(c);
        if (x.zero_ && y.zero_) return fuzzy_zero(c, x.zknown_ + y.zknown_);
        if (x.zero_) return fuzzy_zero(c, x.zknown_ + y.v_);
        if (y.zero_) return fuzzy_zero(c, y.zknown_ + x.v_);
        PadicApprox out(c);
        out.zero_ = false;
        out.v_ = x.v_ + y.v_;
        out.u_ = mul_mod(x.u_, y.u_, c.modulus);
        out.lost_ = std::max(x.lost_, y.lost_);
        return out;
    }

    friend PadicApprox operator/(const PadicApprox& x, const PadicApprox& y) {
        x.check(y);
        const PadicContext& c = *x.ctx_;
        if (y.zero_) throw DivisionByZero("padic division by zero");
        if (x.zero_) {
            if (!x.fuzzy_) return zero(c);
            return fuzzy_zero(c, x.zknown_ - y.v_);
        }
        PadicApprox out(c);
        out.zero_ = false;
        out.v_ = x.v_ - y.v_;
        out.u_ = mul_mod(x.u_, inv_mod(static_cast<std::int64_t>(y.u_), c.modulus), c.modulus);
        out.lost_ = std::max(x.lost_, y.lost_);
        return out;
    }

    PadicApprox inverse() const { return from_integer(1, *ctx_) / *this; }

    PadicApprox pow(std::int64_t e) const {
        const PadicContext& c = *ctx_;
        if (e == 0) return from_integer(1, c);
        if (e < 0) return inverse().pow(-e);
        if (zero_) {
            if (!fuzzy_) return zero(c);
            return fuzzy_zero(c, zknown_ >= kExactZero / e ? kExactZero : zknown_ * e);
        }
        PadicApprox out(c);
        out.zero_ = false;
        out.v_ = v_ * e;
        out.u_ = pow_mod(u_, static_cast<std::uint64_t>(e), c.modulus);
        out.lost_ = lost_;
        return out;
    }

    // Largest j such that reduce(*this, j) is allowed.
    std::int64_t reducible_exponent() const {
        if (!zero_) return known_exponent();
        if (!fuzzy_) return kExactZero;
        return std::min<std::int64_t>(ctx_->k, zknown_);
    }

private:
    explicit PadicApprox(const PadicContext& ctx) : ctx_(&ctx) {}

    void check(const PadicApprox& o) const {
        if (ctx_ != o.ctx_ && (ctx_->p != o.ctx_->p || ctx_->modulus != o.ctx_->modulus))
            throw DomainMismatch("PadicApprox: mixed contexts");
    }

    std::uint64_t shifted_residue(std::int64_t base_v, std::uint64_t wmod) const {
        std::uint64_t r = u_ % wmod;
        for (std::int64_t i = base_v; i < v_ && r != 0; ++i) r = mul_mod(r, ctx_->p, wmod);
        return r;
    }

    // Same value, knowledge capped at p^N.
    PadicApprox degraded_to(std::int64_t N) const {
        const PadicContext& c = *ctx_;
        if (zero_) return fuzzy_ || N < kExactZero ? fuzzy_zero(c, std::min(zknown_, N)) : zero(c);
        if (N <= v_) return fuzzy_zero(c, N);  // value sits below the knowledge horizon
        std::int64_t m = std::min<std::int64_t>(c.digits(), N - v_);
        PadicApprox out = *this;
        out.lost_ = std::max<int>(lost_, static_cast<int>(c.digits() - m));
        return out;
    }

    const PadicContext* ctx_;
    bool zero_ = true;
    bool fuzzy_ = false;
    std::int64_t zknown_ = kExactZero;  // zeros: certified to vanish mod p^zknown
    std::int64_t v_ = 0;
    std::uint64_t u_ = 0;
    int lost_ = 0;
};

inline bool is_zero(const PadicApprox& x) { return x.is_zero(); }
inline PadicApprox scalar_like(const PadicApprox& like, std::uint64_t v) {
    return PadicApprox::from_residue(v, like.ctx());
}
inline PadicApprox one_like(const PadicApprox& like) { return PadicApprox::from_integer(1, like.ctx()); }
inline PadicApprox inverse_of_int(const PadicApprox& like, std::int64_t n) {
    return PadicApprox::from_integer(n, like.ctx()).inverse();
}

// (u * p^v) mod p^j. Requires a nonnegative valuation and enough certified
// digits; a fuzzy zero reduces only within its certified range, capped at k.
inline std::uint64_t reduce(const PadicApprox& x, int j) {
    const PadicContext& c = x.ctx();
    if (j < 0 || j > c.digits()) throw ArithError("reduce: bad exponent");
    if (x.is_zero()) {
        if (j > x.reducible_exponent()) throw PrecisionExhausted("reduce: fuzzy zero");
        return 0;
    }
    if (x.valuation() < 0) throw NegativeValuation("reduce: negative valuation");
    if (x.valuation() >= j) return 0;
    if (j > x.known_exponent()) throw PrecisionExhausted("reduce: not enough guard digits");
    std::uint64_t m = pow_u64_checked(c.p, j);
    std::uint64_t r = x.unit() % m;
    for (std::int64_t i = 0; i < x.valuation(); ++i) r = mul_mod(r, c.p, m);
    return r;
}

inline PadicApprox padic_of_rational(const Rat& q, const PadicContext& ctx) {
    if (q == 0) return PadicApprox::zero(ctx);
    BigInt num = q.get_num(), den = q.get_den();
    long vn = vp(num, ctx.p), vd = vp(den, ctx.p);
    BigInt pp(static_cast<unsigned long>(ctx.p));
    BigInt rest;
    mpz_remove(rest.get_mpz_t(), num.get_mpz_t(), pp.get_mpz_t());
    std::uint64_t un = mod_u64(rest, ctx.modulus);
    mpz_remove(rest.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
    std::uint64_t ud = mod_u64(rest, ctx.modulus);
    std::uint64_t u = mul_mod(un, inv_mod(static_cast<std::int64_t>(ud), ctx.modulus), ctx.modulus);
    return PadicApprox::from_unit(u, vn - vd, ctx);
}

// q_p(a) = (a^(p-1) - 1)/p, exact modulo p^(k+g); throws when p | a.
inline PadicApprox fermat_quotient(std::int64_t a, const PadicContext& ctx) {
    if (reduce_signed(a, ctx.p) == 0) throw NotInvertible("fermat_quotient: p | a");
    BigInt m = BigInt(static_cast<unsigned long>(ctx.modulus)) * static_cast<unsigned long>(ctx.p);
    BigInt base(static_cast<long>(a));
    base %= m;
    if (base < 0) base += m;
    BigInt t;
    mpz_powm_ui(t.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(ctx.p - 1), m.get_mpz_t());
    t -= 1;
    if (t < 0) t += m;
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(ctx.p));
    return PadicApprox::from_residue(mod_u64(t, ctx.modulus), ctx);
}

}  // namespace finlog

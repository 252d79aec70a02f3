#include "finlog/special.hpp"

#include <algorithm>

#include "finlog/modring.hpp"

namespace finlog {

namespace {

// Binomials C(n, k) mod p for one fixed n, k = 0..n, via the ratio recurrence.
// All factors stay below p when n < p.
std::vector<std::uint64_t> binom_row_mod(int n, std::uint64_t p) {
    std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    for (int k = 0; k < n; ++k)
        row[k + 1] = mul_mod(mul_mod(row[k], static_cast<std::uint64_t>(n - k) % p, p),
                             inv_mod(k + 1, p), p);
    return row;
}

}  // namespace

SpecialTable::SpecialTable(std::uint64_t p) : p_(p) {
    if (p < 5) throw ArithError("SpecialTable: p >= 5 required");
    int top = static_cast<int>(p) - 3;
    // Bernoulli: sum_{j=0}^{m} C(m+1, j) B_j = 0, denominators coprime to p for m <= p-3.
    bern_.assign(top + 1, 0);
    bern_[0] = 1;
    for (int m = 1; m <= top; ++m) {
        std::vector<std::uint64_t> r = binom_row_mod(m + 1, p_);
        std::uint64_t s = 0;
        for (int j = 0; j < m; ++j)
            if (bern_[j]) s = add_mod(s, mul_mod(r[j], bern_[j], p_), p_);
        bern_[m] = mul_mod(sub_mod(0, s, p_), inv_mod(m + 1, p_), p_);
    }
    // Euler: E_0 = 1, sum_{j=0}^{n/2} C(n, 2j) E_2j = 0 for even n >= 2.
    euler_.assign(top + 1, 0);
    euler_[0] = 1;
    for (int n = 2; n <= top; n += 2) {
        std::vector<std::uint64_t> r = binom_row_mod(n, p_);
        std::uint64_t s = 0;
        for (int j = 0; j < n; j += 2)
            if (euler_[j]) s = add_mod(s, mul_mod(r[j], euler_[j], p_), p_);
        euler_[n] = (p_ - s % p_) % p_;
    }
}

std::uint64_t SpecialTable::bernoulli(int m) const {
    if (m < 0) throw IndexOutOfRange("bernoulli: negative index");
    if (m == 0) return 1;
    if (m == 1) return p_ - inv_mod(2, p_);  // -1/2
    if (m % 2 == 1) return 0;
    if (m > static_cast<int>(p_) - 3) throw IndexOutOfRange("bernoulli: index beyond p-3");
    return bern_[m];
}

std::uint64_t SpecialTable::euler(int n) const {
    if (n < 0 || n % 2 == 1) throw IndexOutOfRange("euler: even index required");
    if (n > static_cast<int>(p_) - 3) throw IndexOutOfRange("euler: index beyond p-3");
    return euler_[n];
}

std::uint64_t SpecialTable::bernoulli_poly(int n, const Rat& x) const {
    if (n > static_cast<int>(p_) - 2) throw IndexOutOfRange("bernoulli_poly: index beyond p-2");
    if (mod_u64(BigInt(x.get_den()), p_) == 0) throw NotInvertible("bernoulli_poly: p divides denominator");
    std::uint64_t xm = rat_mod(x, p_);
    std::vector<std::uint64_t> row = binom_row_mod(n, p_);
    std::uint64_t s = 0;
    std::uint64_t xpow = 1;  // x^(n-k), built from k = n downwards
    for (int k = n; k >= 0; --k) {
        std::uint64_t bk = (k == n && n % 2 == 1 && n > 1) ? 0 : bernoulli(k);
        if (bk) s = add_mod(s, mul_mod(mul_mod(row[k], bk, p_), xpow, p_), p_);
        xpow = mul_mod(xpow, xm, p_);
    }
    return s;
}

std::uint64_t SpecialTable::bernoulli_poly_diff(int n, const Rat& x, const Rat& y) const {
    if (n > static_cast<int>(p_) - 1) throw IndexOutOfRange("bernoulli_poly_diff: index beyond p-1");
    std::uint64_t xm = rat_mod(x, p_), ym = rat_mod(y, p_);
    std::vector<std::uint64_t> row = binom_row_mod(n, p_);
    std::uint64_t s = 0;
    for (int k = 0; k < n; ++k) {  // the k = n constant term cancels
        std::uint64_t bk = (k % 2 == 1 && k > 1) ? 0 : bernoulli(k);
        if (bk) {
            std::uint64_t d = sub_mod(pow_mod(xm, n - k, p_), pow_mod(ym, n - k, p_), p_);
            s = add_mod(s, mul_mod(mul_mod(row[k], bk, p_), d, p_), p_);
        }
    }
    return s;
}

std::uint64_t bernoulli_mod(int m, std::uint64_t p) { return SpecialTable(p).bernoulli(m); }

std::uint64_t euler_mod(int n, std::uint64_t p) { return SpecialTable(p).euler(n); }

std::uint64_t bernoulli_poly_mod(int n, const Rat& x, std::uint64_t p) {
    return SpecialTable(p).bernoulli_poly(n, x);
}

PadicApprox harmonic(long n, int d, const PadicContext& ctx) {
    PadicApprox acc = PadicApprox::zero(ctx);
    for (long r = 1; r <= n; ++r)
        acc = acc + PadicApprox::from_integer(r, ctx).pow(d).inverse();
    return acc;
}

PadicApprox mhs(const std::vector<int>& pattern, long upper, const PadicContext& ctx) {
    if (pattern.empty()) throw ArithError("mhs: empty pattern");
    int d = static_cast<int>(pattern.size());
    std::vector<PadicApprox> e(d + 1, PadicApprox::zero(ctx));
    e[0] = PadicApprox::from_integer(1, ctx);
    for (long j = 1; j <= upper; ++j) {
        PadicApprox jp = PadicApprox::from_integer(j, ctx);
        for (int r = std::min<long>(d, j); r >= 1; --r)
            e[r] = e[r] + e[r - 1] / jp.pow(pattern[r - 1]);
    }
    return e[d];
}

std::pair<std::uint64_t, std::uint64_t> fib_lucas(std::uint64_t n, std::uint64_t m) {
    // fast doubling on (F_n, F_{n+1}); L_n = 2F_{n+1} - F_n
    std::uint64_t a = 0, b = 1 % m;
    for (int bit = 63; bit >= 0; --bit) {
        std::uint64_t c = mul_mod(a, sub_mod(mul_mod(2, b, m), a, m), m);  // F_{2k}
        std::uint64_t d = add_mod(mul_mod(a, a, m), mul_mod(b, b, m), m);  // F_{2k+1}
        a = c;
        b = d;
        if ((n >> bit) & 1) {
            std::uint64_t t = add_mod(a, b, m);
            a = b;
            b = t;
        }
    }
    std::uint64_t lucas = sub_mod(mul_mod(2, b, m), a, m);
    return {a, lucas};
}

PadicApprox lucas_quotient(const PadicContext& ctx) {
    std::uint64_t m = pow_u64_checked(ctx.p, ctx.digits() + 1);
    std::uint64_t lp = fib_lucas(ctx.p, m).second;
    std::uint64_t t = sub_mod(lp, 1 % m, m);
    if (t % ctx.p != 0) throw ArithError("lucas_quotient: p does not divide L_p - 1");
    return PadicApprox::from_residue((t / ctx.p) % ctx.modulus, ctx);
}

}  // namespace finlog

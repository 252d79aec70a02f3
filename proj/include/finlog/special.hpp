#pragma once

#include <cstdint>
#include <vector>

#include "finlog/padic.hpp"
#include "finlog/rational.hpp"

namespace finlog {

// Per-prime caches of Bernoulli and Euler numbers modulo p. Read-only after
// construction; independent instances per prime.
class SpecialTable {
public:
    explicit SpecialTable(std::uint64_t p);

    std::uint64_t p() const { return p_; }

    // B_m mod p; odd m > 1 give 0, B_1 = -1/2. Throws IndexOutOfRange for
    // even m > p-3 (von Staudt pole risk).
    std::uint64_t bernoulli(int m) const;

    // E_n mod p for even n <= p-3.
    std::uint64_t euler(int n) const;

    // B_n(x) mod p for n <= p-2 and x with denominator coprime to p.
    std::uint64_t bernoulli_poly(int n, const Rat& x) const;

    // (B_n(x) - B_n(y)) mod p for n <= p-1; the constant B_n cancels, so the
    // index may exceed the single-value range by one.
    std::uint64_t bernoulli_poly_diff(int n, const Rat& x, const Rat& y) const;

private:
    std::uint64_t p_;
    std::vector<std::uint64_t> bern_;   // index m, even m <= p-3
    std::vector<std::uint64_t> euler_;  // index n, even n <= p-3
};

// Convenience single-shot versions (recompute the table each call).
std::uint64_t bernoulli_mod(int m, std::uint64_t p);
std::uint64_t euler_mod(int n, std::uint64_t p);
std::uint64_t bernoulli_poly_mod(int n, const Rat& x, std::uint64_t p);

// H_n(d) = sum_{r=1}^{n} r^(-d); terms divisible by p get negative valuation.
PadicApprox harmonic(long n, int d, const PadicContext& ctx);

// Multiple harmonic sum over 0 < k_1 < ... < k_d <= upper with exponent
// pattern (e_1, ..., e_d), by forward prefix accumulation.
PadicApprox mhs(const std::vector<int>& pattern, long upper, const PadicContext& ctx);

// Weighted all-ones variant: sum over 0 < k_1 < ... < k_d <= upper of
// x^(k_d) / (k_1 ... k_d). The prefix sums stay scalar; only the outer
// accumulation lives in the ring of x.
template <class R>
R mhs_weighted(int d, long upper, const R& x, const PadicContext& ctx) {
    if (d < 1) throw ArithError("mhs_weighted: d >= 1");
    std::uint64_t M = ctx.modulus;
    std::vector<std::uint64_t> inv = coprime_inverses_upto(static_cast<std::uint64_t>(upper) + 1, M);
    std::vector<std::uint64_t> e(d, 0);  // e[r-1] = sum over 0<k_1<...<k_r<j
    R acc = x - x;
    R xpow = one_like(x);
    for (long j = 1; j <= upper; ++j) {
        xpow = xpow * x;
        std::uint64_t w = d == 1 ? inv[j] : mul_mod(e[d - 2], inv[j], M);
        acc = acc + xpow * scalar_like(x, w);
        for (int r = std::min<long>(d - 1, j); r >= 1; --r) {
            std::uint64_t add = (r == 1) ? inv[j] : mul_mod(e[r - 2], inv[j], M);
            e[r - 1] = add_mod(e[r - 1], add, M);
        }
    }
    return acc;
}

// Fibonacci and Lucas numbers mod `modulus` by fast doubling.
std::pair<std::uint64_t, std::uint64_t> fib_lucas(std::uint64_t n, std::uint64_t modulus);

// (L_p - 1)/p, exact modulo p^(k+g).
PadicApprox lucas_quotient(const PadicContext& ctx);

}  // namespace finlog

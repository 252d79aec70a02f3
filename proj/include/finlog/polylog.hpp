#pragma once

#include <cstdint>

#include "finlog/modring.hpp"
#include "finlog/poly.hpp"

namespace finlog {

// L_d(x) = sum_{k=1}^{p-1} x^k / k^d with inverses modulo `modulus`
// (a power of p); O(p) ring operations.
template <class R>
R finite_polylog(int d, const R& x, std::uint64_t p, std::uint64_t modulus) {
    if (d < 1) throw ArithError("finite_polylog: d >= 1 required");
    std::vector<std::uint64_t> inv = coprime_inverses_upto(p, modulus);
    R acc = x - x;
    R xpow = one_like(x);
    for (std::uint64_t k = 1; k < p; ++k) {
        xpow = xpow * x;
        std::uint64_t w = inv[k];
        for (int i = 1; i < d; ++i) w = mul_mod(w, inv[k], modulus);
        acc = acc + xpow * scalar_like(x, w);
    }
    return acc;
}

// L_d as a polynomial: coefficient of x^k is inv(k)^d, constant term 0.
DensePoly<Mod> polylog_poly(int d, std::uint64_t p, std::uint64_t modulus);

// Q_p(x) = (x^p + (1-x)^p - 1)/p; integer coefficients computed from exact
// big-integer binomials, then reduced. Degree <= p-1.
DensePoly<Mod> qp_poly(std::uint64_t p, std::uint64_t modulus);

}  // namespace finlog

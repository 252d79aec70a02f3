#include "finlog/polylog.hpp"

#include "finlog/rational.hpp"

namespace finlog {

DensePoly<Mod> polylog_poly(int d, std::uint64_t p, std::uint64_t modulus) {
    if (d < 1) throw ArithError("polylog_poly: d >= 1 required");
    std::vector<std::uint64_t> inv = coprime_inverses_upto(p, modulus);
    std::vector<Mod> c;
    c.reserve(p);
    c.emplace_back(0, modulus);
    for (std::uint64_t k = 1; k < p; ++k) {
        std::uint64_t w = inv[k];
        for (int i = 1; i < d; ++i) w = mul_mod(w, inv[k], modulus);
        c.emplace_back(w, modulus);
    }
    return DensePoly<Mod>(std::move(c));
}

DensePoly<Mod> qp_poly(std::uint64_t p, std::uint64_t modulus) {
    // coefficient of x^j for 0 < j < p is (-1)^j C(p, j)/p; ends cancel
    std::vector<Mod> c(p, Mod(0, modulus));
    BigInt binom(1);  // C(p, j), stepped by ratio
    for (std::uint64_t j = 1; j < p; ++j) {
        binom *= static_cast<unsigned long>(p - j + 1);
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(j));
        BigInt q = binom / static_cast<unsigned long>(p);  // exact for 0 < j < p
        std::uint64_t r = mod_u64(q, modulus);
        c[j] = (j % 2 == 0) ? Mod(r, modulus) : -Mod(r, modulus);
    }
    return DensePoly<Mod>(std::move(c));
}

}  // namespace finlog

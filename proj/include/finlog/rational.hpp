#pragma once

#include <gmpxx.h>

#include <cstdint>

#include "finlog/errors.hpp"

namespace finlog {

using BigInt = mpz_class;
using Rat = mpq_class;  // canonical: gcd(num, den) = 1, den > 0

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline long vp(const BigInt& n, std::uint64_t p) {
    if (n == 0) throw ArithError("vp(0) undefined");
    BigInt rest;
    BigInt pp(static_cast<unsigned long>(p));
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
}

inline long vp(const Rat& q, std::uint64_t p) {
    return vp(BigInt(q.get_num()), p) - vp(BigInt(q.get_den()), p);
}

inline std::uint64_t mod_u64(const BigInt& n, std::uint64_t m) {
    BigInt r = n % BigInt(static_cast<unsigned long>(m));
    if (r < 0) r += BigInt(static_cast<unsigned long>(m));
    return r.get_ui();
}

// q mod m for q with denominator coprime to m.
inline std::uint64_t rat_mod(const Rat& q, std::uint64_t m);

inline bool is_zero(const Rat& q) { return q == 0; }
inline Rat scalar_like(const Rat&, std::uint64_t v) { return Rat(static_cast<unsigned long>(v)); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat inverse_of_int(const Rat&, std::int64_t n) { return Rat(1, static_cast<long>(n)); }

inline Rat frac_part(const Rat& x) {
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return x - Rat(fl);
}

namespace detail {
inline std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t m) {
    std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(a % m);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1) throw NotInvertible("rat_mod: denominator shares a factor with the modulus");
    std::int64_t t = t0 % static_cast<std::int64_t>(m);
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}
}  // namespace detail

inline std::uint64_t rat_mod(const Rat& q, std::uint64_t m) {
    std::uint64_t num = mod_u64(BigInt(q.get_num()), m);
    std::uint64_t den = mod_u64(BigInt(q.get_den()), m);
    std::uint64_t inv = detail::inv_mod_u64(den, m);
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(num) * inv % m);
}

}  // namespace finlog

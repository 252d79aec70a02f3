#pragma once

#include <cstdint>
#include <vector>

#include "finlog/errors.hpp"

namespace finlog {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t s = a + b;  // m < 2^63, no wrap
    return s >= m ? s - m : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + m - b;
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t reduce_signed(std::int64_t x, std::uint64_t m) {
    std::int64_t r = x % static_cast<std::int64_t>(m);
    if (r < 0) r += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(r);
}

// r in [1, m) with a*r = 1 (mod m); throws NotInvertible when gcd(a, m) > 1.
inline std::uint64_t inv_mod(std::int64_t a, std::uint64_t m) {
    if (m < 2) throw NotInvertible("inv_mod: modulus < 2");
    std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(reduce_signed(a, m));
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1) throw NotInvertible("inv_mod: gcd(a, m) > 1");
    return reduce_signed(t0, m);
}

// Euler criterion; p an odd prime.
inline int legendre(std::int64_t a, std::uint64_t p) {
    std::uint64_t r = pow_mod(reduce_signed(a, p), (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

// base^exp as a plain integer; throws on 64-bit overflow.
inline std::uint64_t pow_u64_checked(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        unsigned __int128 t = static_cast<unsigned __int128>(r) * base;
        if (t > UINT64_MAX) throw ArithError("modulus overflows 64 bits");
        r = static_cast<std::uint64_t>(t);
    }
    return r;
}

// inv[k] mod m for 1 <= k < n, all k required coprime to m.
// Prefix products plus one extended-Euclid inversion.
inline std::vector<std::uint64_t> coprime_inverses_upto(std::uint64_t n, std::uint64_t m) {
    std::vector<std::uint64_t> pref(n, 1 % m);
    for (std::uint64_t k = 1; k < n; ++k) pref[k] = mul_mod(pref[k - 1], k % m, m);
    std::uint64_t inv_all = inv_mod(static_cast<std::int64_t>(pref[n - 1]), m);
    std::vector<std::uint64_t> inv(n, 0);
    for (std::uint64_t k = n - 1; k >= 1; --k) {
        inv[k] = mul_mod(inv_all, pref[k - 1], m);
        inv_all = mul_mod(inv_all, k % m, m);
    }
    return inv;
}

// Residue with a runtime modulus; moduli must match across binary ops.
class Mod {
public:
    Mod(std::uint64_t v, std::uint64_t m) : v_(v % m), m_(m) {}

    static Mod of(std::int64_t x, std::uint64_t m) { return Mod(reduce_signed(x, m), m); }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return m_; }
    bool is_zero() const { return v_ == 0; }

    Mod operator-() const { return Mod(v_ == 0 ? 0 : m_ - v_, m_); }

    Mod& operator+=(const Mod& o) {
        check(o);
        v_ = add_mod(v_, o.v_, m_);
        return *this;
    }
    Mod& operator-=(const Mod& o) {
        check(o);
        v_ = sub_mod(v_, o.v_, m_);
        return *this;
    }
    Mod& operator*=(const Mod& o) {
        check(o);
        v_ = mul_mod(v_, o.v_, m_);
        return *this;
    }

    Mod inv() const { return Mod(inv_mod(static_cast<std::int64_t>(v_), m_), m_); }
    Mod pow(std::uint64_t e) const { return Mod(pow_mod(v_, e, m_), m_); }

    friend Mod operator+(Mod a, const Mod& b) { return a += b; }
    friend Mod operator-(Mod a, const Mod& b) { return a -= b; }
    friend Mod operator*(Mod a, const Mod& b) { return a *= b; }
    friend Mod operator/(const Mod& a, const Mod& b) { return a * b.inv(); }
    friend bool operator==(const Mod& a, const Mod& b) { return a.v_ == b.v_ && a.m_ == b.m_; }
    friend bool operator!=(const Mod& a, const Mod& b) { return !(a == b); }

private:
    void check(const Mod& o) const {
        if (m_ != o.m_) throw DomainMismatch("Mod: mixed moduli");
    }

    std::uint64_t v_;
    std::uint64_t m_;
};

inline bool is_zero(const Mod& x) { return x.is_zero(); }
inline Mod scalar_like(const Mod& like, std::uint64_t v) { return Mod(v, like.modulus()); }
inline Mod one_like(const Mod& like) { return Mod(1, like.modulus()); }
inline Mod inverse_of_int(const Mod& like, std::int64_t n) {
    return Mod(inv_mod(n, like.modulus()), like.modulus());
}

}  // namespace finlog

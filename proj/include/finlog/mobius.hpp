#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "finlog/modring.hpp"
#include "finlog/poly.hpp"

namespace finlog {

// The order-six group generated by R: z -> 1/z and S: z -> 1 - z,
// isomorphic to the symmetric group on {0, 1, infinity}.
enum class MobiusElement { One, R, S, RS, SR, RSR };

inline constexpr std::array<MobiusElement, 6> kGroupG = {
    MobiusElement::One, MobiusElement::R,  MobiusElement::S,
    MobiusElement::RS,  MobiusElement::SR, MobiusElement::RSR,
};

// Generator word, applied right to left (innermost first).
inline const char* mobius_word(MobiusElement t) {
    switch (t) {
        case MobiusElement::One: return "";
        case MobiusElement::R: return "R";
        case MobiusElement::S: return "S";
        case MobiusElement::RS: return "RS";
        case MobiusElement::SR: return "SR";
        case MobiusElement::RSR: return "RSR";
    }
    return "";
}

MobiusElement mobius_compose(MobiusElement a, MobiusElement b);  // a after b

// Point of the projective line over F_p.
struct ProjPoint {
    bool inf;
    std::uint64_t z;  // meaningful when !inf

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.inf == b.inf && (a.inf || a.z == b.z);
    }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
        if (a.inf != b.inf) return b.inf;
        return a.z < b.z;
    }
};

inline ProjPoint proj_infinity() { return {true, 0}; }
inline ProjPoint proj(std::uint64_t z) { return {false, z}; }

ProjPoint mobius_apply(MobiusElement t, ProjPoint pt, std::uint64_t p);

// Closure of {z} under the six point maps; size 2, 3 or 6.
std::vector<ProjPoint> orbit(ProjPoint z, std::uint64_t p);

// Action on polynomials with formal degree m:
//   (Rf)(x) = (-x)^m f(1/x),  (Sf)(x) = f(1 - x);
// composite elements act by composing the generators, innermost first.
template <class R>
DensePoly<R> act(MobiusElement t, const DensePoly<R>& f, int m) {
    if (m < f.deg()) throw ArithError("act: formal degree below actual degree");
    DensePoly<R> g = f;
    const char* w = mobius_word(t);
    // apply letters right to left
    for (int i = static_cast<int>(std::char_traits<char>::length(w)) - 1; i >= 0; --i) {
        if (w[i] == 'R') {
            g = reversed(g, m);
            if (m % 2 == 1) g = -g;
        } else {
            g = compose_one_minus_x(g);
        }
        g.set_formal_degree(m);
    }
    g.set_formal_degree(m);
    return g;
}

// (1/6) sum_{T in G} Tf; idempotent projection onto G-invariants.
// Needs 6 invertible in the coefficient ring.
template <class R>
DensePoly<R> project_invariant(const DensePoly<R>& f, int m) {
    DensePoly<R> acc = DensePoly<R>::zero_like(f.zero_coeff());
    for (MobiusElement t : kGroupG) acc = acc + act(t, f, m);
    DensePoly<R> out = scale(acc, inverse_of_int(f.zero_coeff(), 6));
    out.set_formal_degree(m);
    return out;
}

// For f with deg f < p and f(x) = -x^p f(1/x):
//   g(x) = x^p f(x) + (1 - x^p) f(1-x) + x^(2p) (1 - x^p) f(1 - 1/x)
// is G-invariant of formal degree 3p and agrees with f(1-x) through x^p.
template <class R>
DensePoly<R> build_3p_invariant(const DensePoly<R>& f, std::uint64_t p) {
    int ip = static_cast<int>(p);
    if (f.deg() >= ip) throw ArithError("build_3p_invariant: deg f >= p");
    DensePoly<R> anti = f + reversed(f, ip);
    if (!anti.is_zero_poly()) throw ArithError("build_3p_invariant: f(x) != -x^p f(1/x)");
    R one = one_like(f.zero_coeff());
    DensePoly<R> one_minus_xp = DensePoly<R>(one) - DensePoly<R>::monomial(one, ip);
    DensePoly<R> g = shift_up(f, ip);                                       // x^p f(x)
    g = g + one_minus_xp * compose_one_minus_x(f);                          // (1-x^p) f(1-x)
    g = g + shift_up(one_minus_xp * reversed_one_minus(f, ip), ip);         // x^2p (1-x^p) f(1-1/x)
    g.set_formal_degree(3 * ip);
    return g;
}

}  // namespace finlog

#pragma once

#include <cstdint>

#include "finlog/modring.hpp"
#include "finlog/poly.hpp"
#include "finlog/rational.hpp"

namespace finlog {

enum class LucasKind { U, V };

// u_0 = 0, u_1 = 1, v_0 = 2, v_1 = x, w_n = x w_{n-1} - y w_{n-2}.
// All evaluation goes through the recurrence; no closed forms.
template <class R>
R lucas_eval(LucasKind kind, long n, const R& x, const R& y) {
    R zero = x - x;
    R one = one_like(x);
    R prev = kind == LucasKind::U ? zero : one + one;  // w_0
    if (n == 0) return prev;
    R cur = kind == LucasKind::U ? one : x;  // w_1
    for (long i = 2; i <= n; ++i) {
        R next = x * cur - y * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

template <class R>
R lucas_eval(LucasKind kind, long n, const R& x) {
    return lucas_eval(kind, n, x, one_like(x));
}

// sum_{k=1}^{n} weight(k) * w_k(x, y) in one recurrence pass.
template <class R, class WeightFn>
R lucas_weighted_sum(LucasKind kind, long n, const R& x, const R& y, WeightFn weight) {
    R zero = x - x;
    R one = one_like(x);
    R prev = kind == LucasKind::U ? zero : one + one;
    R cur = kind == LucasKind::U ? one : x;
    R acc = zero;
    for (long k = 1; k <= n; ++k) {
        acc = acc + cur * weight(k);
        R next = x * cur - y * prev;
        prev = cur;
        cur = next;
    }
    return acc;
}

inline DensePoly<Rat> lucas_poly(LucasKind kind, long n) {
    DensePoly<Rat> x = DensePoly<Rat>::monomial(Rat(1), 1);
    return lucas_eval(kind, n, x, DensePoly<Rat>(Rat(1)));
}

inline DensePoly<Rat> u_poly(long n) { return lucas_poly(LucasKind::U, n); }
inline DensePoly<Rat> v_poly(long n) { return lucas_poly(LucasKind::V, n); }

}  // namespace finlog

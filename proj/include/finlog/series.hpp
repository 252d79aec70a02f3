#pragma once

#include "finlog/poly.hpp"
#include "finlog/rational.hpp"

namespace finlog {

// log(1 + x) through x^N, exact rational coefficients.
inline DensePoly<Rat> log_series(int N) {
    std::vector<Rat> c(static_cast<std::size_t>(N) + 1, Rat(0));
    for (int k = 1; k <= N; ++k) c[k] = Rat(k % 2 == 1 ? 1 : -1, k);
    return DensePoly<Rat>(std::move(c));
}

// log^d(1 + x) / d! through x^N, by repeated truncated multiplication.
inline DensePoly<Rat> series_pow_log(int d, int N) {
    if (d < 1) throw ArithError("series_pow_log: d >= 1 required");
    DensePoly<Rat> l = log_series(N);
    DensePoly<Rat> acc(Rat(1));
    Rat fact(1);
    for (int i = 1; i <= d; ++i) {
        acc = truncate(acc * l, N);
        fact *= i;
    }
    return scale(acc, Rat(1) / fact);
}

// binom(y, k) = y(y-1)...(y-k+1)/k! as a polynomial in y.
inline DensePoly<Rat> falling_binomial_poly(int k) {
    DensePoly<Rat> acc(Rat(1));
    for (int i = 0; i < k; ++i) acc = acc * DensePoly<Rat>(std::vector<Rat>{Rat(-i), Rat(1)});
    Rat fact(1);
    for (int i = 2; i <= k; ++i) fact *= i;
    return scale(acc, Rat(1) / fact);
}

}  // namespace finlog

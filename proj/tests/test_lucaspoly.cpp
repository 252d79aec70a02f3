#include <doctest.h>

#include <random>

#include "finlog/lucaspoly.hpp"
#include "finlog/polylog.hpp"
#include "finlog/primes.hpp"
#include "finlog/quad.hpp"
#include "finlog/special.hpp"

using namespace finlog;

namespace {
DensePoly<Rat> rp(std::vector<long> v) {
    std::vector<Rat> c;
    for (long x : v) c.emplace_back(x);
    return DensePoly<Rat>(std::move(c));
}
}  // namespace

TEST_CASE("small lucas polynomials") {
    CHECK(u_poly(0) == rp({0}));
    CHECK(u_poly(3) == rp({-1, 0, 1}));
    CHECK(v_poly(4) == rp({2, 0, -4, 0, 1}));
}

TEST_CASE("evaluated sequences") {
    // two-parameter v_3(t, t) = t^3 - 3t^2
    DensePoly<Rat> t = DensePoly<Rat>::monomial(Rat(1), 1);
    CHECK(lucas_eval(LucasKind::V, 3, t, t) == rp({0, 0, -3, 1}));
    CHECK(lucas_eval(LucasKind::U, 4, Rat(-2)) == Rat(-4));
    CHECK(lucas_eval(LucasKind::U, 1, Rat(123)) == Rat(1));
}

TEST_CASE("wronskian") {
    DensePoly<Rat> four(Rat(4));
    DensePoly<Rat> xsq_m4 = rp({-4, 0, 1});
    for (int n = 0; n <= 40; ++n) {
        DensePoly<Rat> u = u_poly(n), v = v_poly(n);
        CHECK(v * v - xsq_m4 * u * u == four);
    }
}

TEST_CASE("parity") {
    for (int n = 0; n <= 40; ++n) {
        DensePoly<Rat> up1 = u_poly(n + 1), v = v_poly(n);
        for (int i = 0; i <= up1.deg(); ++i)
            if (i % 2 != n % 2) CHECK(up1.coeff_or_zero(i) == 0);
        for (int i = 0; i <= v.deg(); ++i)
            if (i % 2 != n % 2) CHECK(v.coeff_or_zero(i) == 0);
    }
}

TEST_CASE("derivative of v is n times u") {
    for (int n = 1; n <= 40; ++n) CHECK(derivative(v_poly(n)) == scale(u_poly(n), Rat(n)));
}

TEST_CASE("index-p sequences reduce to powers") {
    // v_p(x) == x^p and u_p(x) == (x^2-4)^((p-1)/2)  (mod p)
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
        DensePoly<Mod> x = DensePoly<Mod>::monomial(Mod(1, p), 1);
        DensePoly<Mod> one(Mod(1, p));
        DensePoly<Mod> vp = lucas_eval(LucasKind::V, static_cast<long>(p), x, one);
        CHECK(vp == DensePoly<Mod>::monomial(Mod(1, p), static_cast<int>(p)));
        DensePoly<Mod> up = lucas_eval(LucasKind::U, static_cast<long>(p), x, one);
        DensePoly<Mod> base(std::vector<Mod>{Mod::of(-4, p), Mod(0, p), Mod(1, p)});
        DensePoly<Mod> pw = one;
        for (std::uint64_t i = 0; i < (p - 1) / 2; ++i) pw = pw * base;
        CHECK(up == pw);
    }
}

TEST_CASE("one-parameter equals two-parameter at y = 1") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::uint64_t> d(0, 10006);
    Mod one(1, 10007);
    for (int iter = 0; iter < 25; ++iter) {
        Mod x(d(rng), 10007);
        for (long n : {0L, 1L, 2L, 17L, 63L, 100L}) {
            CHECK(lucas_eval(LucasKind::U, n, x, one) == lucas_eval(LucasKind::U, n, x));
            CHECK(lucas_eval(LucasKind::V, n, x, one) == lucas_eval(LucasKind::V, n, x));
        }
    }
}

TEST_CASE("x = 3 gives even-index fibonacci and lucas numbers") {
    std::uint64_t M = 1000000007ull;
    for (long n = 0; n <= 30; ++n) {
        auto [f2n, l2n] = fib_lucas(2 * static_cast<std::uint64_t>(n), M);
        CHECK(lucas_eval(LucasKind::U, n, Mod(3, M)) == Mod(f2n, M));
        CHECK(lucas_eval(LucasKind::V, n, Mod(3, M)) == Mod(l2n, M));
    }
}

TEST_CASE("weighted sums against finite polylogarithms") {
    for (std::uint64_t p : {7ull, 11ull, 13ull}) {
        // sum u_k(-2)/k^2 = sum (-1)^{k-1}/k = -L1(-1) since u_k(-2) = (-1)^{k-1} k
        Mod x = Mod::of(-2, p);
        std::vector<std::uint64_t> inv = coprime_inverses_upto(p, p);
        Mod usum = lucas_weighted_sum(LucasKind::U, static_cast<long>(p) - 1, x, Mod(1, p),
                                      [&](long k) { return Mod(mul_mod(inv[k], inv[k], p), p); });
        Mod expect = -finite_polylog(1, Mod::of(-1, p), p, p);
        CHECK(usum == expect);

        // sum v_k(1)/k over the omega6 ring equals L1(w) + L1(w^-1)
        QuadElem<Mod> w = QuadElem<Mod>::alpha(Mod(1, p), Mod(1, p));
        QuadElem<Mod> xq = w.from_base(Mod(1, p));  // w + w^-1 = 1
        QuadElem<Mod> vsum =
            lucas_weighted_sum(LucasKind::V, static_cast<long>(p) - 1, xq, one_like(w),
                               [&](long k) { return scalar_like(w, inv[k]); });
        QuadElem<Mod> expect2 = finite_polylog(1, w, p, p) + finite_polylog(1, w.conj(), p, p);
        CHECK(vsum == expect2);
    }
}

TEST_CASE("empty weighted sum") {
    Mod x(4, 11);
    Mod s = lucas_weighted_sum(LucasKind::V, 0, x, Mod(1, 11), [&](long) { return Mod(1, 11); });
    CHECK(s.is_zero());
}

#include <doctest.h>

#include "finlog/polylog.hpp"
#include "finlog/primes.hpp"
#include "finlog/special.hpp"

using namespace finlog;

TEST_CASE("polylog polynomial coefficients") {
    DensePoly<Mod> f = polylog_poly(1, 3, 3);
    CHECK(f[0] == Mod(0, 3));
    CHECK(f[1] == Mod(1, 3));
    CHECK(f[2] == Mod(2, 3));

    DensePoly<Mod> g = polylog_poly(2, 3, 3);
    CHECK(g[1] == Mod(1, 3));
    CHECK(g[2] == Mod(1, 3));

    for (std::uint64_t p : {5ull, 13ull, 61ull}) {
        for (int d = 1; d <= 4; ++d) {
            DensePoly<Mod> h = polylog_poly(d, p, p);
            CHECK(h[0].is_zero());
            CHECK(h.deg() == static_cast<int>(p) - 1);
            // leading coefficient inv(p-1)^d = (-1)^d
            CHECK(h[h.deg()] == (d % 2 == 0 ? Mod(1, p) : Mod::of(-1, p)));
        }
    }
}

TEST_CASE("evaluated polylogarithms") {
    // L1(1) at p=5 vanishes mod 25 (H_4 = 25/12)
    CHECK(finite_polylog(1, Mod(1, 25), 5, 25).is_zero());
    // L2(1) at p=7 vanishes mod 7
    CHECK(finite_polylog(2, Mod(1, 7), 7, 7).is_zero());
    // L_d(0) = 0
    CHECK(finite_polylog(3, Mod(0, 49), 7, 49).is_zero());
}

TEST_CASE("quotient polynomial") {
    DensePoly<Mod> q3 = qp_poly(3, 3);
    CHECK(q3[0] == Mod(0, 3));
    CHECK(q3[1] == Mod(2, 3));
    CHECK(q3[2] == Mod(1, 3));

    DensePoly<Mod> q5 = qp_poly(5, 5);
    CHECK(q5[1] == Mod(4, 5));
    CHECK(q5[0] == Mod(0, 5));
    CHECK(q5.deg() <= 4);

    for (std::uint64_t p : primes_in(3, 61)) CHECK(qp_poly(p, p)[0].is_zero());
}

TEST_CASE("quotient polynomial equals minus the degree-one polylog") {
    for (std::uint64_t p : primes_in(3, 199)) CHECK(qp_poly(p, p) == -polylog_poly(1, p, p));
}

TEST_CASE("quotient polynomial evaluates to combined fermat quotients") {
    // Q_p(a) = a q_p(a) + (1-a) q_p(1-a) as integers, checked mod p^2
    for (std::uint64_t p : {5ull, 7ull, 13ull, 31ull}) {
        PadicContext ctx(p, 2, 2);
        std::uint64_t M = p * p;
        DensePoly<Mod> q = qp_poly(p, M);
        for (std::int64_t a = 2; a < static_cast<std::int64_t>(p); ++a) {
            if ((1 - a) % static_cast<std::int64_t>(p) == 0) continue;
            Mod lhs = evaluate(q, Mod::of(a, M));
            Mod rhs = Mod::of(a, M) * Mod(reduce(fermat_quotient(a, ctx), 2), M) +
                      Mod::of(1 - a, M) * Mod(reduce(fermat_quotient(1 - a, ctx), 2), M);
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("value at one matches the harmonic sum at full precision") {
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull, 31ull}) {
        for (int d = 1; d <= 3; ++d) {
            PadicContext ctx(p, 2, 2);
            Mod direct = finite_polylog(d, Mod(1, ctx.modulus), p, ctx.modulus);
            PadicApprox h = harmonic(static_cast<long>(p) - 1, d, ctx);
            CHECK(direct.value() == reduce(h, ctx.digits()));
        }
    }
}

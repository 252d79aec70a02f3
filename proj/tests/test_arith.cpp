#include <doctest.h>

#include "finlog/padic.hpp"
#include "finlog/primes.hpp"
#include "oracle_util.hpp"

using namespace finlog;

TEST_CASE("inv_mod") {
    CHECK(inv_mod(3, 25) == 17);
    CHECK(inv_mod(1, 7) == 1);
    CHECK_THROWS_AS(inv_mod(5, 25), NotInvertible);
    CHECK(inv_mod(-1, 11) == 10);
}

TEST_CASE("legendre symbol") {
    CHECK(legendre(2, 7) == 1);
    CHECK(legendre(3, 7) == -1);
    CHECK(legendre(7, 7) == 0);
    CHECK(legendre(-1, 5) == 1);
    CHECK(legendre(-1, 7) == -1);
}

TEST_CASE("padic_of_rational") {
    PadicContext ctx(5, 2, 2);
    PadicApprox x = padic_of_rational(Rat(25, 12), ctx);
    CHECK(x.valuation() == 2);
    CHECK(x.unit() == inv_mod(12, 625));

    CHECK(padic_of_rational(Rat(0), ctx).is_zero());

    PadicContext ctx7(7, 2, 2);
    PadicApprox y = padic_of_rational(Rat(9, 7), ctx7);
    CHECK(y.valuation() == -1);
    CHECK(y.unit() == 9);
}

TEST_CASE("padic arithmetic basics") {
    PadicContext ctx(5, 2, 2);
    PadicApprox half = padic_of_rational(Rat(1, 2), ctx);
    PadicApprox one = half + half;
    CHECK(one.valuation() == 0);
    CHECK(one.unit() == 1);

    // ((1 + 5*3) - 1) / 5 == 3, an exact shift after cancellation
    PadicApprox a = PadicApprox::from_integer(16, ctx);
    PadicApprox b = (a - PadicApprox::from_integer(1, ctx)) / PadicApprox::from_integer(5, ctx);
    CHECK(b.valuation() == 0);
    CHECK(reduce(b, 2) == 3);

    // total cancellation: zero with the guard charged
    PadicApprox x = padic_of_rational(Rat(7, 3), ctx);
    PadicApprox z = x - x;
    CHECK(z.is_zero());
    CHECK(z.lost() == ctx.g);
    CHECK(reduce(z, 2) == 0);  // j <= k still reducible
}

TEST_CASE("reduce") {
    PadicContext ctx(5, 2, 2);
    PadicApprox x = PadicApprox::from_unit(7, 2, ctx);
    CHECK(reduce(x, 1) == 0);
    CHECK(reduce(x, 2) == 0);

    PadicContext ctx7(7, 1, 2);
    CHECK(reduce(PadicApprox::from_unit(9 % 343, 0, ctx7), 1) == 2);

    PadicApprox neg = padic_of_rational(Rat(1, 5), ctx);
    CHECK_THROWS_AS(reduce(neg, 1), NegativeValuation);
}

TEST_CASE("negative valuation intermediates are fine") {
    PadicContext ctx(5, 2, 2);
    PadicApprox x = padic_of_rational(Rat(1, 5), ctx) + padic_of_rational(Rat(4, 5), ctx);
    CHECK(reduce(x, 2) == 1);
}

TEST_CASE("fermat quotient") {
    PadicContext ctx(7, 1, 2);
    CHECK(reduce(fermat_quotient(2, ctx), 1) == 2);  // (2^6 - 1)/7 = 9
    CHECK(fermat_quotient(1, ctx).is_zero());
    PadicContext ctx11(11, 1, 2);
    CHECK(reduce(fermat_quotient(3, ctx11), 1) == ((59049 - 1) / 11) % 11);
    CHECK_THROWS_AS(fermat_quotient(7, ctx), NotInvertible);
}

TEST_CASE("fermat quotient multiplicativity") {
    for (std::uint64_t p : primes_in(5, 100)) {
        PadicContext ctx(p, 1, 2);
        for (int a = 1; a <= 50; ++a) {
            if (a % static_cast<int>(p) == 0) continue;
            for (int b = a; b <= 50; ++b) {
                if (b % static_cast<int>(p) == 0) continue;
                std::uint64_t lhs = reduce(fermat_quotient(static_cast<std::int64_t>(a) * b, ctx), 1);
                std::uint64_t rhs =
                    add_mod(reduce(fermat_quotient(a, ctx), 1), reduce(fermat_quotient(b, ctx), 1), p);
                REQUIRE(lhs == rhs);
            }
        }
    }
}

TEST_CASE("reduce is additive whenever defined") {
    std::mt19937_64 rng(12345);
    for (std::uint64_t p : {5ull, 11ull}) {
        PadicContext ctx(p, 3, 2);
        for (int iter = 0; iter < 500; ++iter) {
            auto ta = oracle::random_tree(rng, p, 3);
            auto tb = oracle::random_tree(rng, p, 3);
            PadicApprox x = oracle::eval_padic(*ta, ctx), y = oracle::eval_padic(*tb, ctx);
            for (int j = 1; j <= 3; ++j) {
                std::uint64_t sum, xr, yr;
                try {
                    sum = reduce(x + y, j);
                    xr = reduce(x, j);
                    yr = reduce(y, j);
                } catch (const ArithError&) {
                    continue;
                }
                std::uint64_t m = pow_u64_checked(p, j);
                REQUIRE(sum == add_mod(xr, yr, m));
            }
        }
    }
}

TEST_CASE("padic kernel vs exact rational oracle (sample)") {
    std::mt19937_64 rng(99);
    oracle::OracleStats st;
    for (std::uint64_t p : {5ull, 13ull}) {
        for (int i = 0; i < 250; ++i) {
            auto t = oracle::random_tree(rng, p, 6);
            oracle::check_tree(*t, p, 4, st);
        }
    }
    CHECK(st.mismatches == 0);
    CHECK(st.comparisons > 2000);
    // refusals are sound but must stay rare
    CHECK(st.refusals * 20 < st.comparisons);
}

#include <doctest.h>

#include <random>

#include "finlog/mobius.hpp"
#include "finlog/polylog.hpp"
#include "finlog/primes.hpp"

using namespace finlog;

namespace {

DensePoly<Mod> random_poly(std::mt19937_64& rng, std::uint64_t M, int deg) {
    std::uniform_int_distribution<std::uint64_t> d(0, M - 1);
    std::vector<Mod> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(d(rng), M);
    return DensePoly<Mod>(std::move(c));
}

// rank of a matrix over F_p (rows are coefficient vectors)
int rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    int rank = 0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(m.size()); ++col) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[static_cast<std::size_t>(rank)]);
        std::uint64_t inv = inv_mod(static_cast<std::int64_t>(m[rank][col]), p);
        for (std::size_t c = col; c < cols; ++c) m[rank][c] = mul_mod(m[rank][c], inv, p);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (static_cast<int>(r) == rank || m[r][col] == 0) continue;
            std::uint64_t f = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] = sub_mod(m[r][c], mul_mod(f, m[rank][c], p), p);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("point action and orbits") {
    CHECK(mobius_apply(MobiusElement::R, proj(0), 7) == proj_infinity());
    CHECK(mobius_apply(MobiusElement::S, proj_infinity(), 7) == proj_infinity());
    CHECK(mobius_apply(MobiusElement::RS, proj(3), 7) == proj(inv_mod(1 - 3 + 7, 7)));

    auto orb0 = orbit(proj(0), 11);
    CHECK(orb0 == std::vector<ProjPoint>{proj(0), proj(1), proj_infinity()});

    auto orb2 = orbit(proj(2), 7);
    CHECK(orb2 == std::vector<ProjPoint>{proj(2), proj(4), proj(6)});

    // root of x^2 - x + 1 exists for p = 1 mod 3 and has a 2-element orbit
    for (std::uint64_t p : {7ull, 13ull, 31ull}) {
        bool found = false;
        for (std::uint64_t z = 0; z < p; ++z) {
            if ((z * z + p * p - z + 1) % p == 0) {
                CHECK(orbit(proj(z), p).size() == 2);
                found = true;
            }
        }
        CHECK(found);
    }
}

TEST_CASE("orbit sizes across the projective line") {
    for (std::uint64_t p : primes_in(5, 61)) {
        std::vector<ProjPoint> pts;
        for (std::uint64_t z = 0; z < p; ++z) pts.push_back(proj(z));
        pts.push_back(proj_infinity());
        bool has_omega_pair = p % 3 == 1;
        for (const ProjPoint& z : pts) {
            std::size_t n = orbit(z, p).size();
            if (n == 2) {
                CHECK(has_omega_pair);
                continue;
            }
            if (n == 3) {
                auto orb = orbit(z, p);
                bool special =
                    orb == orbit(proj(0), p) || orb == orbit(proj(p - 1), p);
                CHECK(special);
                continue;
            }
            CHECK(n == 6);
        }
    }
}

TEST_CASE("polynomial action basics") {
    std::uint64_t p = 13;
    DensePoly<Mod> x = DensePoly<Mod>::monomial(Mod(1, p), 1);
    // R at formal degree 1 sends x to -1
    CHECK(act(MobiusElement::R, x, 1) == DensePoly<Mod>(Mod::of(-1, p)));
    // S on x^2 gives (1-x)^2
    DensePoly<Mod> xsq = DensePoly<Mod>::monomial(Mod(1, p), 2);
    CHECK(act(MobiusElement::S, xsq, 2) ==
          DensePoly<Mod>(std::vector<Mod>{Mod(1, p), Mod::of(-2, p), Mod(1, p)}));

    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 20; ++iter) {
        int m = 9;
        DensePoly<Mod> f = random_poly(rng, p, m);
        CHECK(act(MobiusElement::RSR, f, m) ==
              act(MobiusElement::S, act(MobiusElement::R, act(MobiusElement::S, f, m), m), m));
    }
}

TEST_CASE("the action composes like the group") {
    std::uint64_t p = 11;
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 10; ++iter) {
        int m = 8;
        DensePoly<Mod> f = random_poly(rng, p, m);
        for (MobiusElement a : kGroupG)
            for (MobiusElement b : kGroupG)
                CHECK(act(a, act(b, f, m), m) == act(mobius_compose(a, b), f, m));
    }
}

TEST_CASE("projection onto invariants") {
    std::uint64_t p = 13;
    DensePoly<Mod> x = DensePoly<Mod>::monomial(Mod(1, p), 1);
    CHECK(project_invariant(x, 1).is_zero_poly());
    DensePoly<Mod> c(Mod(5, p));
    CHECK(project_invariant(c, 0) == c);

    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 10; ++iter) {
        int m = 12;
        DensePoly<Mod> f = random_poly(rng, p, m);
        DensePoly<Mod> g = project_invariant(f, m);
        CHECK(project_invariant(g, m) == g);  // idempotent
        for (MobiusElement t : kGroupG) CHECK(act(t, g, m) == g);
    }
}

TEST_CASE("invariant polynomials are determined by their low third") {
    // Project the monomial basis, then check that killing the coefficients of
    // degree <= m/3 kills the whole invariant subspace.
    for (std::uint64_t p : {7ull, 11ull, 13ull}) {
        int m = 3 * static_cast<int>(p);
        std::vector<std::vector<std::uint64_t>> full, low;
        for (int i = 0; i <= m; ++i) {
            DensePoly<Mod> g = project_invariant(DensePoly<Mod>::monomial(Mod(1, p), i), m);
            std::vector<std::uint64_t> row(m + 1, 0), lowrow(m / 3 + 1, 0);
            for (int j = 0; j <= g.deg(); ++j) row[j] = g[j].value();
            for (int j = 0; j <= m / 3; ++j) lowrow[j] = g.coeff_or_zero(j).value();
            full.push_back(std::move(row));
            low.push_back(std::move(lowrow));
        }
        CHECK(rank_mod_p(full, p) == rank_mod_p(low, p));
    }
}

TEST_CASE("formal degree 3p completion") {
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
        DensePoly<Mod> f3 = polylog_poly(3, p, p);
        // antisymmetry precondition f(x) = -x^p f(1/x) holds for L3
        DensePoly<Mod> g = build_3p_invariant(f3, p);
        int m = 3 * static_cast<int>(p);
        CHECK(g.formal_degree() == m);
        for (MobiusElement t : kGroupG) CHECK(act(t, g, m) == g);
        // low part agrees with f(1-x) through degree p
        DensePoly<Mod> low = compose_one_minus_x(f3);
        for (int i = 0; i <= static_cast<int>(p); ++i)
            CHECK(g.coeff_or_zero(i) == low.coeff_or_zero(i));
        // and g recovers L1^3/6 - (2/3) x^p (1-x^p) L3(-1)
        DensePoly<Mod> f1 = polylog_poly(1, p, p);
        DensePoly<Mod> lhs = scale(f1 * f1 * f1, inverse_of_int(Mod(0, p), 6));
        Mod l3m1 = finite_polylog(3, Mod::of(-1, p), p, p);
        DensePoly<Mod> xp = DensePoly<Mod>::monomial(Mod(1, p), static_cast<int>(p));
        DensePoly<Mod> corr =
            scale(xp * (DensePoly<Mod>(Mod(1, p)) - xp),
                  Mod(2, p) * inverse_of_int(Mod(0, p), 3) * l3m1);
        CHECK(lhs - corr == g);
    }

    // zero maps to zero, and symmetric polynomials are rejected
    std::uint64_t p = 7;
    CHECK(build_3p_invariant(DensePoly<Mod>(Mod(0, p)), p).is_zero_poly());
    DensePoly<Mod> bad = DensePoly<Mod>::monomial(Mod(1, p), 2) +
                         DensePoly<Mod>::monomial(Mod(1, p), static_cast<int>(p) - 2);
    CHECK_THROWS_AS(build_3p_invariant(bad, p), ArithError);
}

#include <doctest.h>

#include "finlog/identities.hpp"
#include "finlog/lucaspoly.hpp"

using namespace finlog;

namespace {
Rat rbinom(long n, long k) { return Rat(binomial(n, k)); }
}  // namespace

TEST_CASE("single-term collapses") {
    // n = 1: both sides of the degree-one transform equal 1/2
    CHECK(verify_identity("ID-I1", 1).pass);
    CHECK(verify_identity("ID-I3", 1).pass);
    CHECK(verify_identity("ID-S1", 2).pass);
}

TEST_CASE("the integration step ties the first two transforms together") {
    // Integrating both sides of the k-weighted identity must give exactly the
    // k^2-weighted one, including its harmonic constant.
    for (int n = 1; n <= 12; ++n) {
        DensePoly<Rat> x(std::vector<Rat>{Rat(-2), Rat(1)});
        DensePoly<Rat> one(Rat(1));
        DensePoly<Rat> lhs3 = DensePoly<Rat>(Rat(0));
        DensePoly<Rat> rhs3 = DensePoly<Rat>(Rat(0));
        for (int k = 1; k <= n; ++k) {
            lhs3 = lhs3 + DensePoly<Rat>::monomial(rbinom(2 * n, n) / (k * rbinom(2 * k, k)), k - 1);
            rhs3 = rhs3 + scale(lucas_eval(LucasKind::U, k, x, one), rbinom(2 * n, n - k) / k);
        }
        DensePoly<Rat> lhs4 = DensePoly<Rat>(Rat(0));
        DensePoly<Rat> rhs4 = DensePoly<Rat>(Rat(0));
        Rat h2(0);
        for (int k = 1; k <= n; ++k) {
            h2 += Rat(1, k) / k;
            lhs4 = lhs4 +
                   DensePoly<Rat>::monomial(rbinom(2 * n, n) / (Rat(k) * k * rbinom(2 * k, k)), k);
            rhs4 = rhs4 + scale(lucas_eval(LucasKind::V, k, x, one), rbinom(2 * n, n - k) / (Rat(k) * k));
        }
        rhs4 = rhs4 + DensePoly<Rat>(rbinom(2 * n, n) * h2);
        CHECK(integrate(lhs3) == lhs4);
        CHECK(integrate(rhs3) == rhs4);
    }
}

TEST_CASE("identity registry passes on a medium range") {
    for (const std::string& id : identity_ids()) {
        int nmax = 8;
        for (int n = 1; n <= nmax; ++n) {
            if (id == "ID-I6" || id == "ID-RE") {
                for (int s = 1; s <= 3; ++s) {
                    IdentityOutcome out = verify_identity(id, n, s);
                    CAPTURE(id);
                    CAPTURE(n);
                    CAPTURE(s);
                    REQUIRE(out.pass);
                }
            } else {
                IdentityOutcome out = verify_identity(id, n);
                CAPTURE(id);
                CAPTURE(n);
                REQUIRE(out.pass);
            }
        }
    }
}

TEST_CASE("failures carry the residual") {
    CHECK_THROWS_AS(verify_identity("ID-NOPE", 3), UnknownCase);
    CHECK_THROWS_AS(verify_identity("ID-I3", 0), ArithError);
}

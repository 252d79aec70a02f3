#pragma once

// Random expression trees evaluated along two independent routes: truncated
// p-adic arithmetic and exact rationals. Shared by the unit tests and the
// acceptance suite.

#include <memory>
#include <random>

#include "finlog/padic.hpp"
#include "finlog/rational.hpp"

namespace oracle {

struct Expr {
    enum Kind { Leaf, Add, Sub, Mul, Div, Pow } kind;
    finlog::Rat value;  // leaves
    int exponent = 0;   // Pow
    std::unique_ptr<Expr> a, b;
};

inline finlog::Rat eval_exact(const Expr& e) {
    switch (e.kind) {
        case Expr::Leaf: return e.value;
        case Expr::Add: return eval_exact(*e.a) + eval_exact(*e.b);
        case Expr::Sub: return eval_exact(*e.a) - eval_exact(*e.b);
        case Expr::Mul: return eval_exact(*e.a) * eval_exact(*e.b);
        case Expr::Div: {
            finlog::Rat d = eval_exact(*e.b);
            if (d == 0) throw finlog::DivisionByZero("oracle: exact zero divisor");
            return eval_exact(*e.a) / d;
        }
        case Expr::Pow: {
            finlog::Rat base = eval_exact(*e.a);
            finlog::Rat r(1);
            for (int i = 0; i < e.exponent; ++i) r *= base;
            return r;
        }
    }
    return finlog::Rat(0);
}

inline finlog::PadicApprox eval_padic(const Expr& e, const finlog::PadicContext& ctx) {
    using finlog::PadicApprox;
    switch (e.kind) {
        case Expr::Leaf: return finlog::padic_of_rational(e.value, ctx);
        case Expr::Add: return eval_padic(*e.a, ctx) + eval_padic(*e.b, ctx);
        case Expr::Sub: return eval_padic(*e.a, ctx) - eval_padic(*e.b, ctx);
        case Expr::Mul: return eval_padic(*e.a, ctx) * eval_padic(*e.b, ctx);
        case Expr::Div: return eval_padic(*e.a, ctx) / eval_padic(*e.b, ctx);
        case Expr::Pow: return eval_padic(*e.a, ctx).pow(e.exponent);
    }
    return PadicApprox::zero(ctx);
}

// Leaves are units times p^v with v in [-2, 4].
inline std::unique_ptr<Expr> random_tree(std::mt19937_64& rng, std::uint64_t p, int depth) {
    auto e = std::make_unique<Expr>();
    std::uniform_int_distribution<int> kind(0, depth <= 0 ? 0 : 5);
    std::uniform_int_distribution<int> unit(1, 40);
    std::uniform_int_distribution<int> val(-2, 4);
    std::uniform_int_distribution<int> expo(0, 3);
    switch (kind(rng)) {
        case 0: {
            e->kind = Expr::Leaf;
            int u = unit(rng);
            while (u % static_cast<int>(p) == 0) u = unit(rng);
            int den = unit(rng);
            while (den % static_cast<int>(p) == 0) den = unit(rng);
            finlog::Rat q(u, den);
            q.canonicalize();
            int v = val(rng);
            for (int i = 0; i < v; ++i) q *= static_cast<long>(p);
            for (int i = 0; i < -v; ++i) q /= static_cast<long>(p);
            e->value = q;
            return e;
        }
        case 1: e->kind = Expr::Add; break;
        case 2: e->kind = Expr::Sub; break;
        case 3: e->kind = Expr::Mul; break;
        case 4: e->kind = Expr::Div; break;
        case 5:
            e->kind = Expr::Pow;
            e->exponent = expo(rng);
            e->a = random_tree(rng, p, depth - 1);
            return e;
    }
    e->a = random_tree(rng, p, depth - 1);
    e->b = random_tree(rng, p, depth - 1);
    if (e->kind == Expr::Div) {
        // retry until the divisor is exactly nonzero
        for (int tries = 0; tries < 32 && eval_exact(*e->b) == 0; ++tries)
            e->b = random_tree(rng, p, depth - 1);
        if (eval_exact(*e->b) == 0) e->kind = Expr::Mul;
    }
    return e;
}

struct OracleStats {
    long comparisons = 0;
    long mismatches = 0;
    long refusals = 0;  // PrecisionExhausted on the truncated route
};

// Checks one tree at precisions k = 1..kmax, reductions j = 1..k.
inline void check_tree(const Expr& e, std::uint64_t p, int kmax, OracleStats& st) {
    using finlog::PadicApprox;
    finlog::Rat q = eval_exact(e);
    for (int k = 1; k <= kmax; ++k) {
        finlog::PadicContext ctx(p, k, 2);
        std::unique_ptr<PadicApprox> evaluated;
        try {
            evaluated = std::make_unique<PadicApprox>(eval_padic(e, ctx));
        } catch (const finlog::PrecisionExhausted&) {
            st.refusals += k;  // nothing comparable at this precision
            continue;
        } catch (const finlog::DivisionByZero&) {
            // a divisor that is indistinguishable from zero at this precision
            st.refusals += k;
            continue;
        }
        PadicApprox x = *evaluated;
        PadicApprox ref = finlog::padic_of_rational(q, ctx);

        // valuations must agree outright when the truncated route commits
        if (!x.is_zero()) {
            ++st.comparisons;
            if (q == 0 || x.valuation() != finlog::vp(q, p)) ++st.mismatches;
        } else if (q != 0 && finlog::vp(q, p) < x.known_exponent()) {
            ++st.mismatches;  // claimed zero beyond the certified range
        }

        for (int j = 1; j <= k; ++j) {
            std::uint64_t got = 0, want = 0;
            int got_state = 0, want_state = 0;  // 0 value, 1 refusal, 2 negative valuation
            try {
                got = finlog::reduce(x, j);
            } catch (const finlog::PrecisionExhausted&) {
                got_state = 1;
            } catch (const finlog::NegativeValuation&) {
                got_state = 2;
            }
            try {
                want = finlog::reduce(ref, j);
            } catch (const finlog::NegativeValuation&) {
                want_state = 2;
            }
            if (got_state == 1) {
                ++st.refusals;  // sound but uninformative
                continue;
            }
            ++st.comparisons;
            if (got_state != want_state || (got_state == 0 && got != want)) ++st.mismatches;
        }
    }
}

}  // namespace oracle

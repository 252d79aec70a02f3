#include "finlog/congruences.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "finlog/lucaspoly.hpp"
#include "finlog/mobius.hpp"
#include "finlog/padic.hpp"
#include "finlog/polylog.hpp"
#include "finlog/primes.hpp"
#include "finlog/quad.hpp"
#include "finlog/special.hpp"

namespace finlog {

std::string family_name(Family f) {
    switch (f) {
        case Family::GEN: return "GEN";
        case Family::SV: return "SV";
        case Family::MAIN: return "MAIN";
        case Family::NUM: return "NUM";
        case Family::AUX: return "AUX";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& s) {
    if (s == "GEN") return Family::GEN;
    if (s == "SV") return Family::SV;
    if (s == "MAIN") return Family::MAIN;
    if (s == "NUM") return Family::NUM;
    if (s == "AUX") return Family::AUX;
    return std::nullopt;
}

std::string kind_name(CaseKind k) {
    switch (k) {
        case CaseKind::PolyInX: return "poly-x";
        case CaseKind::PolyInT: return "poly-t";
        case CaseKind::Numeric: return "numeric";
        case CaseKind::QuadNumeric: return "quad-numeric";
    }
    return "?";
}

SweepSummary SweepReport::summary() const {
    SweepSummary s;
    for (const CaseResult& r : results) {
        if (r.status == CaseResult::Status::Pass) ++s.pass;
        else if (r.status == CaseResult::Status::Fail) ++s.fail;
        else ++s.skipped;
    }
    return s;
}

bool SweepReport::all_passed() const { return summary().fail == 0; }

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using MPoly = DensePoly<Mod>;
using PPoly = DensePoly<PadicApprox>;
using QM = QuadElem<Mod>;

struct CaseOutcome {
    bool pass = true;
    std::optional<Witness> witness;

    static CaseOutcome ok() { return {}; }
    static CaseOutcome fail(std::string where, u64 lhs, u64 rhs) {
        return {false, Witness{std::move(where), lhs, rhs}};
    }
};

// Per-prime scratch shared by all cases evaluated at that prime.
class Workspace {
public:
    explicit Workspace(u64 p) : p_(p) {}
    u64 p() const { return p_; }
    const SpecialTable& special() const {
        if (!tab_) tab_.emplace(p_);
        return *tab_;
    }

private:
    u64 p_;
    mutable std::optional<SpecialTable> tab_;
};

using Evaluator = std::function<CaseOutcome(Workspace&)>;

struct CaseEntry {
    CaseInfo info;
    Evaluator eval;
};

// ---------------------------------------------------------------- GEN ----

Mod mc(u64 M, i64 v) { return Mod::of(v, M); }

MPoly mzero(u64 M) { return MPoly(Mod(0, M)); }
MPoly mmono(u64 M, int deg, i64 c = 1) { return MPoly::monomial(mc(M, c), deg); }

MPoly compose_neg(const MPoly& f) {  // f(-x)
    std::vector<Mod> c = f.coeffs();
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return MPoly(std::move(c));
}

CaseOutcome cmp_mpoly(const MPoly& lhs, const MPoly& rhs, const std::string& tag) {
    int top = std::max(lhs.deg(), rhs.deg());
    for (int i = 0; i <= top; ++i) {
        Mod a = lhs.coeff_or_zero(i), b = rhs.coeff_or_zero(i);
        if (a != b)
            return CaseOutcome::fail(tag + "coefficient x^" + std::to_string(i), a.value(), b.value());
    }
    return CaseOutcome::ok();
}

CaseOutcome gen_c1(Workspace& ws, int d) {
    u64 p = ws.p();
    MPoly f = polylog_poly(d, p, p);
    MPoly rhs = reversed(f, static_cast<int>(p));
    if (d % 2 == 1) rhs = -rhs;
    return cmp_mpoly(f, rhs, "");
}

CaseOutcome gen_c1b(Workspace& ws, int d) {
    u64 p = ws.p(), M = p * p;
    MPoly f = polylog_poly(d, p, M);
    MPoly rhs = reversed(f, static_cast<int>(p));
    if (d % 2 == 1) rhs = -rhs;
    rhs = rhs - scale(polylog_poly(d + 1, p, M), mc(M, static_cast<i64>(d) * static_cast<i64>(p)));
    return cmp_mpoly(f, rhs, "");
}

CaseOutcome gen_c1c(Workspace& ws) {
    u64 p = ws.p();
    u64 M = p * p * p;
    for (int d = 1; d <= 2; ++d) {
        MPoly lhs = reversed(polylog_poly(d, p, M), static_cast<int>(p));
        if (d % 2 == 1) lhs = -lhs;
        MPoly rhs = mzero(M);
        u64 pm = 1;
        for (int m = 0; m <= 2; ++m) {
            u64 coeff = mul_mod(mod_u64(binomial(d + m - 1, m), M), pm, M);
            rhs = rhs + scale(polylog_poly(d + m, p, M), Mod(coeff, M));
            pm = mul_mod(pm, p, M);
        }
        CaseOutcome r = cmp_mpoly(lhs, rhs, "d=" + std::to_string(d) + " ");
        if (!r.pass) return r;
    }
    return CaseOutcome::ok();
}

CaseOutcome gen_c6(Workspace& ws, int d) {
    u64 p = ws.p();
    MPoly f = polylog_poly(d, p, p);
    std::vector<Mod> sq(2 * p - 1, Mod(0, p));
    for (u64 k = 1; k < p; ++k) sq[2 * k] = f[static_cast<int>(k)];
    MPoly lhs(std::move(sq));
    MPoly one_plus_xp = MPoly(mc(p, 1)) + mmono(p, static_cast<int>(p));
    MPoly one_minus_xp = MPoly(mc(p, 1)) - mmono(p, static_cast<int>(p));
    MPoly rhs = one_plus_xp * f + one_minus_xp * compose_neg(f);
    rhs = scale(rhs, mc(p, 1 << (d - 1)));
    return cmp_mpoly(lhs, rhs, "");
}

CaseOutcome gen_c2(Workspace& ws) {
    u64 p = ws.p(), M = p * p;
    MPoly lhs = qp_poly(p, M);
    MPoly rhs = -compose_one_minus_x(polylog_poly(1, p, M)) -
                scale(polylog_poly(2, p, M), mc(M, static_cast<i64>(p)));
    return cmp_mpoly(lhs, rhs, "");
}

CaseOutcome gen_c3(Workspace& ws) {
    u64 p = ws.p();
    MPoly f2 = polylog_poly(2, p, p);
    MPoly rhs = compose_one_minus_x(f2) + reversed_one_minus(f2, static_cast<int>(p));
    return cmp_mpoly(f2, rhs, "");
}

// -x^p f(x) - (1 - x^p) f(1-x), the right side shared by two statements
MPoly two_term_rhs(const MPoly& f, u64 p, u64 M) {
    MPoly xp = mmono(M, static_cast<int>(p));
    MPoly one_minus_xp = MPoly(mc(M, 1)) - xp;
    return -(xp * f) - one_minus_xp * compose_one_minus_x(f);
}

CaseOutcome gen_c4(Workspace& ws) {
    u64 p = ws.p();
    MPoly q = qp_poly(p, p);
    MPoly lhs = scale(q * q, inverse_of_int(mc(p, 0), 2));
    return cmp_mpoly(lhs, two_term_rhs(polylog_poly(2, p, p), p, p), "");
}

// x^p f3 + (1-x^p) f3(1-x) + x^2p (1-x^p) f3(1-1/x) + (2/3) L3(-1) (x^p - x^2p)
MPoly three_term_rhs(u64 p) {
    u64 M = p;
    MPoly f3 = polylog_poly(3, p, M);
    MPoly xp = mmono(M, static_cast<int>(p));
    MPoly one_minus_xp = MPoly(mc(M, 1)) - xp;
    MPoly rhs = xp * f3 + one_minus_xp * compose_one_minus_x(f3) +
                shift_up(one_minus_xp * reversed_one_minus(f3, static_cast<int>(p)), static_cast<int>(p));
    Mod l3m1 = finite_polylog(3, mc(p, -1), p, p);
    Mod c = l3m1 * mc(p, 2) * inverse_of_int(mc(p, 0), 3);
    rhs = rhs + scale(xp * one_minus_xp, c);
    return rhs;
}

CaseOutcome gen_c5(Workspace& ws) {
    u64 p = ws.p();
    MPoly q = qp_poly(p, p);
    MPoly lhs = scale(q * q * q, inverse_of_int(mc(p, 0), 6));
    return cmp_mpoly(lhs, -three_term_rhs(p), "");
}

CaseOutcome gen_eqq(Workspace& ws) {
    u64 p = ws.p();
    return cmp_mpoly(qp_poly(p, p), -polylog_poly(1, p, p), "");
}

CaseOutcome gen_l1(Workspace& ws) {
    u64 p = ws.p();
    MPoly f1 = polylog_poly(1, p, p);
    return cmp_mpoly(f1, compose_one_minus_x(f1), "");
}

CaseOutcome gen_l2(Workspace& ws) {
    u64 p = ws.p();
    MPoly f1 = polylog_poly(1, p, p);
    MPoly lhs = scale(f1 * f1, inverse_of_int(mc(p, 0), 2));
    return cmp_mpoly(lhs, two_term_rhs(polylog_poly(2, p, p), p, p), "");
}

CaseOutcome gen_l3(Workspace& ws) {
    u64 p = ws.p();
    MPoly f1 = polylog_poly(1, p, p);
    MPoly lhs = scale(f1 * f1 * f1, inverse_of_int(mc(p, 0), 6));
    return cmp_mpoly(lhs, three_term_rhs(p), "");
}

CaseOutcome gen_gvar(Workspace& ws) {
    u64 p = ws.p();
    MPoly f1 = polylog_poly(1, p, p);
    MPoly f2 = polylog_poly(2, p, p);
    MPoly lhs = scale(f1 * f1, inverse_of_int(mc(p, 0), 2));
    MPoly rhs = -compose_one_minus_x(f2) -
                shift_up(reversed_one_minus(f2, static_cast<int>(p)), static_cast<int>(p));
    return cmp_mpoly(lhs, rhs, "");
}

CaseOutcome gen_powers(Workspace& ws, int d) {
    u64 p = ws.p();
    const SpecialTable& tab = ws.special();
    MPoly f1 = polylog_poly(1, p, p);
    MPoly lhs(mc(p, 1));
    i64 fact = 1;
    for (int i = 1; i <= d; ++i) {
        lhs = truncate(lhs * f1, static_cast<int>(p));
        fact *= i;
    }
    lhs = scale(lhs, inverse_of_int(mc(p, 0), fact));
    MPoly rhs = truncate(compose_one_minus_x(polylog_poly(d, p, p)), static_cast<int>(p));
    if (d % 2 == 0) rhs = -rhs;
    u64 b = (static_cast<int>(p) - d) % 2 == 1 ? 0 : tab.bernoulli(static_cast<int>(p) - d);
    Mod xpc = Mod(b, p) * inverse_of_int(mc(p, 0), d);
    if (d % 2 == 1) xpc = -xpc;
    rhs = rhs + MPoly::monomial(xpc, static_cast<int>(p));
    return cmp_mpoly(lhs, rhs, "");
}

CaseOutcome gen_mhs(Workspace& ws, int d) {
    u64 p = ws.p();
    std::vector<u64> inv = coprime_inverses_upto(p, p);
    std::vector<u64> e(d, 0);  // e[r-1] = sum over 0<k_1<...<k_r<j of 1/prod
    std::vector<Mod> lc(p, Mod(0, p));
    for (u64 j = 1; j < p; ++j) {
        u64 w = d == 1 ? inv[j] : mul_mod(e[d - 2], inv[j], p);
        lc[j] = Mod(w, p);
        for (int r = static_cast<int>(std::min<u64>(d - 1, j)); r >= 1; --r) {
            u64 add = r == 1 ? inv[j] : mul_mod(e[r - 2], inv[j], p);
            e[r - 1] = add_mod(e[r - 1], add, p);
        }
    }
    MPoly lhs(std::move(lc));
    MPoly rhs = compose_one_minus_x(polylog_poly(d, p, p));
    if (d % 2 == 0) rhs = -rhs;
    return cmp_mpoly(lhs, rhs, "");
}

// ----------------------------------------------------------------- SV ----

QM quad_alpha(u64 M, i64 P, i64 Q) { return QM::alpha(mc(M, P), mc(M, Q)); }
QM gauss_i(u64 M) { return quad_alpha(M, 0, 1); }
QM omega6(u64 M) { return quad_alpha(M, 1, 1); }
QM phi_elem(u64 M) { return quad_alpha(M, 1, -1); }

QM qconst(const QM& like, Mod v) { return like.make(v, v - v); }

CaseOutcome cmp_quad(const QM& lhs, const QM& rhs, const std::string& tag) {
    if (lhs.a != rhs.a) return CaseOutcome::fail(tag + "base part", lhs.a.value(), rhs.a.value());
    if (lhs.b != rhs.b) return CaseOutcome::fail(tag + "alpha part", lhs.b.value(), rhs.b.value());
    return CaseOutcome::ok();
}

CaseOutcome cmp_mod(Mod lhs, Mod rhs, const std::string& tag) {
    if (lhs != rhs) return CaseOutcome::fail(tag, lhs.value(), rhs.value());
    return CaseOutcome::ok();
}

// q_p(a) as a residue mod p^j (exact).
u64 fermat_q(u64 a, u64 p, int j) {
    PadicContext ctx(p, j, 0);
    return reduce(fermat_quotient(static_cast<i64>(a), ctx), j);
}

u64 lucas_q(u64 p, int j) {
    PadicContext ctx(p, j, 0);
    return reduce(lucas_quotient(ctx), j);
}

CaseOutcome sv_l1_odd(Workspace& ws) {
    u64 p = ws.p();
    const SpecialTable& tab = ws.special();
    u64 M = p * p * p;
    for (int d : {1, 3}) {
        Mod lhs = finite_polylog(d, mc(M, 1), p, M);
        Mod rhs = mc(M, -static_cast<i64>(d) * (d + 1)) * inverse_of_int(mc(M, 0), 2 * (d + 2)) *
                  mc(M, static_cast<i64>(p * p)) * Mod(tab.bernoulli(static_cast<int>(p) - d - 2), M);
        CaseOutcome r = cmp_mod(lhs, rhs, "d=" + std::to_string(d));
        if (!r.pass) return r;
    }
    return CaseOutcome::ok();
}

CaseOutcome sv_l1_even(Workspace& ws) {
    u64 p = ws.p();
    const SpecialTable& tab = ws.special();
    u64 M = p * p;
    for (int d : {2, 4}) {
        Mod lhs = finite_polylog(d, mc(M, 1), p, M);
        Mod rhs = mc(M, d) * inverse_of_int(mc(M, 0), d + 1) * mc(M, static_cast<i64>(p)) *
                  Mod(tab.bernoulli(static_cast<int>(p) - d - 1), M);
        CaseOutcome r = cmp_mod(lhs, rhs, "d=" + std::to_string(d));
        if (!r.pass) return r;
    }
    return CaseOutcome::ok();
}

CaseOutcome sv_lm1_1(Workspace& ws) {
    u64 p = ws.p();
    const SpecialTable& tab = ws.special();
    u64 M = p * p * p;
    Mod q2(fermat_q(2, p, 3), M);
    Mod lhs = finite_polylog(1, mc(M, -1), p, M);
    Mod pp = mc(M, static_cast<i64>(p));
    Mod rhs = mc(M, -2) * q2 + pp * q2 * q2 -
              pp * pp *
                  (mc(M, 2) * inverse_of_int(mc(M, 0), 3) * q2 * q2 * q2 +
                   inverse_of_int(mc(M, 0), 4) * Mod(tab.bernoulli(static_cast<int>(p) - 3), M));
    return cmp_mod(lhs, rhs, "x=-1 d=1");
}

// d > 1 values at -1: odd d mod p, even d mod p^2.
CaseOutcome sv_lm1_d(Workspace& ws, int d) {
    u64 p = ws.p();
    const SpecialTable& tab = ws.special();
    if (d % 2 == 0) {
        u64 M = p * p;
        Mod lhs = finite_polylog(d, mc(M, -1), p, M);
        // d(1 - 2^-d)/(d+1) * p * B_{p-d-1}
        Mod c = mc(M, d) * (mc(M, 1) - inverse_of_int(mc(M, 0), 1 << d)) * inverse_of_int(mc(M, 0), d + 1);
        Mod rhs = c * mc(M, static_cast<i64>(p)) * Mod(tab.bernoulli(static_cast<int>(p) - d - 1), M);
        return cmp_mod(lhs, rhs, "x=-1 d=" + std::to_string(d));
    }
    u64 M = p;
    Mod lhs = finite_polylog(d, mc(M, -1), p, M);
    Mod c = mc(M, -2) * (mc(M, 1) - inverse_of_int(mc(M, 0), 1 << (d - 1))) * inverse_of_int(mc(M, 0), d);
    Mod rhs = c * Mod(tab.bernoulli(static_cast<int>(p) - d), M);
    return cmp_mod(lhs, rhs, "x=-1 d=" + std::to_string(d));
}

CaseOutcome sv_2set(Workspace& ws) {
    u64 p = ws.p();
    const SpecialTable& tab = ws.special();
    u64 B3 = tab.bernoulli(static_cast<int>(p) - 3);
    struct Item {
        int d;
        bool half;  // argument 1/2 instead of 2
        int j;
    };
    for (Item it : std::initializer_list<Item>{{1, false, 3}, {2, false, 2}, {3, false, 1},
                                               {1, true, 3},  {2, true, 2},  {3, true, 1}}) {
        u64 M = pow_u64_checked(p, it.j);
        Mod x = it.half ? inverse_of_int(mc(M, 0), 2) : mc(M, 2);
        Mod lhs = finite_polylog(it.d, x, p, M);
        Mod q2(fermat_q(2, p, it.j), M);
        Mod b3(B3 % M, M);
        Mod pp = mc(M, static_cast<i64>(p % M));
        auto frac = [&](i64 num, i64 den) { return mc(M, num) * inverse_of_int(mc(M, 0), den); };
        Mod rhs = mc(M, 0);
        if (!it.half && it.d == 1) rhs = mc(M, -2) * q2 - frac(7, 12) * pp * pp * b3;
        if (!it.half && it.d == 2) rhs = -q2 * q2 + pp * (frac(2, 3) * q2 * q2 * q2 + frac(7, 6) * b3);
        if (!it.half && it.d == 3) rhs = -frac(1, 3) * q2 * q2 * q2 - frac(7, 24) * b3;
        if (it.half && it.d == 1)
            rhs = q2 - frac(1, 2) * pp * q2 * q2 + pp * pp * (frac(1, 3) * q2 * q2 * q2 - frac(7, 48) * b3);
        if (it.half && it.d == 2) rhs = -frac(1, 2) * q2 * q2 + pp * (frac(1, 2) * q2 * q2 * q2 + frac(7, 24) * b3);
        if (it.half && it.d == 3) rhs = frac(1, 6) * q2 * q2 * q2 + frac(7, 48) * b3;
        CaseOutcome r = cmp_mod(lhs, rhs, std::string("L") + std::to_string(it.d) + (it.half ? "(1/2)" : "(2)"));
        if (!r.pass) return r;
    }
    return CaseOutcome::ok();
}

CaseOutcome sv_i2(Workspace& ws) {
    u64 p = ws.p();
    const SpecialTable& tab = ws.special();
    QM i = gauss_i(p);
    QM lhs = finite_polylog(2, i, p, p);
    Mod e3(tab.euler(static_cast<int>(p) - 3), p);
    Mod leg = mc(p, legendre(-1, p));
    QM rhs = (qconst(i, leg) + i) * qconst(i, inverse_of_int(mc(p, 0), 2) * e3);
    CaseOutcome r = cmp_quad(lhs, rhs, "Euler form ");
    if (!r.pass) return r;
    Mod b14(tab.bernoulli_poly(static_cast<int>(p) - 2, Rat(1, 4)), p);
    QM rhs2 = (qconst(i, leg) + i) * qconst(i, inverse_of_int(mc(p, 0), 16) * b14);
    return cmp_quad(lhs, rhs2, "Bernoulli form ");
}

CaseOutcome sv_i3(Workspace& ws) {
    u64 p = ws.p();
    const SpecialTable& tab = ws.special();
    QM i = gauss_i(p);
    QM lhs = finite_polylog(3, i, p, p);
    Mod b3(tab.bernoulli(static_cast<int>(p) - 3), p);
    Mod leg = mc(p, legendre(-1, p));
    QM rhs = (qconst(i, mc(p, -1)) + i * qconst(i, leg)) * qconst(i, inverse_of_int(mc(p, 0), 32) * b3);
    return cmp_quad(lhs, rhs, "");
}

CaseOutcome sv_w2(Workspace& ws) {
    u64 p = ws.p();
    const SpecialTable& tab = ws.special();
    QM w = omega6(p);
    QM isq3 = w.make(mc(p, -1), mc(p, 2));  // 2w - 1 plays i*sqrt(3)
    Mod leg = mc(p, legendre(static_cast<i64>(p), 3));
    Mod b13(tab.bernoulli_poly(static_cast<int>(p) - 2, Rat(1, 3)), p);
    QM lhs = finite_polylog(2, w, p, p);
    QM rhs = (qconst(w, leg) + isq3 * qconst(w, inverse_of_int(mc(p, 0), 3))) *
             qconst(w, inverse_of_int(mc(p, 0), 8) * b13);
    CaseOutcome r = cmp_quad(lhs, rhs, "at w ");
    if (!r.pass) return r;
    lhs = finite_polylog(2, -w, p, p);
    rhs = (qconst(w, leg) - isq3) * qconst(w, inverse_of_int(mc(p, 0), 12) * b13);
    return cmp_quad(lhs, rhs, "at -w ");
}

CaseOutcome sv_w3(Workspace& ws) {
    u64 p = ws.p();
    const SpecialTable& tab = ws.special();
    QM w = omega6(p);
    QM isq3 = w.make(mc(p, -1), mc(p, 2));
    Mod leg = mc(p, legendre(static_cast<i64>(p), 3));
    Mod b3(tab.bernoulli(static_cast<int>(p) - 3), p);
    QM lhs = finite_polylog(3, w, p, p);
    QM rhs = (qconst(w, mc(p, 1)) - isq3 * qconst(w, leg)) * qconst(w, inverse_of_int(mc(p, 0), 18) * b3);
    CaseOutcome r = cmp_quad(lhs, rhs, "at w ");
    if (!r.pass) return r;
    lhs = finite_polylog(3, -w, p, p);
    rhs = (qconst(w, mc(p, -1)) - isq3 * qconst(w, inverse_of_int(mc(p, 0), 3) * leg)) *
          qconst(w, mc(p, 2) * inverse_of_int(mc(p, 0), 9) * b3);
    return cmp_quad(lhs, rhs, "at -w ");
}

CaseOutcome sv_thmi(Workspace& ws) {
    u64 p = ws.p();
    const SpecialTable& tab = ws.special();
    QM i = gauss_i(p);
    QM one = one_like(i);
    Mod leg = mc(p, legendre(-1, p));
    Mod e3(tab.euler(static_cast<int>(p) - 3), p);
    Mod q2(fermat_q(2, p, 1), p);
    Mod q2sq8 = -(q2 * q2) * inverse_of_int(mc(p, 0), 8);
    QM lhs = finite_polylog(2, one + i, p, p);
    QM rhs = (one + i * qconst(i, leg)) * qconst(i, q2sq8) +
             qconst(i, inverse_of_int(mc(p, 0), 2) * leg * e3);
    CaseOutcome r = cmp_quad(lhs, rhs, "at 1+i ");
    if (!r.pass) return r;
    QM half = qconst(i, inverse_of_int(mc(p, 0), 2));
    lhs = finite_polylog(2, (one + i) * half, p, p);
    rhs = qconst(i, q2sq8) + (qconst(i, leg) + i) * qconst(i, inverse_of_int(mc(p, 0), 4) * e3);
    return cmp_quad(lhs, rhs, "at (1+i)/2 ");
}

CaseOutcome sv_thmw(Workspace& ws) {
    u64 p = ws.p();
    const SpecialTable& tab = ws.special();
    QM w = omega6(p);
    QM one = one_like(w);
    QM isq3 = w.make(mc(p, -1), mc(p, 2));
    Mod leg = mc(p, legendre(static_cast<i64>(p), 3));
    Mod b13(tab.bernoulli_poly(static_cast<int>(p) - 2, Rat(1, 3)), p);
    Mod q3(fermat_q(3, p, 1), p);
    QM lhs = finite_polylog(2, one + w, p, p);
    QM rhs = (qconst(w, mc(p, 3)) + isq3 * qconst(w, leg)) *
                 qconst(w, -(q3 * q3) * inverse_of_int(mc(p, 0), 16)) +
             (qconst(w, mc(p, 3) * leg) - isq3) * qconst(w, inverse_of_int(mc(p, 0), 36) * b13);
    CaseOutcome r = cmp_quad(lhs, rhs, "at 1+w ");
    if (!r.pass) return r;
    QM third = qconst(w, inverse_of_int(mc(p, 0), 3));
    lhs = finite_polylog(2, (one + w) * third, p, p);
    rhs = qconst(w, -(q3 * q3) * inverse_of_int(mc(p, 0), 8)) +
          (qconst(w, leg) + isq3) * qconst(w, inverse_of_int(mc(p, 0), 36) * b13);
    return cmp_quad(lhs, rhs, "at (1+w)/3 ");
}

CaseOutcome sv_thmphi(Workspace& ws) {
    u64 p = ws.p();
    const SpecialTable& tab = ws.special();
    QM f = phi_elem(p);
    QM one = one_like(f);
    QM s5 = f.make(mc(p, -1), mc(p, 2));  // 2*phi - 1 plays sqrt(5)
    Mod leg = mc(p, legendre(static_cast<i64>(p), 5));
    Mod qL(lucas_q(p, 1), p);
    Mod b3(tab.bernoulli(static_cast<int>(p) - 3), p);
    QM lhs = finite_polylog(2, f, p, p);
    QM rhs = s5 * qconst(f, -inverse_of_int(mc(p, 0), 10) * leg * qL * qL);
    CaseOutcome r = cmp_quad(lhs, rhs, "at phi ");
    if (!r.pass) return r;
    QM f2 = f * f;
    lhs = finite_polylog(2, f2, p, p);
    rhs = (one + s5 * qconst(f, inverse_of_int(mc(p, 0), 5) * leg)) *
          qconst(f, -inverse_of_int(mc(p, 0), 2) * qL * qL);
    r = cmp_quad(lhs, rhs, "at phi^2 ");
    if (!r.pass) return r;
    lhs = finite_polylog(2, -f, p, p);
    rhs = (one + s5 * qconst(f, inverse_of_int(mc(p, 0), 5) * leg)) *
          qconst(f, -inverse_of_int(mc(p, 0), 4) * qL * qL);
    r = cmp_quad(lhs, rhs, "at -phi ");
    if (!r.pass) return r;
    lhs = finite_polylog(3, f2, p, p);
    Mod inner = inverse_of_int(mc(p, 0), 2) * qL * qL * qL + b3;
    rhs = (one + s5 * qconst(f, leg)) * qconst(f, mc(p, -2) * inverse_of_int(mc(p, 0), 15) * inner);
    return cmp_quad(lhs, rhs, "L3 at phi^2 ");
}

CaseOutcome sv_resclass(Workspace& ws) {
    u64 p = ws.p();
    const SpecialTable& tab = ws.special();
    std::vector<u64> inv = coprime_inverses_upto(p, p);
    for (int m : {2, 3, 4, 6}) {
        for (int d = 1; d <= 3; ++d) {
            // bucket the inverse-power sums by residue class
            std::vector<u64> bucket(m, 0);
            for (u64 k = 1; k < p; ++k) {
                u64 w = inv[k];
                for (int i = 1; i < d; ++i) w = mul_mod(w, inv[k], p);
                int r = static_cast<int>(k % static_cast<u64>(m));
                bucket[r] = add_mod(bucket[r], w, p);
            }
            u64 md = 1;
            for (int i = 0; i < d; ++i) md *= static_cast<u64>(m);
            Mod c = inverse_of_int(mc(p, 0), static_cast<i64>(d * md));
            for (int r = 0; r < m; ++r) {
                Rat x1 = frac_part(Rat(r, m));
                Rat x2 = frac_part(Rat(r - static_cast<long>(p), m));
                Mod rhs = c * Mod(tab.bernoulli_poly_diff(static_cast<int>(p) - d, x1, x2), p);
                CaseOutcome res = cmp_mod(Mod(bucket[r], p), rhs,
                                          "m=" + std::to_string(m) + " d=" + std::to_string(d) +
                                              " r=" + std::to_string(r));
                if (!res.pass) return res;
            }
        }
    }
    return CaseOutcome::ok();
}

// --------------------------------------------------------------- MAIN ----

PadicApprox pint(const PadicContext& ctx, i64 n) { return PadicApprox::from_integer(n, ctx); }

PPoly pconst(const PadicContext& ctx, i64 n) { return PPoly(pint(ctx, n)); }
PPoly pmono(const PadicContext& ctx, int deg, i64 c = 1) {
    return PPoly::monomial(pint(ctx, c), deg);
}

// Incremental C(2k, k): multiply by 2(2k-1)/k at each step. Exact, with the
// p-valuation tracked automatically.
class CentralBinomial {
public:
    explicit CentralBinomial(const PadicContext& ctx) : ctx_(&ctx), val_(pint(ctx, 1)), k_(0) {}
    const PadicApprox& value() const { return val_; }  // C(2k, k) for current k
    void step() {
        ++k_;
        val_ = val_ * pint(*ctx_, 2 * (2 * k_ - 1)) / pint(*ctx_, k_);
    }

private:
    const PadicContext* ctx_;
    PadicApprox val_;
    i64 k_;
};

// p * sum_{k=1}^{p-1} t^k [H_{k-1}(2)] / (k^d C(2k,k)) as a polynomial in t.
PPoly lhs_inverse_cbinom(u64 p, int d, bool with_h2, const PadicContext& ctx) {
    std::vector<PadicApprox> c(p, PadicApprox::zero(ctx));
    CentralBinomial cb(ctx);
    PadicApprox h2 = PadicApprox::zero(ctx);
    PadicApprox pp = pint(ctx, static_cast<i64>(p));
    for (u64 k = 1; k < p; ++k) {
        cb.step();
        PadicApprox term = pp / (pint(ctx, static_cast<i64>(k)).pow(d) * cb.value());
        if (with_h2) term = term * h2;
        c[k] = term;
        h2 = h2 + pint(ctx, static_cast<i64>(k)).pow(2).inverse();
    }
    return PPoly(std::move(c));
}

PPoly two_minus_t_poly(const PadicContext& ctx) {
    return PPoly(std::vector<PadicApprox>{pint(ctx, 2), pint(ctx, -1)});
}

// sum_{k=1}^{p-1} w_k(x, y)/k^d over polynomials in t.
PPoly lucas_poly_sum(LucasKind kind, int d, u64 p, const PPoly& x, const PPoly& y,
                     const PadicContext& ctx) {
    return lucas_weighted_sum(kind, static_cast<long>(p - 1), x, y, [&](long k) {
        return PPoly(pint(ctx, k).pow(d).inverse());
    });
}

CaseOutcome cmp_ppoly(const PPoly& lhs, const PPoly& rhs, int j, const std::string& tag,
                      bool check_lhs_integral = true) {
    int top = std::max(lhs.deg(), rhs.deg());
    for (int i = 0; i <= top; ++i) {
        PadicApprox a = lhs.coeff_or_zero(i), b = rhs.coeff_or_zero(i);
        if (check_lhs_integral && !a.is_zero() && a.valuation() < 0)
            return CaseOutcome::fail(tag + "t^" + std::to_string(i) + " not p-integral",
                                     static_cast<u64>(-a.valuation()), 0);
        u64 ra = reduce(a, j), rb = reduce(b, j);
        if (ra != rb) return CaseOutcome::fail(tag + "coefficient t^" + std::to_string(i), ra, rb);
    }
    return CaseOutcome::ok();
}

CaseOutcome main_cc1(Workspace& ws) {
    u64 p = ws.p();
    PadicContext ctx(p, 3, 2);
    PPoly lhs = lhs_inverse_cbinom(p, 1, false, ctx);
    PPoly t = pmono(ctx, 1);
    PPoly one = pconst(ctx, 1);
    PPoly x = two_minus_t_poly(ctx);
    PPoly up = lucas_eval(LucasKind::U, static_cast<long>(p), x, one);
    PPoly s2 = lucas_poly_sum(LucasKind::U, 2, p, x, one, ctx);
    PadicApprox half = pint(ctx, 2).inverse();
    PadicApprox psq = pint(ctx, static_cast<i64>(p)).pow(2);
    PPoly rhs = scale(t * up - pmono(ctx, static_cast<int>(p)), half) +
                scale(t * s2, psq);
    return cmp_ppoly(lhs, rhs, 3, "");
}

CaseOutcome main_cc2(Workspace& ws) {
    u64 p = ws.p();
    PadicContext ctx(p, 3, 2);
    PPoly lhs = lhs_inverse_cbinom(p, 2, false, ctx);
    PPoly one = pconst(ctx, 1);
    PPoly x = two_minus_t_poly(ctx);
    PPoly vp = lucas_eval(LucasKind::V, static_cast<long>(p), x, one);
    PPoly s3 = lucas_poly_sum(LucasKind::V, 3, p, x, one, ctx);
    PadicApprox inv2p = (pint(ctx, 2) * pint(ctx, static_cast<i64>(p))).inverse();
    PadicApprox psq = pint(ctx, static_cast<i64>(p)).pow(2);
    PPoly rhs = scale(pconst(ctx, 2) - vp - pmono(ctx, static_cast<int>(p)), inv2p) - scale(s3, psq);
    return cmp_ppoly(lhs, rhs, 3, "");
}

CaseOutcome main_cc3(Workspace& ws) {
    u64 p = ws.p();
    PadicContext ctx(p, 1, 2);
    PPoly lhs = lhs_inverse_cbinom(p, 1, true, ctx);
    PPoly one = pconst(ctx, 1);
    PPoly x = two_minus_t_poly(ctx);
    PPoly rhs = pmono(ctx, 1) * lucas_poly_sum(LucasKind::U, 2, p, x, one, ctx);
    return cmp_ppoly(lhs, rhs, 1, "");
}

CaseOutcome main_cc4(Workspace& ws) {
    u64 p = ws.p();
    PadicContext ctx(p, 1, 2);
    PPoly lhs = lhs_inverse_cbinom(p, 2, true, ctx);
    PPoly one = pconst(ctx, 1);
    PPoly x = two_minus_t_poly(ctx);
    PPoly rhs = -lucas_poly_sum(LucasKind::V, 3, p, x, one, ctx);
    return cmp_ppoly(lhs, rhs, 1, "");
}

CaseOutcome main_d3(Workspace& ws) {
    u64 p = ws.p();
    PadicContext ctx(p, 2, 2);
    PPoly lhs = lhs_inverse_cbinom(p, 3, false, ctx);
    PPoly one = pconst(ctx, 1);
    PPoly x = two_minus_t_poly(ctx);
    PPoly vp = lucas_eval(LucasKind::V, static_cast<long>(p), x, one);
    // C(2p, p) needs one more step past C(2(p-1), p-1)
    CentralBinomial cb(ctx);
    for (u64 k = 0; k < p; ++k) cb.step();
    PadicApprox c2p_inv = cb.value().inverse();
    PadicApprox psq_inv = pint(ctx, static_cast<i64>(p)).pow(2).inverse();
    PPoly rhs = scale(pconst(ctx, 1) - scale(vp + pmono(ctx, static_cast<int>(p)), c2p_inv), psq_inv) -
                scale(lucas_poly_sum(LucasKind::V, 1, p, x, one, ctx),
                      pint(ctx, static_cast<i64>(p)).inverse());
    return cmp_ppoly(lhs, rhs, 2, "");
}

// sum_{k=1}^{p-1} C(2k,k) H_k(2) t^(p-k) / k^d on the numerator side.
PPoly lhs_cbinom_h2(u64 p, int d, const PadicContext& ctx) {
    std::vector<PadicApprox> c(p, PadicApprox::zero(ctx));
    CentralBinomial cb(ctx);
    PadicApprox h2 = PadicApprox::zero(ctx);
    for (u64 k = 1; k < p; ++k) {
        cb.step();
        h2 = h2 + pint(ctx, static_cast<i64>(k)).pow(2).inverse();
        c[p - k] = cb.value() * h2 / pint(ctx, static_cast<i64>(k)).pow(d);
    }
    return PPoly(std::move(c));
}

CaseOutcome main_cc5(Workspace& ws) {
    u64 p = ws.p();
    PadicContext ctx(p, 1, 2);
    PPoly lhs = lhs_cbinom_h2(p, 0, ctx);
    PPoly one = pconst(ctx, 1);
    PPoly x = two_minus_t_poly(ctx);
    PPoly rhs = scale(pmono(ctx, 1) * lucas_poly_sum(LucasKind::U, 2, p, x, one, ctx), pint(ctx, -2));
    return cmp_ppoly(lhs, rhs, 1, "");
}

CaseOutcome main_cc6(Workspace& ws) {
    u64 p = ws.p();
    PadicContext ctx(p, 1, 2);
    PPoly lhs = lhs_cbinom_h2(p, 1, ctx);
    PPoly one = pconst(ctx, 1);
    PPoly x = two_minus_t_poly(ctx);
    PPoly rhs = scale(lucas_poly_sum(LucasKind::V, 3, p, x, one, ctx), pint(ctx, -2));
    return cmp_ppoly(lhs, rhs, 1, "");
}

CaseOutcome main_switch(Workspace& ws) {
    u64 p = ws.p();
    PadicContext ctx(p, 1, 2);
    // table of C(2m, m) mod p for m = 1..p-1
    std::vector<u64> central(p, 0);
    CentralBinomial cb(ctx);
    for (u64 m = 1; m < p; ++m) {
        cb.step();
        central[m] = reduce(cb.value(), 1);
    }
    CentralBinomial cb2(ctx);
    PadicApprox twop = pint(ctx, 2 * static_cast<i64>(p));
    for (u64 k = 1; k < p; ++k) {
        cb2.step();
        u64 lhs = reduce(twop / (pint(ctx, static_cast<i64>(k)) * cb2.value()), 1);
        u64 rhs = central[p - k];
        if (lhs != rhs) return CaseOutcome::fail("k=" + std::to_string(k), lhs, rhs);
    }
    return CaseOutcome::ok();
}

CaseOutcome main_cc7(Workspace& ws) {
    u64 p = ws.p();
    PadicContext ctx(p, 3, 2);
    std::vector<PadicApprox> c(p, PadicApprox::zero(ctx));
    CentralBinomial cb(ctx);
    c[p - 1] = cb.value();
    for (u64 k = 1; k < p; ++k) {
        cb.step();
        c[p - 1 - k] = cb.value();
    }
    PPoly lhs(std::move(c));
    PPoly one = pconst(ctx, 1);
    PPoly t = pmono(ctx, 1);
    PPoly x = two_minus_t_poly(ctx);
    PPoly up_x = lucas_eval(LucasKind::U, static_cast<long>(p), x, one);
    PPoly up_tt = lucas_eval(LucasKind::U, static_cast<long>(p), t, t);
    PPoly mix = lucas_poly_sum(LucasKind::U, 2, p, x, one, ctx) +
                lucas_poly_sum(LucasKind::U, 2, p, t, t, ctx);
    PadicApprox psq = pint(ctx, static_cast<i64>(p)).pow(2);
    PPoly rhs = scale(up_tt, pint(ctx, 2)) - up_x - scale(mix, psq * pint(ctx, 2));
    return cmp_ppoly(lhs, rhs, 3, "");
}

CaseOutcome main_cc8(Workspace& ws) {
    u64 p = ws.p();
    PadicContext ctx(p, 2, 2);
    std::vector<PadicApprox> c(p, PadicApprox::zero(ctx));
    CentralBinomial cb(ctx);
    for (u64 k = 1; k < p; ++k) {
        cb.step();
        c[p - k] = cb.value() / pint(ctx, static_cast<i64>(k));
    }
    PPoly lhs(std::move(c));
    PPoly one = pconst(ctx, 1);
    PPoly t = pmono(ctx, 1);
    PPoly x = two_minus_t_poly(ctx);
    PPoly vp_x = lucas_eval(LucasKind::V, static_cast<long>(p), x, one);
    PPoly vp_tt = lucas_eval(LucasKind::V, static_cast<long>(p), t, t);
    PPoly numer = scale(pmono(ctx, static_cast<int>(p)), pint(ctx, 3)) + pconst(ctx, 2) - vp_x -
                  scale(vp_tt, pint(ctx, 4));
    PPoly rhs = scale(numer, pint(ctx, static_cast<i64>(p)).inverse());
    return cmp_ppoly(lhs, rhs, 2, "");
}

CaseOutcome main_cc9(Workspace& ws) {
    u64 p = ws.p();
    PadicContext ctx(p, 1, 2);
    std::vector<PadicApprox> c(p, PadicApprox::zero(ctx));
    CentralBinomial cb(ctx);
    PadicApprox half = pint(ctx, 2).inverse();
    for (u64 k = 1; k < p; ++k) {
        cb.step();
        c[p - k] = half * cb.value() / pint(ctx, static_cast<i64>(k)).pow(2);
    }
    PPoly lhs(std::move(c));
    PPoly one = pconst(ctx, 1);
    PPoly t = pmono(ctx, 1);
    PPoly x = two_minus_t_poly(ctx);
    PPoly vp_x = lucas_eval(LucasKind::V, static_cast<long>(p), x, one);
    PPoly vp_tt = lucas_eval(LucasKind::V, static_cast<long>(p), t, t);
    PPoly numer = vp_x + scale(vp_tt, pint(ctx, 2)) - pmono(ctx, static_cast<int>(p)) - pconst(ctx, 2);
    PPoly rhs = scale(numer, pint(ctx, static_cast<i64>(p)).pow(2).inverse()) +
                lucas_poly_sum(LucasKind::V, 2, p, x, one, ctx);
    return cmp_ppoly(lhs, rhs, 1, "");
}

// ---------------------------------------------------------------- AUX ----

CaseOutcome aux_bin2p(Workspace& ws) {
    u64 p = ws.p();
    const SpecialTable& tab = ws.special();
    PadicContext ctx(p, 4, 2);
    PadicApprox binom = pint(ctx, 1);  // C(2p, k)
    PadicApprox h1 = PadicApprox::zero(ctx);
    PadicApprox pp = pint(ctx, static_cast<i64>(p));
    for (u64 k = 1; k < p; ++k) {
        binom = binom * pint(ctx, 2 * static_cast<i64>(p) - static_cast<i64>(k) + 1) /
                pint(ctx, static_cast<i64>(k));
        PadicApprox rhs = pint(ctx, 2) * pp / pint(ctx, static_cast<i64>(k)) *
                          (pint(ctx, 1) - pint(ctx, 2) * pp * h1);
        if (k % 2 == 0) rhs = -rhs;
        u64 rl = reduce(binom, 3), rr = reduce(rhs, 3);
        if (rl != rr) return CaseOutcome::fail("k=" + std::to_string(k), rl, rr);
        h1 = h1 + pint(ctx, static_cast<i64>(k)).inverse();
    }
    binom = binom * pint(ctx, static_cast<i64>(p) + 1) / pp;  // C(2p, p)
    PadicApprox rhs = pint(ctx, 2) - pint(ctx, 4) * inverse_of_int(pp, 3) * pp.pow(3) *
                                         pint(ctx, static_cast<i64>(tab.bernoulli(static_cast<int>(p) - 3)));
    u64 rl = reduce(binom, 4), rr = reduce(rhs, 4);
    if (rl != rr) return CaseOutcome::fail("central", rl, rr);
    return CaseOutcome::ok();
}

CaseOutcome aux_binp1(Workspace& ws) {
    u64 p = ws.p();
    PadicContext ctx(p, 3, 2);
    PadicApprox a = pint(ctx, 1);   // C(p-1, k-1)
    PadicApprox b = pint(ctx, 1);   // C(p-1+k, k-1)
    PadicApprox h1 = PadicApprox::zero(ctx), h11 = PadicApprox::zero(ctx);
    PadicApprox pp = pint(ctx, static_cast<i64>(p));
    for (u64 k = 1; k < p; ++k) {
        PadicApprox expect_a = pint(ctx, 1) - pp * h1 + pp.pow(2) * h11;
        if (k % 2 == 0) expect_a = -expect_a;
        u64 rl = reduce(a, 3), rr = reduce(expect_a, 3);
        if (rl != rr) return CaseOutcome::fail("first, k=" + std::to_string(k), rl, rr);
        PadicApprox expect_b = pint(ctx, 1) + pp * h1 + pp.pow(2) * h11;
        rl = reduce(b, 3);
        rr = reduce(expect_b, 3);
        if (rl != rr) return CaseOutcome::fail("second, k=" + std::to_string(k), rl, rr);
        // advance to k+1
        PadicApprox kk = pint(ctx, static_cast<i64>(k));
        a = a * pint(ctx, static_cast<i64>(p - k)) / kk;
        b = b * pint(ctx, static_cast<i64>(p + k)) / kk;
        h11 = h11 + h1 / kk;
        h1 = h1 + kk.inverse();
    }
    return CaseOutcome::ok();
}

CaseOutcome aux_euler(Workspace& ws) {
    u64 p = ws.p();
    for (u64 a : {2ull, 3ull, 5ull}) {
        if (a % p == 0) continue;
        for (int n = 1; n <= 3; ++n) {
            PadicContext ctx(p, n, 2);
            u64 M = pow_u64_checked(p, n);
            u64 lhs = pow_mod(a, (p - 1) / 2, M);
            if (legendre(static_cast<i64>(a), p) < 0) lhs = sub_mod(0, lhs, M);
            PadicApprox pq = pint(ctx, static_cast<i64>(p)) * fermat_quotient(static_cast<i64>(a), ctx);
            PadicApprox rhs = PadicApprox::zero(ctx);
            Rat binom(1);
            for (int k = 0; k < n; ++k) {
                if (k > 0) binom *= (Rat(1, 2) - (k - 1)) / k;
                rhs = rhs + padic_of_rational(binom, ctx) * pq.pow(k);
            }
            u64 rr = reduce(rhs, n);
            if (lhs != rr)
                return CaseOutcome::fail("a=" + std::to_string(a) + " n=" + std::to_string(n), lhs, rr);
        }
    }
    return CaseOutcome::ok();
}

CaseOutcome aux_wolst(Workspace& ws) {
    u64 p = ws.p();
    PadicContext ctx(p, 2, 2);
    u64 h1 = reduce(harmonic(static_cast<long>(p) - 1, 1, ctx), 2);
    if (h1 != 0) return CaseOutcome::fail("H_{p-1}(1) mod p^2", h1, 0);
    u64 h2 = reduce(harmonic(static_cast<long>(p) - 1, 2, ctx), 1);
    if (h2 != 0) return CaseOutcome::fail("H_{p-1}(2) mod p", h2, 0);
    return CaseOutcome::ok();
}

// ---------------------------------------------------------------- NUM ----

// p * sum_{k=1}^{p-1} t^k [H_{k-1}(2)] / (k^d C(2k,k)) at a rational t.
PadicApprox num_inverse_cbinom(u64 p, int d, const Rat& t, bool with_h2, const PadicContext& ctx) {
    CentralBinomial cb(ctx);
    PadicApprox acc = PadicApprox::zero(ctx);
    PadicApprox h2 = PadicApprox::zero(ctx);
    PadicApprox tp = padic_of_rational(t, ctx);
    PadicApprox tk = pint(ctx, 1);
    for (u64 k = 1; k < p; ++k) {
        cb.step();
        tk = tk * tp;
        PadicApprox term = tk / (pint(ctx, static_cast<i64>(k)).pow(d) * cb.value());
        if (with_h2) term = term * h2;
        acc = acc + term;
        h2 = h2 + pint(ctx, static_cast<i64>(k)).pow(2).inverse();
    }
    return acc * pint(ctx, static_cast<i64>(p));
}

// sum_{k=1}^{p-1} (+-1)^k C(2k,k) w_k / k^d with caller-provided weights.
template <class WeightFn>
PadicApprox num_cbinom_sum(u64 p, int d, const PadicContext& ctx, WeightFn w) {
    CentralBinomial cb(ctx);
    PadicApprox acc = PadicApprox::zero(ctx);
    for (u64 k = 1; k < p; ++k) {
        cb.step();
        acc = acc + cb.value() * w(k) / pint(ctx, static_cast<i64>(k)).pow(d);
    }
    return acc;
}

CaseOutcome num_check(u64 lhs, u64 rhs, const char* what) {
    if (lhs != rhs) return CaseOutcome::fail(what, lhs, rhs);
    return CaseOutcome::ok();
}

CaseOutcome num_fib_h(Workspace& ws, int variant) {  // variant: 1, 2, 0 (d index)
    u64 p = ws.p();
    const SpecialTable& tab = ws.special();
    PadicContext ctx(p, 1, 2);
    int d = variant == 0 ? 0 : variant;
    u64 lhs = reduce(num_inverse_cbinom(p, d, Rat(-1), true, ctx), 1);
    Mod qL(lucas_q(p, 1), p);
    Mod leg = mc(p, legendre(static_cast<i64>(p), 5));
    Mod rhs = mc(p, 0);
    if (variant == 1) rhs = inverse_of_int(mc(p, 0), 5) * leg * qL * qL;
    if (variant == 2)
        rhs = mc(p, 4) * inverse_of_int(mc(p, 0), 15) *
              (inverse_of_int(mc(p, 0), 2) * qL * qL * qL +
               Mod(tab.bernoulli(static_cast<int>(p) - 3), p));
    if (variant == 0)
        rhs = inverse_of_int(mc(p, 0), 5) * qL + mc(p, 2) * inverse_of_int(mc(p, 0), 25) * leg * qL * qL;
    return num_check(lhs, rhs.value(), "value mod p");
}

CaseOutcome num_fib_p(Workspace& ws, int variant) {  // variant: 1, 2, 0
    u64 p = ws.p();
    const SpecialTable& tab = ws.special();
    PadicContext ctx(p, 3, 2);
    u64 M = p * p * p;
    int d = variant == 0 ? 0 : variant;
    u64 lhs = reduce(num_inverse_cbinom(p, d, Rat(-1), false, ctx), 3);
    auto [Fp, Lp] = fib_lucas(p, ctx.modulus);
    Mod qL(lucas_q(p, 1), M);
    Mod leg = mc(M, legendre(static_cast<i64>(p), 5));
    Mod b3(tab.bernoulli(static_cast<int>(p) - 3) % M, M);
    Mod psq = mc(M, static_cast<i64>(p)) * mc(M, static_cast<i64>(p));
    Mod rhs = mc(M, 0);
    if (variant == 1)
        rhs = (mc(M, 1) - Mod(Lp % M, M) * Mod(Fp % M, M)) * inverse_of_int(mc(M, 0), 2) +
              psq * inverse_of_int(mc(M, 0), 5) * leg * qL * qL;
    if (variant == 2) {
        PadicApprox lp = PadicApprox::from_residue(Lp, ctx);
        PadicApprox first = (pint(ctx, 1) - lp * lp) /
                            (pint(ctx, 2) * pint(ctx, static_cast<i64>(p)));
        Mod f(reduce(first, 3), M);
        rhs = f + psq * mc(M, 4) * inverse_of_int(mc(M, 0), 15) *
                      (inverse_of_int(mc(M, 0), 2) * qL * qL * qL + b3);
    }
    if (variant == 0)
        rhs = (mc(M, static_cast<i64>(p)) - Mod(Lp % M, M) * Mod(Fp % M, M)) * inverse_of_int(mc(M, 0), 5) +
              psq * mc(M, 2) * inverse_of_int(mc(M, 0), 25) * leg * qL * qL;
    return num_check(lhs, rhs.value(), "value mod p^3");
}

CaseOutcome num_sun(Workspace& ws, int variant) {  // 1: t=2 d=1; 2: t=2 d=2; 3: t=4 d=2
    u64 p = ws.p();
    const SpecialTable& tab = ws.special();
    PadicContext ctx(p, 3, 2);
    u64 M = p * p * p;
    Rat t = variant == 3 ? Rat(4) : Rat(2);
    int d = variant == 1 ? 1 : 2;
    u64 lhs = reduce(num_inverse_cbinom(p, d, t, false, ctx), 3);
    Mod q2(fermat_q(2, p, 3), M);
    Mod b3(tab.bernoulli(static_cast<int>(p) - 3) % M, M);
    Mod pp = mc(M, static_cast<i64>(p));
    Mod rhs = mc(M, 0);
    if (variant == 1) {
        Mod e3(tab.euler(static_cast<int>(p) - 3) % M, M);
        rhs = mc(M, legendre(-1, p)) - mc(M, 1) - pp * q2 + pp * pp * e3;
    }
    if (variant == 2) rhs = -q2 + pp * pp * inverse_of_int(mc(M, 0), 16) * b3;
    if (variant == 3) rhs = mc(M, -4) * q2 - mc(M, 2) * pp * q2 * q2 + pp * pp * b3;
    return num_check(lhs, rhs.value(), "value mod p^3");
}

CaseOutcome num_d3t4(Workspace& ws) {
    u64 p = ws.p();
    const SpecialTable& tab = ws.special();
    PadicContext ctx(p, 2, 2);
    u64 M = p * p;
    u64 lhs = reduce(num_inverse_cbinom(p, 3, Rat(4), false, ctx), 2);
    Mod q2(fermat_q(2, p, 2), M);
    Mod b3(tab.bernoulli(static_cast<int>(p) - 3) % M, M);
    Mod rhs = mc(M, -4) * q2 * q2 +
              mc(M, static_cast<i64>(p)) * (mc(M, 4) * inverse_of_int(mc(M, 0), 3) * q2 * q2 * q2 -
                                            inverse_of_int(mc(M, 0), 6) * b3);
    return num_check(lhs, rhs.value(), "value mod p^2");
}

CaseOutcome num_d4t4(Workspace& ws) {
    u64 p = ws.p();
    const SpecialTable& tab = ws.special();
    PadicContext ctx(p, 1, 2);
    u64 lhs = reduce(num_inverse_cbinom(p, 4, Rat(4), false, ctx), 1);
    Mod q2(fermat_q(2, p, 1), p);
    Mod b3(tab.bernoulli(static_cast<int>(p) - 3), p);
    Mod rhs = mc(p, -4) * inverse_of_int(mc(p, 0), 3) * (mc(p, 2) * q2 * q2 * q2 + b3);
    return num_check(lhs, rhs.value(), "value mod p");
}

CaseOutcome num_cc7(Workspace& ws, int variant) {  // 1: t=1; 3: t=3 -> 3^-k; -2: (-2)^k
    u64 p = ws.p();
    const SpecialTable& tab = ws.special();
    PadicContext ctx(p, 3, 2);
    u64 M = p * p * p;
    CentralBinomial cb(ctx);
    PadicApprox acc = variant == -2 ? PadicApprox::zero(ctx) : pint(ctx, 1);  // k = 0 term
    PadicApprox ratio = variant == 1   ? pint(ctx, 1)
                        : variant == 3 ? pint(ctx, 3).inverse()
                                       : pint(ctx, -2);
    PadicApprox tk = pint(ctx, 1);
    for (u64 k = 1; k < p; ++k) {
        cb.step();
        tk = tk * ratio;
        acc = acc + cb.value() * tk;
    }
    u64 lhs = reduce(acc, 3);
    Mod pp = mc(M, static_cast<i64>(p));
    Mod rhs = mc(M, 0);
    if (variant == 1 || variant == 3) {
        Mod b13(tab.bernoulli_poly(static_cast<int>(p) - 2, Rat(1, 3)) % M, M);
        Mod l3 = mc(M, legendre(static_cast<i64>(p), 3));
        if (variant == 1)
            rhs = l3 - pp * pp * inverse_of_int(mc(M, 0), 3) * b13;
        else
            rhs = l3 - mc(M, 2) * pp * pp * inverse_of_int(mc(M, 0), 9) * b13;
    } else {
        Mod q2(fermat_q(2, p, 3), M);
        rhs = mc(M, -4) * pp * inverse_of_int(mc(M, 0), 3) * q2;
    }
    return num_check(lhs, rhs.value(), "value mod p^3");
}

CaseOutcome num_cc8_lm1(Workspace& ws) {
    u64 p = ws.p();
    PadicContext ctx(p, 2, 2);
    u64 M = p * p;
    PadicApprox lhs_sum = num_cbinom_sum(p, 1, ctx, [&](u64 k) {
        return pint(ctx, k % 2 == 0 ? 1 : -1);
    });
    u64 lhs = reduce(lhs_sum, 2);
    Mod qL(lucas_q(p, 2), M);
    // p-term sign fixed to agree with the degree-one polynomial congruence at t = -1
    Mod rhs = mc(M, -2) * qL + mc(M, static_cast<i64>(p)) * qL * qL;
    return num_check(lhs, rhs.value(), "value mod p^2");
}

CaseOutcome num_cc9_b(Workspace& ws) {
    u64 p = ws.p();
    const SpecialTable& tab = ws.special();
    PadicContext ctx(p, 1, 2);
    PadicApprox lhs_sum = num_cbinom_sum(p, 2, ctx, [&](u64) { return pint(ctx, 1); });
    u64 lhs = reduce(lhs_sum, 1);
    Mod rhs = inverse_of_int(mc(p, 0), 2) * mc(p, legendre(static_cast<i64>(p), 3)) *
              Mod(tab.bernoulli_poly(static_cast<int>(p) - 2, Rat(1, 3)), p);
    return num_check(lhs, rhs.value(), "value mod p");
}

CaseOutcome num_phi(Workspace& ws, bool fibonacci) {
    u64 p = ws.p();
    int j = fibonacci ? 2 : 1;
    PadicContext ctx(p, j, 2);
    u64 M = pow_u64_checked(p, j);
    int eps = legendre(static_cast<i64>(p), 5);
    // F_n or L_n stepped by 3 from n = 3 - eps
    u64 m = ctx.modulus;
    u64 a, b;  // (W_n, W_{n+1}) at n = 3 - eps for W = F or L
    {
        u64 n0 = static_cast<u64>(3 - eps);
        auto w = [&](u64 n) {
            auto [F, L] = fib_lucas(n, m);
            return fibonacci ? F : L;
        };
        a = w(n0);
        b = w(n0 + 1);
    }
    PadicApprox acc = PadicApprox::zero(ctx);
    CentralBinomial cb(ctx);
    for (u64 k = 1; k < p; ++k) {
        cb.step();
        PadicApprox term = cb.value() * PadicApprox::from_residue(a, ctx) /
                           pint(ctx, static_cast<i64>(k)).pow(fibonacci ? 1 : 2);
        acc = k % 2 == 0 ? acc + term : acc - term;
        // advance (W_n, W_{n+1}) by three positions
        u64 a3 = add_mod(mul_mod(2, b, m), a, m);
        u64 b3 = add_mod(mul_mod(3, b, m), mul_mod(2, a, m), m);
        a = a3;
        b = b3;
    }
    u64 lhs = reduce(acc, j);
    if (!fibonacci) return num_check(lhs, 0, "value mod p");
    Mod qL(lucas_q(p, 2), M);
    Mod rhs = inverse_of_int(mc(M, 0), 5) * mc(M, static_cast<i64>(p)) * qL * qL;
    return num_check(lhs, rhs.value(), "value mod p^2");
}

// ------------------------------------------------------------ registry ----

std::vector<CaseEntry> build_registry() {
    std::vector<CaseEntry> reg;
    auto add = [&](std::string id, Family fam, CaseKind kind, int j, int g, u64 min_p,
                   std::string cond, std::string stmt, Evaluator ev) {
        reg.push_back(CaseEntry{CaseInfo{std::move(id), fam, kind, j, g, min_p, std::move(cond),
                                         std::move(stmt)},
                                std::move(ev)});
    };

    // GEN: polynomial congruences in x over Z/p^j
    for (int d = 1; d <= 4; ++d)
        add("GEN-C1-" + std::to_string(d), Family::GEN, CaseKind::PolyInX, 1, 0, 3, "p>2",
            "L" + std::to_string(d) + "(x) == (-1)^" + std::to_string(d) + " x^p L" +
                std::to_string(d) + "(1/x)  (mod p)",
            [d](Workspace& ws) { return gen_c1(ws, d); });
    for (int d = 1; d <= 3; ++d)
        add("GEN-C1B-" + std::to_string(d), Family::GEN, CaseKind::PolyInX, 2, 0, 3, "p>2",
            "L_d(x) == (-1)^d x^p L_d(1/x) - d p L_{d+1}(x)  (mod p^2), d=" + std::to_string(d),
            [d](Workspace& ws) { return gen_c1b(ws, d); });
    add("GEN-C1C", Family::GEN, CaseKind::PolyInX, 3, 0, 3, "p>2",
        "(-1)^d x^p L_d(1/x) == sum_{m<=2} C(d+m-1,m) p^m L_{d+m}(x)  (mod p^3), d=1,2",
        gen_c1c);
    for (int d = 1; d <= 3; ++d)
        add("GEN-C6-" + std::to_string(d), Family::GEN, CaseKind::PolyInX, 1, 0, 3, "p>2",
            "L_d(x^2) == 2^{d-1} [(1+x^p) L_d(x) + (1-x^p) L_d(-x)]  (mod p), d=" + std::to_string(d),
            [d](Workspace& ws) { return gen_c6(ws, d); });
    add("GEN-C2", Family::GEN, CaseKind::PolyInX, 2, 0, 5, "p>3",
        "Q_p(x) == -L1(1-x) - p L2(x)  (mod p^2)", gen_c2);
    add("GEN-C3", Family::GEN, CaseKind::PolyInX, 1, 0, 5, "p>3",
        "L2(x) == L2(1-x) + x^p L2(1-1/x)  (mod p)", gen_c3);
    add("GEN-C4", Family::GEN, CaseKind::PolyInX, 1, 0, 5, "p>3",
        "Q_p(x)^2/2 == -x^p L2(x) - (1-x^p) L2(1-x)  (mod p)", gen_c4);
    add("GEN-C5", Family::GEN, CaseKind::PolyInX, 1, 0, 5, "p>3",
        "Q_p(x)^3/6 == -[x^p L3(x) + (1-x^p) L3(1-x) + x^2p (1-x^p) L3(1-1/x) + (2/3) x^p (1-x^p) L3(-1)]  (mod p)",
        gen_c5);
    add("GEN-EQQ", Family::GEN, CaseKind::PolyInX, 1, 0, 3, "p>2",
        "Q_p(x) == -L1(x)  (mod p)", gen_eqq);
    add("GEN-L1", Family::GEN, CaseKind::PolyInX, 1, 0, 3, "p>2",
        "L1(x) == L1(1-x)  (mod p)", gen_l1);
    add("GEN-L2", Family::GEN, CaseKind::PolyInX, 1, 0, 5, "p>3",
        "L1(x)^2/2 == -x^p L2(x) - (1-x^p) L2(1-x)  (mod p)", gen_l2);
    add("GEN-L3", Family::GEN, CaseKind::PolyInX, 1, 0, 5, "p>3",
        "L1(x)^3/6 == x^p L3(x) + (1-x^p) L3(1-x) + x^2p (1-x^p) L3(1-1/x) + (2/3) x^p (1-x^p) L3(-1)  (mod p)",
        gen_l3);
    add("GEN-GVAR", Family::GEN, CaseKind::PolyInX, 1, 0, 5, "p>3",
        "L1(x)^2/2 == -L2(1-x) - x^2p L2(1-1/x)  (mod p)", gen_gvar);
    for (int d = 2; d <= 4; ++d)
        add("GEN-POWERS-" + std::to_string(d), Family::GEN, CaseKind::PolyInX, 1, 0,
            static_cast<u64>(d) + 2, "p>" + std::to_string(d + 1),
            "L1(x)^d/d! == (-1)^{d-1} L_d(1-x) + (-1)^d (B_{p-d}/d) x^p  (mod x^{p+1}, p), d=" +
                std::to_string(d),
            [d](Workspace& ws) { return gen_powers(ws, d); });
    for (int d = 1; d <= 3; ++d)
        add("GEN-MHS-" + std::to_string(d), Family::GEN, CaseKind::PolyInX, 1, 0,
            d == 1 ? 3 : static_cast<u64>(d) + 2, "p>" + std::to_string(d + 1),
            "sum_{0<k_1<...<k_d<p} x^{k_d}/(k_1...k_d) == (-1)^{d-1} L_d(1-x)  (mod p), d=" +
                std::to_string(d),
            [d](Workspace& ws) { return gen_mhs(ws, d); });

    // SV: special values per prime
    add("SV-L1-ODD", Family::SV, CaseKind::Numeric, 3, 0, 7, "p>5",
        "L_d(1) == -(d(d+1)/(2(d+2))) p^2 B_{p-d-2}  (mod p^3), d=1,3", sv_l1_odd);
    add("SV-L1-EVEN", Family::SV, CaseKind::Numeric, 2, 0, 7, "p>6",
        "L_d(1) == (d/(d+1)) p B_{p-d-1}  (mod p^2), d=2,4", sv_l1_even);
    add("SV-LM1-1", Family::SV, CaseKind::Numeric, 3, 0, 5, "p>3",
        "L1(-1) == -2q_p(2) + p q_p(2)^2 - p^2 ((2/3) q_p(2)^3 + (1/4) B_{p-3})  (mod p^3)",
        sv_lm1_1);
    add("SV-LM1-2", Family::SV, CaseKind::Numeric, 2, 0, 5, "p>3",
        "L2(-1) == (1/2) p B_{p-3}  (mod p^2)", [](Workspace& ws) { return sv_lm1_d(ws, 2); });
    add("SV-LM1-3", Family::SV, CaseKind::Numeric, 1, 0, 5, "p>4",
        "L3(-1) == -(1/2) B_{p-3}  (mod p)", [](Workspace& ws) { return sv_lm1_d(ws, 3); });
    add("SV-2SET", Family::SV, CaseKind::Numeric, 3, 0, 5, "p>3",
        "the six values L_{1,2,3}(2), L_{1,2,3}(1/2) in q_p(2) and B_{p-3}  (mod p^3/p^2/p)",
        sv_2set);
    add("SV-I2", Family::SV, CaseKind::QuadNumeric, 1, 0, 5, "p>3",
        "L2(i) == (1/2)(leg(-1|p) + i) E_{p-3} == (1/16)(leg(-1|p) + i) B_{p-2}(1/4)  (mod p); i = alpha, alpha^2 = -1",
        sv_i2);
    add("SV-I3", Family::SV, CaseKind::QuadNumeric, 1, 0, 5, "p>3",
        "L3(i) == (1/32)(-1 + leg(-1|p) i) B_{p-3}  (mod p)", sv_i3);
    add("SV-W2", Family::SV, CaseKind::QuadNumeric, 1, 0, 5, "p>3",
        "L2(w) == (1/8)(leg(p|3) + i sqrt3/3) B_{p-2}(1/3), L2(-w) == (1/12)(leg(p|3) - i sqrt3) B_{p-2}(1/3)  (mod p); i sqrt3 = 2w-1",
        sv_w2);
    add("SV-W3", Family::SV, CaseKind::QuadNumeric, 1, 0, 5, "p>3",
        "L3(w) == (1/18)(1 - i sqrt3 leg(p|3)) B_{p-3}, L3(-w) == (2/9)(-1 - (i sqrt3/3) leg(p|3)) B_{p-3}  (mod p)",
        sv_w3);
    add("SV-THMI", Family::SV, CaseKind::QuadNumeric, 1, 0, 5, "p>3",
        "L2(1+i) == -(q_p(2)^2/8)(1 + i leg(-1|p)) + (1/2) leg(-1|p) E_{p-3}; L2((1+i)/2) == -q_p(2)^2/8 + (1/4)(leg(-1|p) + i) E_{p-3}  (mod p)",
        sv_thmi);
    add("SV-THMW", Family::SV, CaseKind::QuadNumeric, 1, 0, 5, "p>3",
        "L2(1+w) == -(q_p(3)^2/16)(3 + i sqrt3 leg(p|3)) + (1/36)(3 leg(p|3) - i sqrt3) B_{p-2}(1/3); L2((1+w)/3) == -q_p(3)^2/8 + (1/36)(leg(p|3) + i sqrt3) B_{p-2}(1/3)  (mod p)",
        sv_thmw);
    add("SV-THMPHI", Family::SV, CaseKind::QuadNumeric, 1, 0, 7, "p>5",
        "L2 at phi, phi^2, -phi and L3 at phi^2 in q_L and B_{p-3}  (mod p); sqrt5 = 2 phi - 1",
        sv_thmphi);
    add("SV-RESCLASS", Family::SV, CaseKind::Numeric, 1, 0, 7, "p>6",
        "sum_{0<k<p, k=r mod m} k^-d == (1/(d m^d)) (B_{p-d}({r/m}) - B_{p-d}({(r-p)/m}))  (mod p), m in {2,3,4,6}, d<=3",
        sv_resclass);

    // MAIN: polynomial congruences in t
    add("MAIN-CC1", Family::MAIN, CaseKind::PolyInT, 3, 2, 5, "p>3",
        "p sum t^k/(k C(2k,k)) == (t u_p(2-t) - t^p)/2 + p^2 t sum u_k(2-t)/k^2  (mod p^3)",
        main_cc1);
    add("MAIN-CC2", Family::MAIN, CaseKind::PolyInT, 3, 2, 5, "p>3",
        "p sum t^k/(k^2 C(2k,k)) == (2 - v_p(2-t) - t^p)/(2p) - p^2 sum v_k(2-t)/k^3  (mod p^3)",
        main_cc2);
    add("MAIN-CC3", Family::MAIN, CaseKind::PolyInT, 1, 2, 5, "p>3",
        "p sum t^k H_{k-1}(2)/(k C(2k,k)) == t sum u_k(2-t)/k^2  (mod p)", main_cc3);
    add("MAIN-CC4", Family::MAIN, CaseKind::PolyInT, 1, 2, 5, "p>3",
        "p sum t^k H_{k-1}(2)/(k^2 C(2k,k)) == -sum v_k(2-t)/k^3  (mod p)", main_cc4);
    add("MAIN-D3", Family::MAIN, CaseKind::PolyInT, 2, 2, 5, "p>3",
        "p sum t^k/(k^3 C(2k,k)) == (1 - (v_p(2-t)+t^p)/C(2p,p))/p^2 - (1/p) sum v_k(2-t)/k  (mod p^2)",
        main_d3);
    add("MAIN-CC5", Family::MAIN, CaseKind::PolyInT, 1, 2, 5, "p>3",
        "sum t^{p-k} H_k(2) C(2k,k) == -2t sum u_k(2-t)/k^2  (mod p)", main_cc5);
    add("MAIN-CC6", Family::MAIN, CaseKind::PolyInT, 1, 2, 5, "p>3",
        "sum t^{p-k} H_k(2) C(2k,k)/k == -2 sum v_k(2-t)/k^3  (mod p)", main_cc6);
    add("MAIN-SWITCH", Family::MAIN, CaseKind::Numeric, 1, 2, 5, "p>3",
        "2p/(k C(2k,k)) == C(2(p-k), p-k)  (mod p) for k = 1..p-1", main_switch);
    add("MAIN-CC7", Family::MAIN, CaseKind::PolyInT, 3, 2, 5, "p>3",
        "sum_{k<p} C(2k,k) t^{p-1-k} == 2u_p(t,t) - u_p(2-t) - 2p^2 sum (u_k(2-t)+u_k(t,t))/k^2  (mod p^3)",
        main_cc7);
    add("MAIN-CC8", Family::MAIN, CaseKind::PolyInT, 2, 2, 5, "p>3",
        "sum C(2k,k)/k t^{p-k} == (3t^p + 2 - v_p(2-t) - 4v_p(t,t))/p  (mod p^2)", main_cc8);
    add("MAIN-CC9", Family::MAIN, CaseKind::PolyInT, 1, 2, 5, "p>3",
        "(1/2) sum C(2k,k)/k^2 t^{p-k} == (v_p(2-t) + 2v_p(t,t) - t^p - 2)/p^2 + sum v_k(2-t)/k^2  (mod p)",
        main_cc9);

    // AUX: proof-step congruences over k-ranges
    add("AUX-BIN2P", Family::AUX, CaseKind::Numeric, 3, 2, 5, "p>3",
        "C(2p,k) == 2(-1)^{k-1} (p/k)(1 - 2p H_{k-1}(1))  (mod p^3) for k<p; C(2p,p) == 2 - (4/3) p^3 B_{p-3}  (mod p^4)",
        aux_bin2p);
    add("AUX-BINP1", Family::AUX, CaseKind::Numeric, 3, 2, 5, "p>3",
        "C(p-1,k-1) == (-1)^{k-1}(1 - p H_{k-1}(1) + p^2 H_{k-1}(1,1)), C(p-1+k,k-1) == 1 + p H_{k-1}(1) + p^2 H_{k-1}(1,1)  (mod p^3)",
        aux_binp1);
    add("AUX-EULER", Family::AUX, CaseKind::Numeric, 3, 2, 5, "p>3",
        "leg(a|p) a^{(p-1)/2} == sum_{k<n} C(1/2,k)(p q_p(a))^k  (mod p^n), a in {2,3,5}, n<=3",
        aux_euler);
    add("AUX-WOLST", Family::AUX, CaseKind::Numeric, 2, 2, 5, "p>4",
        "H_{p-1}(1) == 0  (mod p^2) and H_{p-1}(2) == 0  (mod p)", aux_wolst);

    // NUM: numeric specializations
    add("NUM-FIB-H1", Family::NUM, CaseKind::Numeric, 1, 2, 7, "p>5",
        "p sum (-1)^k H_{k-1}(2)/(k C(2k,k)) == (1/5) leg(p|5) q_L^2  (mod p)",
        [](Workspace& ws) { return num_fib_h(ws, 1); });
    add("NUM-FIB-H2", Family::NUM, CaseKind::Numeric, 1, 2, 7, "p>5",
        "p sum (-1)^k H_{k-1}(2)/(k^2 C(2k,k)) == (4/15)((1/2) q_L^3 + B_{p-3})  (mod p)",
        [](Workspace& ws) { return num_fib_h(ws, 2); });
    add("NUM-FIB-H0", Family::NUM, CaseKind::Numeric, 1, 2, 7, "p>5",
        "p sum (-1)^k H_{k-1}(2)/C(2k,k) == (1/5) q_L + (2/25) leg(p|5) q_L^2  (mod p)",
        [](Workspace& ws) { return num_fib_h(ws, 0); });
    add("NUM-FIB-P1", Family::NUM, CaseKind::Numeric, 3, 2, 7, "p>5",
        "p sum (-1)^k/(k C(2k,k)) == (1 - L_p F_p)/2 + (p^2/5) leg(p|5) q_L^2  (mod p^3)",
        [](Workspace& ws) { return num_fib_p(ws, 1); });
    add("NUM-FIB-P2", Family::NUM, CaseKind::Numeric, 3, 2, 7, "p>5",
        "p sum (-1)^k/(k^2 C(2k,k)) == (1 - L_p^2)/(2p) + (4p^2/15)((1/2) q_L^3 + B_{p-3})  (mod p^3)",
        [](Workspace& ws) { return num_fib_p(ws, 2); });
    add("NUM-FIB-P0", Family::NUM, CaseKind::Numeric, 3, 2, 7, "p>5",
        "p sum (-1)^k/C(2k,k) == (p - L_p F_p)/5 + (2p^2/25) leg(p|5) q_L^2  (mod p^3)",
        [](Workspace& ws) { return num_fib_p(ws, 0); });
    add("NUM-SUN-1", Family::NUM, CaseKind::Numeric, 3, 2, 5, "p>3",
        "p sum 2^k/(k C(2k,k)) == leg(-1|p) - 1 - p q_p(2) + p^2 E_{p-3}  (mod p^3)",
        [](Workspace& ws) { return num_sun(ws, 1); });
    add("NUM-SUN-2", Family::NUM, CaseKind::Numeric, 3, 2, 5, "p>3",
        "p sum 2^k/(k^2 C(2k,k)) == -q_p(2) + (p^2/16) B_{p-3}  (mod p^3)",
        [](Workspace& ws) { return num_sun(ws, 2); });
    add("NUM-SUN-3", Family::NUM, CaseKind::Numeric, 3, 2, 5, "p>3",
        "p sum 4^k/(k^2 C(2k,k)) == -4 q_p(2) - 2p q_p(2)^2 + p^2 B_{p-3}  (mod p^3)",
        [](Workspace& ws) { return num_sun(ws, 3); });
    add("NUM-D3T4", Family::NUM, CaseKind::Numeric, 2, 2, 5, "p>3",
        "p sum 4^k/(k^3 C(2k,k)) == -4 q_p(2)^2 + p((4/3) q_p(2)^3 - (1/6) B_{p-3})  (mod p^2)",
        num_d3t4);
    add("NUM-D4T4", Family::NUM, CaseKind::Numeric, 1, 2, 5, "p>3",
        "p sum 4^k/(k^4 C(2k,k)) == -(4/3)(2 q_p(2)^3 + B_{p-3})  (mod p)", num_d4t4);
    add("NUM-CC7-T1", Family::NUM, CaseKind::Numeric, 3, 2, 5, "p>3",
        "sum_{k<p} C(2k,k) == leg(p|3) - (p^2/3) B_{p-2}(1/3)  (mod p^3)",
        [](Workspace& ws) { return num_cc7(ws, 1); });
    add("NUM-CC7-T3", Family::NUM, CaseKind::Numeric, 3, 2, 5, "p>3",
        "sum_{k<p} C(2k,k)/3^k == leg(p|3) - (2p^2/9) B_{p-2}(1/3)  (mod p^3)",
        [](Workspace& ws) { return num_cc7(ws, 3); });
    add("NUM-CC7-TM2", Family::NUM, CaseKind::Numeric, 3, 2, 5, "p>3",
        "sum_{0<k<p} (-2)^k C(2k,k) == -(4p/3) q_p(2)  (mod p^3)",
        [](Workspace& ws) { return num_cc7(ws, -2); });
    add("NUM-CC8-LM1", Family::NUM, CaseKind::Numeric, 2, 2, 5, "p>3",
        "sum (-1)^k C(2k,k)/k == -2 q_L + p q_L^2  (mod p^2)  [p-term sign from the t=-1 specialization]",
        num_cc8_lm1);
    add("NUM-CC9-B", Family::NUM, CaseKind::Numeric, 1, 2, 5, "p>3",
        "sum C(2k,k)/k^2 == (1/2) leg(p|3) B_{p-2}(1/3)  (mod p)", num_cc9_b);
    add("NUM-PHI-F", Family::NUM, CaseKind::Numeric, 2, 2, 7, "p>5",
        "sum C(2k,k) (-1)^k F_{3k-leg(p|5)}/k == (1/5) p q_L^2  (mod p^2)",
        [](Workspace& ws) { return num_phi(ws, true); });
    add("NUM-PHI-L", Family::NUM, CaseKind::Numeric, 1, 2, 7, "p>5",
        "sum C(2k,k) (-1)^k L_{3k-leg(p|5)}/k^2 == 0  (mod p)",
        [](Workspace& ws) { return num_phi(ws, false); });

    return reg;
}

const std::vector<CaseEntry>& registry_entries() {
    static const std::vector<CaseEntry> reg = build_registry();
    return reg;
}

const CaseEntry& find_entry(const std::string& id) {
    for (const CaseEntry& e : registry_entries())
        if (e.info.id == id) return e;
    throw UnknownCase("unknown case id: " + id);
}

CaseResult run_entry(const CaseEntry& e, u64 p, Workspace& ws) {
    CaseResult res;
    res.id = e.info.id;
    res.p = p;
    auto t0 = std::chrono::steady_clock::now();
    try {
        CaseOutcome out = e.eval(ws);
        res.status = out.pass ? CaseResult::Status::Pass : CaseResult::Status::Fail;
        res.witness = out.witness;
    } catch (const ArithError& err) {
        res.status = CaseResult::Status::Fail;
        res.witness = Witness{std::string("error: ") + err.what(), 0, 0};
    }
    auto t1 = std::chrono::steady_clock::now();
    res.micros = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
    return res;
}

}  // namespace

const std::vector<CaseInfo>& case_registry() {
    static const std::vector<CaseInfo> infos = [] {
        std::vector<CaseInfo> v;
        for (const CaseEntry& e : registry_entries()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

const CaseInfo& find_case(const std::string& id) { return find_entry(id).info; }

std::vector<std::string> case_ids(std::optional<Family> fam) {
    std::vector<std::string> out;
    for (const CaseInfo& c : case_registry())
        if (!fam || c.family == *fam) out.push_back(c.id);
    return out;
}

CaseResult verify_case(const std::string& id, u64 p) {
    const CaseEntry& e = find_entry(id);
    if (!is_prime(p) || p < e.info.min_prime)
        throw PrimeConditionViolated(id + " requires a prime with " + e.info.prime_condition +
                                     "; got " + std::to_string(p));
    Workspace ws(p);
    return run_entry(e, p, ws);
}

SweepReport verify_sweep(const std::vector<std::string>& ids, u64 lo, u64 hi, int jobs) {
    std::vector<const CaseEntry*> entries;
    for (const std::string& id : ids) entries.push_back(&find_entry(id));
    std::vector<u64> primes = primes_in(lo, hi);

    SweepReport report;
    report.results.resize(entries.size() * primes.size());
    auto run_prime = [&](std::size_t pi) {
        u64 p = primes[pi];
        Workspace ws(p);
        for (std::size_t ci = 0; ci < entries.size(); ++ci) {
            const CaseEntry& e = *entries[ci];
            CaseResult& slot = report.results[pi * entries.size() + ci];
            if (p < e.info.min_prime) {
                slot.id = e.info.id;
                slot.p = p;
                slot.status = CaseResult::Status::Skipped;
            } else {
                slot = run_entry(e, p, ws);
            }
        }
    };

    if (jobs <= 1 || primes.size() <= 1) {
        for (std::size_t pi = 0; pi < primes.size(); ++pi) run_prime(pi);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t pi = next.fetch_add(1);
                if (pi >= primes.size()) return;
                run_prime(pi);
            }
        };
        std::vector<std::thread> pool;
        int n = std::min<int>(jobs, static_cast<int>(primes.size()));
        for (int i = 0; i < n; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    std::sort(report.results.begin(), report.results.end(), [](const CaseResult& a, const CaseResult& b) {
        if (a.id != b.id) return a.id < b.id;
        return a.p < b.p;
    });
    return report;
}

std::vector<LatticeCheck> consistency_lattice(u64 p) {
    std::vector<LatticeCheck> out;
    auto add = [&](std::string desc, bool applicable, u64 lhs = 0, u64 rhs = 0) {
        out.push_back(LatticeCheck{std::move(desc), applicable, lhs == rhs, lhs, rhs});
    };

    struct TEntry {
        const char* desc;
        int d;
        bool h2;
        long t;
        int j;
        u64 min_p;
    };
    // inverse-central-binomial family: polynomial side == numeric side at t0
    for (TEntry s : std::initializer_list<TEntry>{
             {"CC1(t=2) vs NUM-SUN-1", 1, false, 2, 3, 5},
             {"CC2(t=2) vs NUM-SUN-2", 2, false, 2, 3, 5},
             {"CC2(t=4) vs NUM-SUN-3", 2, false, 4, 3, 5},
             {"CC1(t=-1) vs NUM-FIB-P1", 1, false, -1, 3, 7},
             {"CC2(t=-1) vs NUM-FIB-P2", 2, false, -1, 3, 7},
             {"CC3(t=-1) vs NUM-FIB-H1", 1, true, -1, 1, 7},
             {"CC4(t=-1) vs NUM-FIB-H2", 2, true, -1, 1, 7},
             {"D3(t=4) vs NUM-D3T4", 3, false, 4, 2, 5},
         }) {
        if (p < s.min_p) {
            add(s.desc, false);
            continue;
        }
        PadicContext ctx(p, s.j, 2);
        PPoly poly = lhs_inverse_cbinom(p, s.d, s.h2, ctx);
        PadicApprox at = evaluate(poly, pint(ctx, s.t));
        PadicApprox num = num_inverse_cbinom(p, s.d, Rat(s.t), s.h2, ctx);
        add(s.desc, true, reduce(at, s.j), reduce(num, s.j));
    }

    {  // CC7 at t = 1 and t = 3 vs the direct sums
        PadicContext ctx(p, 3, 2);
        std::vector<PadicApprox> c(p, PadicApprox::zero(ctx));
        CentralBinomial cb(ctx);
        c[p - 1] = cb.value();
        for (u64 k = 1; k < p; ++k) {
            cb.step();
            c[p - 1 - k] = cb.value();
        }
        PPoly lhs(std::move(c));
        CentralBinomial cb1(ctx);
        PadicApprox direct1 = pint(ctx, 1), direct3 = pint(ctx, 1);
        PadicApprox third = pint(ctx, 3).inverse(), t3k = pint(ctx, 1);
        for (u64 k = 1; k < p; ++k) {
            cb1.step();
            t3k = t3k * third;
            direct1 = direct1 + cb1.value();
            direct3 = direct3 + cb1.value() * t3k;
        }
        add("CC7(t=1) vs NUM-CC7-T1", true, reduce(evaluate(lhs, pint(ctx, 1)), 3), reduce(direct1, 3));
        PadicApprox three_pow = pint(ctx, 3).pow(static_cast<i64>(p) - 1);
        add("CC7(t=3) vs 3^{p-1} * NUM-CC7-T3", true, reduce(evaluate(lhs, pint(ctx, 3)), 3),
            reduce(three_pow * direct3, 3));
    }

    {  // CC8 at t = -1 vs NUM-CC8-LM1 (sign flip)
        PadicContext ctx(p, 2, 2);
        std::vector<PadicApprox> c(p, PadicApprox::zero(ctx));
        CentralBinomial cb(ctx);
        PadicApprox direct = PadicApprox::zero(ctx);
        for (u64 k = 1; k < p; ++k) {
            cb.step();
            c[p - k] = cb.value() / pint(ctx, static_cast<i64>(k));
            PadicApprox term = cb.value() / pint(ctx, static_cast<i64>(k));
            direct = k % 2 == 0 ? direct + term : direct - term;
        }
        PPoly lhs(std::move(c));
        add("CC8(t=-1) vs -NUM-CC8-LM1", true, reduce(evaluate(lhs, pint(ctx, -1)), 2),
            reduce(-direct, 2));
    }

    {  // CC9 at t = 1 vs NUM-CC9-B (factor 2)
        PadicContext ctx(p, 1, 2);
        std::vector<PadicApprox> c(p, PadicApprox::zero(ctx));
        CentralBinomial cb(ctx);
        PadicApprox half = pint(ctx, 2).inverse();
        PadicApprox direct = PadicApprox::zero(ctx);
        for (u64 k = 1; k < p; ++k) {
            cb.step();
            c[p - k] = half * cb.value() / pint(ctx, static_cast<i64>(k)).pow(2);
            direct = direct + cb.value() / pint(ctx, static_cast<i64>(k)).pow(2);
        }
        PPoly lhs(std::move(c));
        add("2*CC9(t=1) vs NUM-CC9-B", true, reduce(pint(ctx, 2) * evaluate(lhs, pint(ctx, 1)), 1),
            reduce(direct, 1));
    }

    return out;
}

}  // namespace finlog

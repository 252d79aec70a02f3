#include "finlog/mobius.hpp"

#include <algorithm>

namespace finlog {

namespace {

// Permutation of {0, 1, inf} identifies the group element.
// Encode points 0 -> 0, 1 -> 1, inf -> 2.
constexpr std::array<std::array<int, 3>, 6> kPerm = {{
    {0, 1, 2},  // One
    {2, 1, 0},  // R: swaps 0, inf
    {1, 0, 2},  // S: swaps 0, 1
    {1, 2, 0},  // RS: 0->1->inf->0
    {2, 0, 1},  // SR: 0->inf->1->0
    {0, 2, 1},  // RSR: swaps 1, inf
}};

int index_of(MobiusElement t) { return static_cast<int>(t); }

}  // namespace

MobiusElement mobius_compose(MobiusElement a, MobiusElement b) {
    const auto& pa = kPerm[index_of(a)];
    const auto& pb = kPerm[index_of(b)];
    std::array<int, 3> c;
    for (int i = 0; i < 3; ++i) c[i] = pa[pb[i]];
    for (int t = 0; t < 6; ++t)
        if (kPerm[t] == c) return static_cast<MobiusElement>(t);
    throw ArithError("mobius_compose: table closed, unreachable");
}

ProjPoint mobius_apply(MobiusElement t, ProjPoint pt, std::uint64_t p) {
    auto applyR = [&](ProjPoint q) -> ProjPoint {
        if (q.inf) return proj(0);
        if (q.z == 0) return proj_infinity();
        return proj(inv_mod(static_cast<std::int64_t>(q.z), p));
    };
    auto applyS = [&](ProjPoint q) -> ProjPoint {
        if (q.inf) return proj_infinity();
        return proj(sub_mod(1 % p, q.z, p));
    };
    const char* w = mobius_word(t);
    std::size_t n = std::char_traits<char>::length(w);
    for (std::size_t i = n; i-- > 0;) pt = w[i] == 'R' ? applyR(pt) : applyS(pt);
    return pt;
}

std::vector<ProjPoint> orbit(ProjPoint z, std::uint64_t p) {
    std::vector<ProjPoint> out;
    for (MobiusElement t : kGroupG) {
        ProjPoint q = mobius_apply(t, z, p);
        if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace finlog

#pragma once

#include <string>
#include <vector>

#include "finlog/poly.hpp"
#include "finlog/rational.hpp"

namespace finlog {

// Characteristic-zero polynomial identities in t, verified exactly.
// A failing check returns the nonzero difference LHS - RHS.
struct IdentityOutcome {
    bool pass;
    DensePoly<Rat> residual;
};

const std::vector<std::string>& identity_ids();

// Throws UnknownCase for unrecognised ids; s is only consulted where the
// statement has an extra parameter (ID-I6, ID-RE).
IdentityOutcome verify_identity(const std::string& id, int n, int s = 1);

}  // namespace finlog

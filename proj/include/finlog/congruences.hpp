#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finlog/errors.hpp"

namespace finlog {

enum class Family { GEN, SV, MAIN, NUM, AUX };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

enum class CaseKind { PolyInX, PolyInT, Numeric, QuadNumeric };

std::string kind_name(CaseKind k);

// First offending position when a comparison fails.
struct Witness {
    std::string where;
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
};

struct CaseInfo {
    std::string id;
    Family family;
    CaseKind kind;
    int modulus_exp;               // compare modulo p^j
    int guard;                     // guard digits carried during evaluation
    std::uint64_t min_prime;       // admissible for primes >= min_prime
    std::string prime_condition;   // human-readable form of the admissibility
    std::string statement;         // what equality is checked
};

struct CaseResult {
    enum class Status { Pass, Fail, Skipped };

    std::string id;
    std::uint64_t p = 0;
    Status status = Status::Skipped;
    std::optional<Witness> witness;
    std::int64_t micros = 0;
};

struct SweepSummary {
    long pass = 0;
    long fail = 0;
    long skipped = 0;
};

struct SweepReport {
    std::vector<CaseResult> results;  // canonical (id, p) order
    SweepSummary summary() const;
    bool all_passed() const;
};

const std::vector<CaseInfo>& case_registry();
const CaseInfo& find_case(const std::string& id);  // throws UnknownCase
std::vector<std::string> case_ids(std::optional<Family> fam = std::nullopt);

// Evaluate one case at one prime; throws PrimeConditionViolated when p is
// inadmissible (not prime, or below the case's bound).
CaseResult verify_case(const std::string& id, std::uint64_t p);

// Run the id x prime grid over primes in [lo, hi]; inadmissible pairs are
// reported as skipped, never dropped. Results are keyed and sorted by
// (id, p), so parallel runs aggregate identically.
SweepReport verify_sweep(const std::vector<std::string>& ids, std::uint64_t lo, std::uint64_t hi,
                         int jobs = 1);

// Cross-checks tying the polynomial cases to the numeric ones: evaluating a
// polynomial side at a small integer t must reproduce the corresponding
// numeric sum bit-exactly.
struct LatticeCheck {
    std::string description;
    bool applicable;
    bool pass;
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
};

std::vector<LatticeCheck> consistency_lattice(std::uint64_t p);

}  // namespace finlog

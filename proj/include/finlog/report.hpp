#pragma once

#include <string>
#include <vector>

#include "finlog/congruences.hpp"

namespace finlog {

// Canonical JSON (schema 1): fields schema, version, cases[], summary.
// Cases are emitted in (id, p) order. When strip_timing is set the micros
// fields are zeroed, which makes reports byte-comparable across runs.
std::string report_json(const SweepReport& report, bool strip_timing = false);

// Inverse of report_json; throws ArithError on malformed input.
SweepReport report_from_json(const std::string& text);

// Human-readable rollup: one line per case id plus failures and totals.
std::string report_text(const SweepReport& report, std::uint64_t lo, std::uint64_t hi);

std::string list_text(const std::vector<CaseInfo>& cases);
std::string list_json(const std::vector<CaseInfo>& cases);

}  // namespace finlog

// Acceptance suite: every criterion prints one PASS/FAIL line. The path to
// the CLI binary is taken from argv[1] for the end-to-end contract checks.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "finlog/congruences.hpp"
#include "finlog/identities.hpp"
#include "finlog/padic.hpp"
#include "finlog/primes.hpp"
#include "finlog/report.hpp"
#include "finlog/special.hpp"
#include "oracle_util.hpp"

using namespace finlog;

namespace {

int g_failures = 0;
std::string g_cli;

int jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

void criterion(const std::string& name, const std::string& what, double budget_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("%s %s (%.2fs)  %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), secs, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

bool sweep_clean(const std::vector<std::string>& ids, std::uint64_t lo, std::uint64_t hi,
                 std::string& detail) {
    SweepReport r = verify_sweep(ids, lo, hi, jobs());
    SweepSummary s = r.summary();
    std::ostringstream os;
    os << s.pass << " pass, " << s.fail << " fail, " << s.skipped << " skipped";
    for (const CaseResult& c : r.results) {
        if (c.status != CaseResult::Status::Fail) continue;
        os << "; first failure " << c.id << " p=" << c.p;
        if (c.witness) os << " at " << c.witness->where;
        break;
    }
    detail = os.str();
    return s.fail == 0 && s.pass > 0;
}

struct CommandResult {
    int exit_code;
    std::string out;
};

CommandResult run_cli(const std::string& args) {
    std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string normalized(const std::string& json_text) {
    return report_json(report_from_json(json_text), /*strip_timing=*/true);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli = argv[1];

    criterion("AC1", "identity suite, zero residual for n <= 25 (s <= 3)", 60, [](std::string& d) {
        long checked = 0;
        for (const std::string& id : identity_ids()) {
            for (int n = 1; n <= 25; ++n) {
                int smax = (id == "ID-I6" || id == "ID-RE") ? 3 : 1;
                for (int s = 1; s <= smax; ++s) {
                    IdentityOutcome out = verify_identity(id, n, s);
                    ++checked;
                    if (!out.pass) {
                        d = id + " failed at n=" + std::to_string(n) + " s=" + std::to_string(s);
                        return false;
                    }
                }
            }
        }
        d = std::to_string(checked) + " identity instances";
        return true;
    });

    criterion("AC2", "general congruences for all admissible 5 <= p <= 199", 120,
              [](std::string& d) { return sweep_clean(case_ids(Family::GEN), 5, 199, d); });

    criterion("AC3", "special values for all admissible primes up to 499", 120,
              [](std::string& d) { return sweep_clean(case_ids(Family::SV), 5, 499, d); });

    criterion("AC4", "main polynomial congruences in t for all admissible primes up to 97", 180,
              [](std::string& d) { return sweep_clean(case_ids(Family::MAIN), 5, 97, d); });

    criterion("AC5", "numeric suite (Sun block included) for all admissible primes up to 997", 300,
              [](std::string& d) {
                  std::vector<std::string> ids = case_ids(Family::NUM);
                  for (std::string& id : case_ids(Family::AUX)) ids.push_back(std::move(id));
                  return sweep_clean(ids, 5, 997, d);
              });

    criterion("AC6", "p-adic kernel vs exact-rational oracle, 1000 trees per prime", 120,
              [](std::string& d) {
                  oracle::OracleStats st;
                  for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
                      std::mt19937_64 rng(0xF1D0'0000 + p);
                      for (int i = 0; i < 1000; ++i) {
                          auto t = oracle::random_tree(rng, p, 8);
                          oracle::check_tree(*t, p, 4, st);
                      }
                  }
                  std::ostringstream os;
                  os << st.comparisons << " comparisons, " << st.mismatches << " mismatches, "
                     << st.refusals << " refusals";
                  d = os.str();
                  return st.mismatches == 0 && st.comparisons > 20000 &&
                         st.refusals * 20 < st.comparisons;
              });

    criterion("AC7", "constant cross-validation for 7 <= p <= 499", 120, [](std::string& d) {
        long checked = 0;
        for (std::uint64_t p : primes_in(7, 499)) {
            SpecialTable tab(p);
            PadicContext ctx(p, 2, 2);
            PadicApprox pp = PadicApprox::from_integer(static_cast<std::int64_t>(p), ctx);
            std::uint64_t lhs = reduce(harmonic(static_cast<long>(p) - 1, 2, ctx) / pp, 1);
            std::uint64_t rhs =
                mul_mod(mul_mod(2, inv_mod(3, p), p), tab.bernoulli(static_cast<int>(p) - 3), p);
            if (lhs != rhs) {
                d = "harmonic route to B_{p-3} differs at p=" + std::to_string(p);
                return false;
            }
            std::uint64_t lhs4 = reduce(harmonic(static_cast<long>(p) - 1, 4, ctx) / pp, 1);
            std::uint64_t rhs4 =
                mul_mod(mul_mod(4, inv_mod(5, p), p), tab.bernoulli(static_cast<int>(p) - 5), p);
            if (lhs4 != rhs4) {
                d = "harmonic route to B_{p-5} differs at p=" + std::to_string(p);
                return false;
            }
            if (tab.bernoulli_poly(static_cast<int>(p) - 2, Rat(1, 4)) !=
                mul_mod(8, tab.euler(static_cast<int>(p) - 3), p)) {
                d = "B_{p-2}(1/4) != 8 E_{p-3} at p=" + std::to_string(p);
                return false;
            }
            checked += 3;
        }
        d = std::to_string(checked) + " cross-checks";
        return true;
    });

    criterion("AC8", "polynomial cases reproduce numeric values at t in {1,2,3,4,-1}, p <= 97", 120,
              [](std::string& d) {
                  long applicable = 0;
                  for (std::uint64_t p : primes_in(5, 97)) {
                      for (const LatticeCheck& c : consistency_lattice(p)) {
                          if (!c.applicable) continue;
                          ++applicable;
                          if (!c.pass) {
                              d = c.description + " at p=" + std::to_string(p);
                              return false;
                          }
                      }
                  }
                  d = std::to_string(applicable) + " lattice checks";
                  return true;
              });

    criterion("AC9", "CLI contract: exit codes, JSON round-trip, canonical determinism", 120,
              [](std::string& d) {
                  if (g_cli.empty()) {
                      d = "no CLI path given";
                      return false;
                  }
                  CommandResult ok = run_cli("verify --case GEN-C3 --primes 5..50 --format json");
                  if (ok.exit_code != 0) {
                      d = "expected exit 0 on a passing sweep, got " + std::to_string(ok.exit_code);
                      return false;
                  }
                  SweepReport parsed = report_from_json(ok.out);
                  if (parsed.summary().pass == 0 || !parsed.all_passed()) {
                      d = "JSON report did not parse into a passing sweep";
                      return false;
                  }
                  if (report_json(parsed) != ok.out) {
                      d = "JSON round-trip was lossy";
                      return false;
                  }
                  if (run_cli("verify --case NO-SUCH --primes 5..7").exit_code != 2) {
                      d = "unknown case id must exit 2";
                      return false;
                  }
                  if (run_cli("verify --primes nonsense").exit_code != 2) {
                      d = "bad prime range must exit 2";
                      return false;
                  }
                  if (run_cli("frobnicate").exit_code != 2) {
                      d = "unknown subcommand must exit 2";
                      return false;
                  }
                  CommandResult fixture1 =
                      run_cli("verify --family NUM --primes 5..97 --format json --jobs 1");
                  CommandResult fixture2 =
                      run_cli("verify --family NUM --primes 5..97 --format json --jobs 1");
                  CommandResult fixture4 =
                      run_cli("verify --family NUM --primes 5..97 --format json --jobs 4");
                  if (fixture1.exit_code != 0 || fixture2.exit_code != 0 || fixture4.exit_code != 0) {
                      d = "fixture sweep did not exit 0";
                      return false;
                  }
                  if (normalized(fixture1.out) != normalized(fixture2.out) ||
                      normalized(fixture1.out) != normalized(fixture4.out)) {
                      d = "canonical reports differ across runs/parallelism";
                      return false;
                  }
                  CommandResult fq = run_cli("compute fermat-quotient 2 7");
                  if (fq.out != "2\n") {
                      d = "compute fermat-quotient 2 7 printed '" + fq.out + "'";
                      return false;
                  }
                  CommandResult bn = run_cli("compute bernoulli 2 7");
                  if (bn.out != "6\n") {
                      d = "compute bernoulli 2 7 printed '" + bn.out + "'";
                      return false;
                  }
                  CommandResult pl = run_cli("compute polylog 1 1 5 --mod-exp 2");
                  if (pl.out != "0 (valuation 2)\n") {
                      d = "compute polylog 1 1 5 printed '" + pl.out + "'";
                      return false;
                  }
                  if (run_cli("compute bernoulli 2 8").exit_code != 2) {
                      d = "composite modulus must exit 2";
                      return false;
                  }
                  CommandResult lst = run_cli("list --format json");
                  if (lst.exit_code != 0 || lst.out.find("MAIN-CC1") == std::string::npos) {
                      d = "list --format json missing cases";
                      return false;
                  }
                  d = "all contract checks";
                  return true;
              });

    return g_failures == 0 ? 0 : 1;
}

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "finlog/congruences.hpp"
#include "finlog/padic.hpp"
#include "finlog/polylog.hpp"
#include "finlog/primes.hpp"
#include "finlog/report.hpp"
#include "finlog/special.hpp"
#include "finlog/version.hpp"

namespace {

using finlog::ArithError;

bool parse_prime_range(const std::string& s, std::uint64_t& lo, std::uint64_t& hi) {
    auto pos = s.find("..");
    if (pos == std::string::npos) return false;
    try {
        lo = std::stoull(s.substr(0, pos));
        hi = std::stoull(s.substr(pos + 2));
    } catch (...) {
        return false;
    }
    return lo >= 2 && hi >= lo;
}

int cmd_verify(const std::vector<std::string>& case_flags, const std::vector<std::string>& family_flags,
               const std::string& primes, const std::string& format, int jobs) {
    std::uint64_t lo = 0, hi = 0;
    if (!parse_prime_range(primes, lo, hi)) {
        std::cerr << "invalid --primes range: " << primes << "\n";
        return 2;
    }
    std::vector<std::string> ids;
    for (const std::string& f : family_flags) {
        auto fam = finlog::family_from_name(f);
        if (!fam) {
            std::cerr << "unknown family: " << f << "\n";
            return 2;
        }
        for (std::string& id : finlog::case_ids(*fam)) ids.push_back(std::move(id));
    }
    for (const std::string& id : case_flags) {
        try {
            finlog::find_case(id);
        } catch (const finlog::UnknownCase&) {
            std::cerr << "unknown case id: " << id << "\n";
            return 2;
        }
        ids.push_back(id);
    }
    if (ids.empty()) ids = finlog::case_ids();
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    finlog::SweepReport report = finlog::verify_sweep(ids, lo, hi, jobs);
    if (format == "json")
        std::cout << finlog::report_json(report);
    else
        std::cout << finlog::report_text(report, lo, hi);
    return report.all_passed() ? 0 : 1;
}

int cmd_list(const std::string& family, const std::string& format) {
    std::vector<finlog::CaseInfo> cases;
    std::optional<finlog::Family> fam;
    if (!family.empty()) {
        fam = finlog::family_from_name(family);
        if (!fam) {
            std::cerr << "unknown family: " << family << "\n";
            return 2;
        }
    }
    for (const finlog::CaseInfo& c : finlog::case_registry())
        if (!fam || c.family == *fam) cases.push_back(c);
    std::cout << (format == "json" ? finlog::list_json(cases) : finlog::list_text(cases));
    return 0;
}

std::uint64_t arg_u64(const std::vector<std::string>& args, std::size_t i) {
    return std::stoull(args.at(i));
}

std::uint64_t require_prime(const std::vector<std::string>& args, std::size_t i) {
    std::uint64_t p = arg_u64(args, i);
    if (!finlog::is_prime(p)) throw ArithError("not a prime: " + std::to_string(p));
    return p;
}

int cmd_compute(const std::string& what, const std::vector<std::string>& args, int mod_exp) {
    using finlog::PadicContext;
    auto print_padic = [&](const finlog::PadicApprox& x, int j) {
        if (x.is_zero()) {
            std::cout << "0 (zero)\n";
            return;
        }
        std::cout << finlog::reduce(x, j) << " (valuation " << x.valuation() << ")\n";
    };
    if (what == "polylog") {
        // polylog D X P
        int d = static_cast<int>(arg_u64(args, 0));
        finlog::Rat x(args.at(1));
        x.canonicalize();
        std::uint64_t p = require_prime(args, 2);
        PadicContext ctx(p, mod_exp, 2);
        std::vector<std::uint64_t> inv = finlog::coprime_inverses_upto(p, ctx.modulus);
        finlog::PadicApprox acc = finlog::PadicApprox::zero(ctx);
        finlog::PadicApprox xp = finlog::padic_of_rational(x, ctx);
        finlog::PadicApprox xk = finlog::PadicApprox::from_integer(1, ctx);
        for (std::uint64_t k = 1; k < p; ++k) {
            xk = xk * xp;
            finlog::PadicApprox w = finlog::PadicApprox::from_residue(inv[k], ctx).pow(d);
            acc = acc + xk * w;
        }
        print_padic(acc, mod_exp);
        return 0;
    }
    if (what == "bernoulli") {
        int m = static_cast<int>(arg_u64(args, 0));
        std::uint64_t p = require_prime(args, 1);
        std::cout << finlog::bernoulli_mod(m, p) << "\n";
        return 0;
    }
    if (what == "euler") {
        int n = static_cast<int>(arg_u64(args, 0));
        std::uint64_t p = require_prime(args, 1);
        std::cout << finlog::euler_mod(n, p) << "\n";
        return 0;
    }
    if (what == "fermat-quotient") {
        std::int64_t a = std::stoll(args.at(0));
        std::uint64_t p = require_prime(args, 1);
        PadicContext ctx(p, mod_exp, 2);
        std::cout << finlog::reduce(finlog::fermat_quotient(a, ctx), mod_exp) << "\n";
        return 0;
    }
    if (what == "lucas-quotient") {
        std::uint64_t p = require_prime(args, 0);
        PadicContext ctx(p, mod_exp, 2);
        std::cout << finlog::reduce(finlog::lucas_quotient(ctx), mod_exp) << "\n";
        return 0;
    }
    if (what == "harmonic") {
        long n = static_cast<long>(arg_u64(args, 0));
        int d = static_cast<int>(arg_u64(args, 1));
        std::uint64_t p = require_prime(args, 2);
        PadicContext ctx(p, mod_exp, 2);
        print_padic(finlog::harmonic(n, d, ctx), mod_exp);
        return 0;
    }
    std::cerr << "unknown computation: " << what << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite polylogarithm and central binomial congruence checker"};
    app.set_version_flag("--version", finlog::kVersion);
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run congruence cases over a prime range");
    std::vector<std::string> vcases, vfamilies;
    std::string vprimes = "5..97", vformat = "text";
    int vjobs = 1;
    verify->add_option("--case", vcases, "case id (repeatable)");
    verify->add_option("--family", vfamilies, "family GEN|SV|MAIN|NUM|AUX (repeatable)");
    verify->add_option("--primes", vprimes, "prime range LO..HI");
    verify->add_option("--format", vformat, "text|json")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--jobs", vjobs, "worker threads")->check(CLI::PositiveNumber);

    auto* list = app.add_subcommand("list", "print the case catalog");
    std::string lfamily, lformat = "text";
    list->add_option("--family", lfamily, "family filter");
    list->add_option("--format", lformat, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* compute = app.add_subcommand("compute", "evaluate one quantity");
    std::string what;
    std::vector<std::string> cargs;
    int mod_exp = 1;
    compute->add_option("what", what,
                        "polylog|bernoulli|euler|fermat-quotient|lucas-quotient|harmonic")
        ->required();
    compute->add_option("args", cargs, "positional arguments for the computation");
    compute->add_option("--mod-exp", mod_exp, "report modulo p^J")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(vcases, vfamilies, vprimes, vformat, vjobs);
        if (list->parsed()) return cmd_list(lfamily, lformat);
        if (compute->parsed()) return cmd_compute(what, cargs, mod_exp);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

#include "finlog/report.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

#include "finlog/version.hpp"

namespace finlog {

namespace {

using json = nlohmann::ordered_json;

const char* status_name(CaseResult::Status s) {
    switch (s) {
        case CaseResult::Status::Pass: return "pass";
        case CaseResult::Status::Fail: return "fail";
        case CaseResult::Status::Skipped: return "skipped";
    }
    return "?";
}

CaseResult::Status status_from(const std::string& s) {
    if (s == "pass") return CaseResult::Status::Pass;
    if (s == "fail") return CaseResult::Status::Fail;
    if (s == "skipped") return CaseResult::Status::Skipped;
    throw ArithError("bad status in report: " + s);
}

}  // namespace

std::string report_json(const SweepReport& report, bool strip_timing) {
    json cases = json::array();
    for (const CaseResult& r : report.results) {
        json c;
        c["id"] = r.id;
        c["p"] = r.p;
        c["status"] = status_name(r.status);
        if (r.witness) {
            c["witness"] = {{"where", r.witness->where}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
        }
        c["micros"] = strip_timing ? 0 : r.micros;
        cases.push_back(std::move(c));
    }
    SweepSummary s = report.summary();
    json out;
    out["schema"] = 1;
    out["version"] = kVersion;
    out["cases"] = std::move(cases);
    out["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}};
    return out.dump(2) + "\n";
}

SweepReport report_from_json(const std::string& text) {
    json in = json::parse(text, nullptr, false);
    if (in.is_discarded()) throw ArithError("report_from_json: invalid JSON");
    if (!in.contains("schema") || in["schema"].get<int>() != 1)
        throw ArithError("report_from_json: unsupported schema");
    SweepReport report;
    for (const json& c : in.at("cases")) {
        CaseResult r;
        r.id = c.at("id").get<std::string>();
        r.p = c.at("p").get<std::uint64_t>();
        r.status = status_from(c.at("status").get<std::string>());
        if (c.contains("witness")) {
            Witness w;
            w.where = c["witness"].at("where").get<std::string>();
            w.lhs = c["witness"].at("lhs").get<std::uint64_t>();
            w.rhs = c["witness"].at("rhs").get<std::uint64_t>();
            r.witness = std::move(w);
        }
        r.micros = c.at("micros").get<std::int64_t>();
        report.results.push_back(std::move(r));
    }
    return report;
}

std::string report_text(const SweepReport& report, std::uint64_t lo, std::uint64_t hi) {
    std::ostringstream os;
    std::map<std::string, std::array<long, 3>> rollup;  // id -> pass/fail/skipped
    for (const CaseResult& r : report.results) {
        auto& row = rollup[r.id];
        if (r.status == CaseResult::Status::Pass) ++row[0];
        else if (r.status == CaseResult::Status::Fail) ++row[1];
        else ++row[2];
    }
    os << "sweep over primes " << lo << ".." << hi << "\n";
    for (const auto& [id, row] : rollup) {
        os << "  " << id;
        for (std::size_t i = id.size(); i < 16; ++i) os << ' ';
        os << row[0] << " pass, " << row[1] << " fail, " << row[2] << " skipped\n";
    }
    for (const CaseResult& r : report.results) {
        if (r.status != CaseResult::Status::Fail) continue;
        os << "  FAIL " << r.id << " p=" << r.p;
        if (r.witness)
            os << "  at " << r.witness->where << ": lhs=" << r.witness->lhs
               << " rhs=" << r.witness->rhs;
        os << "\n";
    }
    SweepSummary s = report.summary();
    os << "total: " << s.pass << " pass, " << s.fail << " fail, " << s.skipped << " skipped\n";
    return os.str();
}

std::string list_text(const std::vector<CaseInfo>& cases) {
    std::ostringstream os;
    for (const CaseInfo& c : cases) {
        os << c.id;
        for (std::size_t i = c.id.size(); i < 14; ++i) os << ' ';
        os << family_name(c.family) << "  mod p^" << c.modulus_exp << "  " << c.prime_condition
           << "  " << c.statement << "\n";
    }
    return os.str();
}

std::string list_json(const std::vector<CaseInfo>& cases) {
    json arr = json::array();
    for (const CaseInfo& c : cases) {
        arr.push_back({{"id", c.id},
                       {"family", family_name(c.family)},
                       {"kind", kind_name(c.kind)},
                       {"modulus_exp", c.modulus_exp},
                       {"guard", c.guard},
                       {"prime_condition", c.prime_condition},
                       {"statement", c.statement}});
    }
    return arr.dump(2) + "\n";
}

}  // namespace finlog

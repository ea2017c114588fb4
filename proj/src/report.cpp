#include "regular7/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace regular7 {

std::string status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::infeasible: return "infeasible";
        case Status::error: return "error";
    }
    return "unknown";
}

void VerificationReport::add_counterexample(long n, const mpz_class& argument,
                                            const mpz_class& residue) {
    counterexamples.push_back({n, argument, residue});
    status = Status::fail;
}

void VerificationReport::add_discrepancy(std::string location, std::string expected,
                                         std::string got) {
    discrepancies.push_back({std::move(location), std::move(expected), std::move(got)});
    status = Status::fail;
}

nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["case"] = r.case_id;
    j["params"] = r.params;
    j["range"] = r.range_checked;
    j["status"] = status_name(r.status);
    auto ces = nlohmann::json::array();
    for (const auto& c : r.counterexamples)
        ces.push_back({{"n", c.n},
                       {"argument", c.argument.get_str()},
                       {"value_mod", c.residue.get_str()}});
    j["counterexamples"] = ces;
    auto ds = nlohmann::json::array();
    for (const auto& d : r.discrepancies)
        ds.push_back({{"location", d.location}, {"expected", d.expected}, {"got", d.got}});
    j["discrepancies"] = ds;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

void ReportSet::add(VerificationReport r) { reports_.push_back(std::move(r)); }

bool ReportSet::all_passed() const {
    return std::all_of(reports_.begin(), reports_.end(),
                       [](const VerificationReport& r) { return r.passed(); });
}

long ReportSet::total_elapsed_ms() const {
    long t = 0;
    for (const auto& r : reports_) t += r.elapsed_ms;
    return t;
}

std::vector<VerificationReport> ReportSet::sorted() const {
    std::vector<VerificationReport> rs = reports_;
    std::stable_sort(rs.begin(), rs.end(),
                     [](const VerificationReport& a, const VerificationReport& b) {
                         return a.case_id < b.case_id;
                     });
    return rs;
}

nlohmann::json ReportSet::to_json() const {
    nlohmann::json results = nlohmann::json::array();
    nlohmann::json timing = nlohmann::json::object();
    for (const auto& r : sorted()) {
        results.push_back(report_to_json(r));
        timing[r.case_id] = r.elapsed_ms;
    }
    nlohmann::json j;
    j["meta"] = {{"elapsed_ms", total_elapsed_ms()}, {"per_case_ms", timing}};
    j["results"] = results;
    return j;
}

std::string ReportSet::to_csv() const {
    std::ostringstream os;
    os << "case,status,range,n,argument,value_mod,location,expected,got\n";
    for (const auto& r : sorted()) {
        if (r.counterexamples.empty() && r.discrepancies.empty()) {
            os << r.case_id << ',' << status_name(r.status) << ",\"" << r.range_checked
               << "\",,,,,,\n";
            continue;
        }
        for (const auto& c : r.counterexamples)
            os << r.case_id << ',' << status_name(r.status) << ",\"" << r.range_checked
               << "\"," << c.n << ',' << c.argument.get_str() << ',' << c.residue.get_str()
               << ",,,\n";
        for (const auto& d : r.discrepancies)
            os << r.case_id << ',' << status_name(r.status) << ",\"" << r.range_checked
               << "\",,,," << d.location << ',' << d.expected << ',' << d.got << '\n';
    }
    return os.str();
}

std::string ReportSet::to_text() const {
    std::ostringstream os;
    for (const auto& r : sorted()) {
        os << (r.passed() ? "PASS " : "FAIL ") << r.case_id;
        if (!r.range_checked.empty()) os << "  (" << r.range_checked << ")";
        if (r.status == Status::infeasible || r.status == Status::error)
            os << "  [" << status_name(r.status) << "]";
        os << '\n';
        if (!r.note.empty()) os << "    note: " << r.note << '\n';
        for (const auto& c : r.counterexamples)
            os << "    counterexample: n=" << c.n << " argument=" << c.argument.get_str()
               << " value mod 7^e = " << c.residue.get_str() << '\n';
        for (const auto& d : r.discrepancies)
            os << "    mismatch at " << d.location << ": expected " << d.expected << ", got "
               << d.got << '\n';
    }
    return os.str();
}

}  // namespace regular7

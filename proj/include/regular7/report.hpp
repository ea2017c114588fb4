#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace regular7 {

/// A congruence counterexample: c(argument) != 0 mod 7^e at progression index n.
struct Counterexample {
    long n = 0;
    mpz_class argument;
    mpz_class residue;
};

/// A value-level disagreement (identity coefficient, table entry, bound).
struct Discrepancy {
    std::string location;
    std::string expected;
    std::string got;
};

enum class Status { pass, fail, infeasible, error };

std::string status_name(Status s);

/**
 * Machine-readable outcome of one verification case. A report with no
 * counterexamples and no discrepancies is a pass; reports are appended
 * to a ReportSet and never mutated afterwards.
 */
struct VerificationReport {
    std::string case_id;
    std::map<std::string, std::string> params;
    std::string range_checked;
    Status status = Status::pass;
    std::vector<Counterexample> counterexamples;
    std::vector<Discrepancy> discrepancies;
    std::string note;
    long elapsed_ms = 0;

    bool passed() const { return status == Status::pass; }

    void add_counterexample(long n, const mpz_class& argument, const mpz_class& residue);
    void add_discrepancy(std::string location, std::string expected, std::string got);
};

/// Deterministic body (no timing).
nlohmann::json report_to_json(const VerificationReport& r);

/// Append-only collection with deterministic rendering (sorted by case id).
class ReportSet {
public:
    void add(VerificationReport r);
    const std::vector<VerificationReport>& reports() const { return reports_; }
    bool all_passed() const;
    long total_elapsed_ms() const;

    /// {"meta": {...timing...}, "results": [...]} — only "results" is part
    /// of the byte-stability contract.
    nlohmann::json to_json() const;
    std::string to_csv() const;
    std::string to_text() const;

private:
    std::vector<VerificationReport> sorted() const;
    std::vector<VerificationReport> reports_;
};

}  // namespace regular7

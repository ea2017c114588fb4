#pragma once

#include <gmpxx.h>

#include <functional>
#include <span>
#include <vector>

#include "regular7/report.hpp"
#include "regular7/valuation.hpp"

namespace regular7 {

enum class Provenance { fixture, recurrence, oracle };

std::string provenance_name(Provenance p);

/**
 * The coefficient matrix m_{i,j} defined by H(xi^{-i}) = sum_j m_{i,j} T^{-j},
 * where xi = f_1/(q^2 f_49) and T = f_7^4/(q^7 f_49^4).
 *
 * Rows 1..7 come either from the printed base tables (fixture) or from the
 * series oracle (the default, and the authoritative base for downstream
 * computation); rows >= 8 extend by the two-column linear recurrence. Row i
 * has support bound 2i: m_{i,j} = 0 for j > 2i. For the base rows this is
 * certified by the oracle's zero-residual check, and the recurrence only
 * reaches columns supp(i-1)+2, so the bound propagates.
 *
 * Row construction is single-writer; completed rows are immutable.
 */
class MTable {
public:
    /// Rows 1..7, columns 1..14 exactly as printed in the base tables.
    static MTable fixture_rows();

    /// Rows 1..base_rows recomputed from the series oracle.
    static MTable oracle_base(int base_rows = 7);

    int max_row() const { return static_cast<int>(rows_.size()); }

    /// m_{i,j} = 0 for j > 2i.
    static long support_bound(int i) { return 2L * i; }

    /// Entry m_{i,j}; zero outside the support bound, throws if row i is
    /// not materialized or j < 1.
    const mpz_class& entry(int i, long j) const;

    Provenance row_provenance(int i) const;
    std::span<const mpz_class> row(int i) const;

    /// Materialize rows up to max_row via the recurrence.
    void ensure_rows(int target_row);

    /**
     * Visit rows 1..target_row in order without materializing them:
     * stored rows are served as-is, rows beyond are produced by the
     * recurrence through a rolling 7-row window and discarded. The span
     * holds columns 1..2i.
     */
    void wave(int target_row,
              const std::function<void(int i, std::span<const mpz_class>)>& visit) const;

private:
    struct Row {
        Provenance prov;
        std::vector<mpz_class> c;  // columns 1..2i
    };
    static std::vector<mpz_class> recurrence_row(
        int i, const std::function<const mpz_class&(int, long)>& at);

    std::vector<Row> rows_;  // rows_[i-1]
};

/**
 * Row i of the matrix recovered from the series side: expand
 * H(xi^{-i}) to absolute precision prec and peel the expansions of
 * T^{-j} off triangularly (T^{-j} starts at q^{7j}). Requires
 * prec >= 7*j_max + 1. Throws if the residual after peeling j_max terms
 * has support at or below q^{7*j_max}, which would mean a non-triangular
 * defect. With require_exhausted the residual must vanish on its whole
 * window, certifying that the row has no support beyond j_max (this is
 * how the 2i support bound is guarded during row construction).
 */
std::vector<mpz_class> oracle_row(int i, long j_max, long prec,
                                  bool require_exhausted = false);

/// The 10-term recurrence for m_{i,j}, i >= 8. Columns 1 and 2 are zero
/// for these rows. Throws if a referenced row is not materialized in base.
mpz_class recurrence_entry(int i, long j, const MTable& base);

/// Lower bound floor((7j - 2i - 1)/4) on pi(m_{i,j}).
long pmij_bound(int i, long j);

/// Entrywise check of the valuation bound over all materialized entries.
VerificationReport check_pmij(const MTable& table);

}  // namespace regular7

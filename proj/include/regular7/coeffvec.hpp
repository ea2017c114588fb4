#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "regular7/mtable.hpp"
#include "regular7/report.hpp"

namespace regular7 {

enum class Family { x, y_odd, y_even };

std::string family_name(Family f);

/**
 * One coefficient vector: x_k, or a step of the chains y^{(2k-1)}_beta /
 * y^{(2k)}_beta. Entries are exact integers with finite support, stored
 * densely from j = 1; index() is the subscript (k for family x, the chain
 * step number for the y families).
 */
struct CoeffVector {
    Family family = Family::x;
    int k = 1;      // the family parameter (k of x_k, or the k of y^{(2k-1)}/y^{(2k)})
    int index = 1;  // x: the k itself; y: chain step (1-based)
    std::vector<mpz_class> entries;  // entries[j-1] = component j

    long support() const;  // largest j with a nonzero entry (0 if none)
    const mpz_class& at(long j) const;
    std::string label() const;  // e.g. "x_3", "y^(1)_2", "y^(2)_4"
};

/// Resource limits for chain steps. Steps whose matrix rows fit under
/// materialize_row_cap read the stored table (extending it on demand);
/// heavier steps stream rows through MTable::wave up to wave_row_cap;
/// beyond that the step throws infeasible_error.
struct SweepLimits {
    int materialize_row_cap = 512;
    int wave_row_cap = 4096;
};

struct infeasible_error : std::runtime_error {
    infeasible_error(std::string what, long rows_needed, long cap)
        : std::runtime_error(std::move(what)), rows_needed(rows_needed), cap(cap) {}
    long rows_needed;
    long cap;
};

/// x_k from x_1 = (7, 49, 0, ...) by the alternating recursion
/// x_{k+1,i} = sum_j x_{k,j} m_{4j,j+i}   (k odd)
///           = sum_j x_{k,j} m_{4j+1,j+i} (k even).
CoeffVector x_vector(int k, MTable& m,
                     const SweepLimits& limits = SweepLimits{});

/// Steps 1..steps of y^{(2k-1)}: step 1 is x_{2k-1}; step s+1 applies rows
/// 4i-1 (s odd) or 4i-3 (s even) at column i+j-1.
std::vector<CoeffVector> y_odd_chain(int k, int steps, MTable& m,
                                     const SweepLimits& limits = SweepLimits{});

/// Steps 1..steps of y^{(2k)}: step 1 is x_{2k-1}; every step applies rows
/// 4i at column i+j.
std::vector<CoeffVector> y_even_chain(int k, int steps, MTable& m,
                                      const SweepLimits& limits = SweepLimits{});

/// As many chain steps as the limits allow; when a step exceeds the wave
/// cap, `steps` holds the completed prefix and `stopped_reason` says why.
struct ChainResult {
    std::vector<CoeffVector> steps;
    std::string stopped_reason;  // empty when all requested steps were computed
    long rows_needed = 0;        // row demand of the first infeasible step
};

ChainResult y_odd_chain_upto(int k, int steps, MTable& m,
                             const SweepLimits& limits = SweepLimits{});
ChainResult y_even_chain_upto(int k, int steps, MTable& m,
                              const SweepLimits& limits = SweepLimits{});

/// The lemma floor for entry j of the given vector. For x_1 the published
/// values are exact (pi = 1 and 2 at j = 1, 2) and asserted as equalities
/// by the bound checker instead.
long valuation_floor(const CoeffVector& v, long j);

/// Entrywise check of the family's valuation bound; for x_1 the exact
/// values are asserted instead of the floor.
VerificationReport check_valuation_bounds(const CoeffVector& v);

}  // namespace regular7

#pragma once

#include <optional>
#include <string>

#include "regular7/coeffvec.hpp"
#include "regular7/congruence.hpp"
#include "regular7/mtable.hpp"
#include "regular7/partitions.hpp"
#include "regular7/report.hpp"
#include "regular7/series.hpp"

namespace regular7 {

enum class IdentityId { H1, H2, G1, G2, G3 };
enum class HuffStepId { G1_to_G2, G2_to_G1, G3_to_G3 };
enum class LemmaId { H4i_1, H4i_3, H4i };  // (H4i-1), (H4i-3), (H4i)

std::string identity_name(IdentityId id);
std::string huff_step_name(HuffStepId id);
std::string lemma_name(LemmaId id);

/**
 * Shared state for verification runs: the partition-table cache, the
 * m-matrix (oracle base rows by default, fixture rows when seeded from
 * the printed tables), resource limits, and the optional modular fast
 * path for congruence sweeps.
 */
struct VerifyContext {
    PartitionStore tables;
    MTable m = MTable::oracle_base();
    SweepLimits limits;
    long table_cap = 500000;  // largest partition-table index an identity/congruence may touch
    bool fast_path = false;   // congruence sweeps mod 7^{e+2} with an exact cross-check
    bool fast_cross_check = true;
};

/// Progression and vector data of one generating-function identity.
struct IdentityCase {
    CongruenceSpec::Family family;
    mpz_class ell;  // for regular families
    mpz_class A, B;
    CoeffVector vec;
};

/// Resolve the identity's progression + coefficient vector (computing the
/// vector from the m-matrix).
IdentityCase identity_case(IdentityId id, int k, int beta, VerifyContext& ctx);

/// RHS of the identity as a series on [0, N): sum_j v_j q^{j-1} E_j where
/// E_j is the identity's eta-quotient power.
Series identity_rhs(IdentityId id, const CoeffVector& vec, long N);

/// Sweep the congruence claim for n = 0..n_max in exact integers
/// (or mod 7^{e+2} when ctx.fast_path, cross-checked on an exact prefix).
VerificationReport verify_congruence(const CongruenceSpec& spec, long n_max,
                                     VerifyContext& ctx);

/// Coefficientwise check of the identity on [0, N).
VerificationReport verify_identity(IdentityId id, int k, int beta, long N, VerifyContext& ctx);

/// Same check with a caller-supplied vector (negative controls).
VerificationReport verify_identity_with_vector(IdentityId id, int k, int beta, long N,
                                               const CoeffVector& vec, VerifyContext& ctx);

/// Numeric check of one induction step of the theorems' proofs: apply the
/// huffing operator to the RHS of the source identity, compare against the
/// 49-scale expansion with the next step's vector, then compress q^7 -> q
/// and compare against the target identity's RHS.
VerificationReport verify_huffing_step(HuffStepId id, int k, int beta, long N,
                                       VerifyContext& ctx);

/// Numeric check of the huffing lemmas at a given i on [0-ish, N).
VerificationReport verify_lemma(LemmaId id, int i, long N, VerifyContext& ctx);

// Suites (deterministic case ordering). The congruence suite runs the
// theorem family at its standard desk-scale ranges unless an explicit
// sweep bound is supplied.
ReportSet congruence_suite(VerifyContext& ctx,
                           std::optional<long> n_max_override = std::nullopt);
ReportSet identity_suite(VerifyContext& ctx, long N = 200, long N_k2 = 50);
ReportSet lemma_suite(VerifyContext& ctx, int i_max = 4, long N = 150, long N_steps = 100);
ReportSet valuation_suite(VerifyContext& ctx);

}  // namespace regular7

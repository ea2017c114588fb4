#include "regular7/verify.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace regular7 {

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

constexpr int kMaxRecordedCounterexamples = 32;
constexpr int kMaxRecordedMismatches = 5;

struct Progression {
    CongruenceSpec::Family family;
    mpz_class ell;
    mpz_class A, B;
};

Progression identity_progression(IdentityId id, int k, int beta) {
    Progression p;
    switch (id) {
        case IdentityId::H1:
            p.family = CongruenceSpec::Family::p;
            p.A = pow7(static_cast<unsigned long>(2 * k - 1));
            p.B = lambda_k(static_cast<unsigned>(2 * k - 1));
            break;
        case IdentityId::H2:
            p.family = CongruenceSpec::Family::p;
            p.A = pow7(static_cast<unsigned long>(2 * k));
            p.B = lambda_k(static_cast<unsigned>(2 * k));
            break;
        case IdentityId::G1: {
            p.family = CongruenceSpec::Family::regular;
            p.ell = pow7(static_cast<unsigned long>(2 * k - 1));
            p.A = pow7(static_cast<unsigned long>(2 * k + 2 * beta - 1));
            p.B = exact_div(18 * p.A - p.ell + 1, 24);
            break;
        }
        case IdentityId::G2: {
            p.family = CongruenceSpec::Family::regular;
            p.ell = pow7(static_cast<unsigned long>(2 * k - 1));
            p.A = pow7(static_cast<unsigned long>(2 * k + 2 * beta));
            p.B = exact_div(6 * p.A - p.ell + 1, 24);
            break;
        }
        case IdentityId::G3: {
            p.family = CongruenceSpec::Family::regular;
            p.ell = pow7(static_cast<unsigned long>(2 * k));
            p.A = pow7(static_cast<unsigned long>(2 * k + beta - 1));
            p.B = p.A - exact_div(p.ell - 1, 24);
            break;
        }
    }
    return p;
}

/// Argument guard: A*(n_max)+B must index a partition table of feasible size.
std::optional<long> guarded_max_argument(const mpz_class& A, const mpz_class& B, long n_max,
                                         long cap) {
    mpz_class m = A * n_max + B;
    if (!m.fits_slong_p() || m.get_si() > cap) return std::nullopt;
    return m.get_si();
}

const PartitionTable& table_for(const Progression& p, long max_arg, VerifyContext& ctx) {
    if (p.family == CongruenceSpec::Family::p) return ctx.tables.p(max_arg);
    return ctx.tables.b(p.ell.get_ui(), max_arg);
}

Series lhs_from_table(const PartitionTable& t, const Progression& p, long N) {
    std::vector<mpz_class> c(static_cast<size_t>(N));
    mpz_class arg;
    for (long n = 0; n < N; ++n) {
        arg = p.A * n + p.B;
        c[static_cast<size_t>(n)] = t.at(arg.get_si());
    }
    return Series(0, std::move(c));
}

// Modular pentagonal recurrence for the congruence fast path.
std::vector<mpz_class> p_mod_table(long n_max, const mpz_class& mod) {
    std::vector<mpz_class> v;
    v.reserve(static_cast<size_t>(n_max) + 1);
    v.push_back(1);
    mpz_class s;
    for (long n = 1; n <= n_max; ++n) {
        s = 0;
        for (long j = 1;; ++j) {
            long g1 = j * (3 * j - 1) / 2;
            if (g1 > n) break;
            const bool plus = (j % 2 == 1);
            if (plus)
                s += v[static_cast<size_t>(n - g1)];
            else
                s -= v[static_cast<size_t>(n - g1)];
            long g2 = j * (3 * j + 1) / 2;
            if (g2 <= n) {
                if (plus)
                    s += v[static_cast<size_t>(n - g2)];
                else
                    s -= v[static_cast<size_t>(n - g2)];
            }
        }
        mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());
        v.push_back(s);
    }
    return v;
}

std::vector<mpz_class> b_mod_table(unsigned long ell, long n_max, const mpz_class& mod,
                                   const std::vector<mpz_class>& p_mod) {
    std::vector<mpz_class> v;
    v.reserve(static_cast<size_t>(n_max) + 1);
    const long l = static_cast<long>(ell);
    mpz_class s;
    for (long n = 0; n <= n_max; ++n) {
        s = p_mod[static_cast<size_t>(n)];
        for (long j = 1;; ++j) {
            long g1 = l * (j * (3 * j - 1) / 2);
            if (g1 > n) break;
            const bool plus = (j % 2 == 0);
            if (plus)
                s += p_mod[static_cast<size_t>(n - g1)];
            else
                s -= p_mod[static_cast<size_t>(n - g1)];
            long g2 = l * (j * (3 * j + 1) / 2);
            if (g2 <= n) {
                if (plus)
                    s += p_mod[static_cast<size_t>(n - g2)];
                else
                    s -= p_mod[static_cast<size_t>(n - g2)];
            }
        }
        mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());
        v.push_back(s);
    }
    return v;
}

void note_extra_counterexamples(VerificationReport& r, long total) {
    if (total > kMaxRecordedCounterexamples) {
        std::ostringstream os;
        os << total << " counterexamples in range, first " << kMaxRecordedCounterexamples
           << " recorded";
        r.note = r.note.empty() ? os.str() : r.note + "; " + os.str();
    }
}

}  // namespace

std::string identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::H1: return "H1";
        case IdentityId::H2: return "H2";
        case IdentityId::G1: return "G1";
        case IdentityId::G2: return "G2";
        case IdentityId::G3: return "G3";
    }
    return "?";
}

std::string huff_step_name(HuffStepId id) {
    switch (id) {
        case HuffStepId::G1_to_G2: return "G1->G2";
        case HuffStepId::G2_to_G1: return "G2->G1";
        case HuffStepId::G3_to_G3: return "G3->G3";
    }
    return "?";
}

std::string lemma_name(LemmaId id) {
    switch (id) {
        case LemmaId::H4i_1: return "H4i-1";
        case LemmaId::H4i_3: return "H4i-3";
        case LemmaId::H4i: return "H4i";
    }
    return "?";
}

IdentityCase identity_case(IdentityId id, int k, int beta, VerifyContext& ctx) {
    Progression p = identity_progression(id, k, beta);
    IdentityCase ic{p.family, p.ell, p.A, p.B, {}};
    switch (id) {
        case IdentityId::H1: ic.vec = x_vector(2 * k - 1, ctx.m, ctx.limits); break;
        case IdentityId::H2: ic.vec = x_vector(2 * k, ctx.m, ctx.limits); break;
        case IdentityId::G1:
            ic.vec = y_odd_chain(k, 2 * beta + 1, ctx.m, ctx.limits).back();
            break;
        case IdentityId::G2:
            ic.vec = y_odd_chain(k, 2 * beta + 2, ctx.m, ctx.limits).back();
            break;
        case IdentityId::G3:
            ic.vec = y_even_chain(k, beta + 1, ctx.m, ctx.limits).back();
            break;
    }
    return ic;
}

Series identity_rhs(IdentityId id, const CoeffVector& vec, long N) {
    if (N < 1) throw std::invalid_argument("identity_rhs: N must be >= 1");
    Series f7 = euler_product(7, N);
    Series f1_inv = inverse(euler_product(1, N));
    Series v = mul(f7, f1_inv);
    Series v4 = pow(v, 4);
    Series w;  // the j = 1 eta-quotient; advancing multiplies by (f7/f1)^4
    switch (id) {
        case IdentityId::H1: w = mul(v4, inverse(f7)); break;  // f7^3 / f1^4
        case IdentityId::H2: w = mul(v4, f1_inv); break;       // f7^4 / f1^5
        case IdentityId::G1: w = pow(v, 3); break;
        case IdentityId::G2: w = v; break;
        case IdentityId::G3: w = v4; break;
    }
    Series acc = Series::zero(0, N);
    for (long j = 1; j <= vec.support(); ++j) {
        if (j - 1 >= N) break;
        if (vec.at(j) != 0) acc = add(acc, scaled(vec.at(j), shift(w, j - 1)));
        if (j < vec.support()) w = mul(w, v4);
    }
    return acc;
}

VerificationReport verify_congruence(const CongruenceSpec& spec, long n_max,
                                     VerifyContext& ctx) {
    Timer timer;
    VerificationReport r;
    r.case_id = spec.source;
    r.params["A"] = spec.A.get_str();
    r.params["B"] = spec.B.get_str();
    r.params["e"] = std::to_string(spec.e);
    if (spec.family == CongruenceSpec::Family::regular) r.params["ell"] = spec.ell.get_str();
    r.params["n_max"] = std::to_string(n_max);
    r.range_checked = "n <= " + std::to_string(n_max) + ": " + spec.claim();

    auto max_arg = guarded_max_argument(spec.A, spec.B, n_max, ctx.table_cap);
    if (!max_arg) {
        r.status = Status::error;
        r.note = "argument A*n_max+B exceeds the configured table cap (" +
                 std::to_string(ctx.table_cap) + ")";
        r.elapsed_ms = timer.ms();
        return r;
    }

    const mpz_class mod = pow7(static_cast<unsigned long>(spec.e));
    mpz_class arg, residue;
    long total_bad = 0;

    if (!ctx.fast_path) {
        Progression p{spec.family, spec.ell, spec.A, spec.B};
        const PartitionTable& t = table_for(p, *max_arg, ctx);
        for (long n = 0; n <= n_max; ++n) {
            arg = spec.A * n + spec.B;
            mpz_fdiv_r(residue.get_mpz_t(), t.at(arg.get_si()).get_mpz_t(), mod.get_mpz_t());
            if (residue != 0) {
                ++total_bad;
                if (total_bad <= kMaxRecordedCounterexamples)
                    r.add_counterexample(n, arg, residue);
                else
                    r.status = Status::fail;
            }
        }
        note_extra_counterexamples(r, total_bad);
        r.elapsed_ms = timer.ms();
        return r;
    }

    // Fast path: sweep mod 7^{e+2}, then cross-check the exact mode on a
    // bounded prefix (about 1% of the range).
    const mpz_class big_mod = pow7(static_cast<unsigned long>(spec.e + 2));
    std::vector<mpz_class> pm = p_mod_table(*max_arg, big_mod);
    std::vector<mpz_class> values;
    if (spec.family == CongruenceSpec::Family::p)
        values = std::move(pm);
    else
        values = b_mod_table(spec.ell.get_ui(), *max_arg, big_mod, pm);

    for (long n = 0; n <= n_max; ++n) {
        arg = spec.A * n + spec.B;
        mpz_fdiv_r(residue.get_mpz_t(), values[static_cast<size_t>(arg.get_si())].get_mpz_t(),
                   mod.get_mpz_t());
        if (residue != 0) {
            ++total_bad;
            if (total_bad <= kMaxRecordedCounterexamples)
                r.add_counterexample(n, arg, residue);
            else
                r.status = Status::fail;
        }
    }
    note_extra_counterexamples(r, total_bad);

    std::ostringstream note;
    note << "fast path mod 7^" << spec.e + 2;
    if (ctx.fast_cross_check) {
        long n_chk = std::min(n_max, std::max(50L, n_max / 100));
        Progression p{spec.family, spec.ell, spec.A, spec.B};
        mpz_class chk_arg = spec.A * n_chk + spec.B;
        const PartitionTable& t = table_for(p, chk_arg.get_si(), ctx);
        mpz_class exact_mod;
        for (long n = 0; n <= n_chk; ++n) {
            arg = spec.A * n + spec.B;
            mpz_fdiv_r(exact_mod.get_mpz_t(), t.at(arg.get_si()).get_mpz_t(),
                       big_mod.get_mpz_t());
            if (exact_mod != values[static_cast<size_t>(arg.get_si())]) {
                r.add_discrepancy("fast-path value at n=" + std::to_string(n),
                                  exact_mod.get_str(),
                                  values[static_cast<size_t>(arg.get_si())].get_str());
                r.status = Status::error;  // implementation bug, not a math finding
            }
        }
        note << "; exact cross-check n <= " << n_chk;
    } else {
        note << "; exact cross-check DISABLED";
    }
    r.note = r.note.empty() ? note.str() : r.note + "; " + note.str();
    r.elapsed_ms = timer.ms();
    return r;
}

VerificationReport verify_identity_with_vector(IdentityId id, int k, int beta, long N,
                                               const CoeffVector& vec, VerifyContext& ctx) {
    Timer timer;
    VerificationReport r;
    {
        std::ostringstream os;
        os << identity_name(id) << "(k=" << k;
        if (id == IdentityId::G1 || id == IdentityId::G2 || id == IdentityId::G3)
            os << ",beta=" << beta;
        os << ")";
        r.case_id = os.str();
    }
    r.params["k"] = std::to_string(k);
    r.params["beta"] = std::to_string(beta);
    r.params["N"] = std::to_string(N);
    r.range_checked = "coefficients [0, " + std::to_string(N) + ")";

    Progression p = identity_progression(id, k, beta);
    auto max_arg = guarded_max_argument(p.A, p.B, N - 1, ctx.table_cap);
    if (!max_arg) {
        r.status = Status::error;
        r.note = "LHS argument A*(N-1)+B exceeds the configured table cap (" +
                 std::to_string(ctx.table_cap) + ")";
        r.elapsed_ms = timer.ms();
        return r;
    }

    Series lhs = lhs_from_table(table_for(p, *max_arg, ctx), p, N);
    Series rhs = identity_rhs(id, vec, N);
    long prec = std::min(lhs.prec(), rhs.prec());
    if (prec < N) {
        r.status = Status::error;
        r.note = "window underflow: RHS truncation " + std::to_string(prec) +
                 " is below the requested N";
        r.elapsed_ms = timer.ms();
        return r;
    }
    int recorded = 0;
    for (long n = first_mismatch(lhs, rhs); n < N && recorded < kMaxRecordedMismatches; ++n) {
        if (lhs.coeff(n) == rhs.coeff(n)) continue;
        r.add_discrepancy("q^" + std::to_string(n), lhs.coeff(n).get_str(),
                          rhs.coeff(n).get_str());
        ++recorded;
    }
    r.elapsed_ms = timer.ms();
    return r;
}

VerificationReport verify_identity(IdentityId id, int k, int beta, long N,
                                   VerifyContext& ctx) {
    IdentityCase ic = identity_case(id, k, beta, ctx);
    return verify_identity_with_vector(id, k, beta, N, ic.vec, ctx);
}

namespace {

/// sum_j v_j q^{shift(j)} (f_49/f_7)^{expo(j)} on the absolute window [0, P7),
/// built with an incremental (f_49/f_7)^4 ladder. expo(j) = 4j + c.
Series scale49_sum(const CoeffVector& vec, long P7, int expo_c,
                   const std::function<long(long)>& shift_of) {
    Series f49 = euler_product(49, P7);
    Series f7_inv = inverse(euler_product(7, P7));
    Series u = mul(f49, f7_inv);
    Series u4 = pow(u, 4);
    Series w;  // (f49/f7)^{4+c} for j = 1
    switch (expo_c) {
        case -3: w = u; break;
        case -1: w = pow(u, 3); break;
        case 0: w = u4; break;
        default: throw std::logic_error("scale49_sum: unsupported exponent offset");
    }
    Series acc = Series::zero(0, P7);
    for (long j = 1; j <= vec.support(); ++j) {
        if (shift_of(j) >= P7) break;
        if (vec.at(j) != 0) acc = add(acc, scaled(vec.at(j), shift(w, shift_of(j))));
        if (j < vec.support()) w = mul(w, u4);
    }
    return acc;
}

void compare_series(VerificationReport& r, const Series& a, const Series& b,
                    const std::string& side) {
    long n = first_mismatch(a, b);
    long prec = std::min(a.prec(), b.prec());
    int recorded = 0;
    for (; n < prec && recorded < kMaxRecordedMismatches; ++n) {
        if (a.coeff(n) == b.coeff(n)) continue;
        r.add_discrepancy(side + " q^" + std::to_string(n), a.coeff(n).get_str(),
                          b.coeff(n).get_str());
        ++recorded;
    }
}

}  // namespace

VerificationReport verify_huffing_step(HuffStepId id, int k, int beta, long N,
                                       VerifyContext& ctx) {
    Timer timer;
    VerificationReport r;
    {
        std::ostringstream os;
        os << "huff-step " << huff_step_name(id) << "(k=" << k << ",beta=" << beta << ")";
        r.case_id = os.str();
    }
    r.params["k"] = std::to_string(k);
    r.params["beta"] = std::to_string(beta);
    r.params["N"] = std::to_string(N);
    r.range_checked = "compressed coefficients [0, " + std::to_string(N) + ")";
    const long P7 = 7 * N + 8;

    switch (id) {
        case HuffStepId::G1_to_G2: {
            auto chain = y_odd_chain(k, 2 * beta + 2, ctx.m, ctx.limits);
            const CoeffVector& ya = chain[static_cast<size_t>(2 * beta)];
            const CoeffVector& yb = chain[static_cast<size_t>(2 * beta + 1)];
            // H(q^{-1} RHS_G1) = sum_j y_{2b+2,j} q^{7j-7} (f49/f7)^{4j-3}
            Series lhs = huff(shift(identity_rhs(IdentityId::G1, ya, P7), -1));
            Series mid = scale49_sum(yb, P7, -3, [](long j) { return 7 * j - 7; });
            compare_series(r, lhs, mid, "huffed");
            Series compressed = extract_progression(mid, 7, 0);
            compare_series(r, compressed, identity_rhs(IdentityId::G2, yb, N), "compressed");
            break;
        }
        case HuffStepId::G2_to_G1: {
            auto chain = y_odd_chain(k, 2 * beta + 3, ctx.m, ctx.limits);
            const CoeffVector& ya = chain[static_cast<size_t>(2 * beta + 1)];
            const CoeffVector& yb = chain[static_cast<size_t>(2 * beta + 2)];
            // H(q^{2} RHS_G2) = sum_j y_{2b+3,j} q^{7j} (f49/f7)^{4j-1},
            // which compresses to q * RHS_G1 at beta+1.
            Series lhs = huff(shift(identity_rhs(IdentityId::G2, ya, P7), 2));
            Series mid = scale49_sum(yb, P7, -1, [](long j) { return 7 * j; });
            compare_series(r, lhs, mid, "huffed");
            Series compressed = extract_progression(mid, 7, 0);
            compare_series(r, compressed, shift(identity_rhs(IdentityId::G1, yb, N), 1),
                           "compressed");
            break;
        }
        case HuffStepId::G3_to_G3: {
            auto chain = y_even_chain(k, beta + 2, ctx.m, ctx.limits);
            const CoeffVector& ya = chain[static_cast<size_t>(beta)];
            const CoeffVector& yb = chain[static_cast<size_t>(beta + 1)];
            // H(q RHS_G3) = sum_j y_{b+2,j} q^{7j} (f49/f7)^{4j}.
            Series lhs = huff(shift(identity_rhs(IdentityId::G3, ya, P7), 1));
            Series mid = scale49_sum(yb, P7, 0, [](long j) { return 7 * j; });
            compare_series(r, lhs, mid, "huffed");
            Series compressed = extract_progression(mid, 7, 0);
            compare_series(r, compressed, shift(identity_rhs(IdentityId::G3, yb, N), 1),
                           "compressed");
            break;
        }
    }
    r.elapsed_ms = timer.ms();
    return r;
}

VerificationReport verify_lemma(LemmaId id, int i, long N, VerifyContext& ctx) {
    Timer timer;
    VerificationReport r;
    {
        std::ostringstream os;
        os << "lemma " << lemma_name(id) << "(i=" << i << ")";
        r.case_id = os.str();
    }
    r.params["i"] = std::to_string(i);
    r.params["N"] = std::to_string(N);
    r.range_checked = "coefficients up to q^" + std::to_string(N);

    int row;
    long prefactor;
    int expo_c;       // (f49/f7)^{4j+c} on the right
    int col_off;      // matrix column i+j-1 or i+j
    long rhs_shift0;  // q^{7j-7} or q^{7j}
    switch (id) {
        case LemmaId::H4i_1:
            row = 4 * i - 1;
            prefactor = i - 2;
            expo_c = -3;
            col_off = -1;
            rhs_shift0 = -7;
            break;
        case LemmaId::H4i_3:
            row = 4 * i - 3;
            prefactor = i + 1;
            expo_c = -1;
            col_off = -1;
            rhs_shift0 = 0;
            break;
        case LemmaId::H4i:
            row = 4 * i;
            prefactor = i;
            expo_c = 0;
            col_off = 0;
            rhs_shift0 = 0;
            break;
        default: throw std::logic_error("verify_lemma: bad id");
    }
    ctx.m.ensure_rows(row);
    int numer_exp = 4 * i + (id == LemmaId::H4i_1 ? -1 : id == LemmaId::H4i_3 ? -3 : 0);
    Series lhs =
        huff(shift(expand_to({0, {{7, numer_exp}, {1, -numer_exp}}}, N), prefactor));

    // Row entries as a vector indexed by j: m_{row, i+j+col_off}.
    CoeffVector row_vec;
    row_vec.entries.clear();
    for (long j = 1; i + j + col_off <= MTable::support_bound(row); ++j)
        row_vec.entries.push_back(ctx.m.entry(row, i + j + col_off));
    Series rhs = scale49_sum(row_vec, N, expo_c,
                             [rhs_shift0](long j) { return 7 * j + rhs_shift0; });
    compare_series(r, lhs, rhs, "");
    r.elapsed_ms = timer.ms();
    return r;
}

ReportSet congruence_suite(VerifyContext& ctx, std::optional<long> n_max_override) {
    auto n = [&](long dflt) { return n_max_override.value_or(dflt); };
    ReportSet rs;
    rs.add(verify_congruence(spec_watson(1, WatsonParity::odd), n(1000), ctx));
    rs.add(verify_congruence(spec_watson(1, WatsonParity::even), n(1000), ctx));
    rs.add(verify_congruence(spec_c1(1, 0), n(1000), ctx));
    rs.add(verify_congruence(spec_c1(1, 1), n(200), ctx));
    rs.add(verify_congruence(spec_c1(2, 0), n(200), ctx));
    rs.add(verify_congruence(spec_c3(1, 0), n(1000), ctx));
    rs.add(verify_congruence(spec_c3(1, 1), n(500), ctx));
    rs.add(verify_congruence(spec_c3(2, 0), n(200), ctx));
    return rs;
}

ReportSet identity_suite(VerifyContext& ctx, long N, long N_k2) {
    ReportSet rs;
    rs.add(verify_identity(IdentityId::H1, 1, 0, N, ctx));
    rs.add(verify_identity(IdentityId::H2, 1, 0, N, ctx));
    rs.add(verify_identity(IdentityId::G1, 1, 0, N, ctx));
    rs.add(verify_identity(IdentityId::G1, 1, 1, N, ctx));
    rs.add(verify_identity(IdentityId::G2, 1, 0, N, ctx));
    rs.add(verify_identity(IdentityId::G2, 1, 1, N, ctx));
    rs.add(verify_identity(IdentityId::G3, 1, 0, N, ctx));
    rs.add(verify_identity(IdentityId::G3, 1, 1, N, ctx));
    rs.add(verify_identity(IdentityId::G3, 1, 2, N, ctx));
    rs.add(verify_identity(IdentityId::H1, 2, 0, N_k2, ctx));
    return rs;
}

ReportSet lemma_suite(VerifyContext& ctx, int i_max, long N, long N_steps) {
    ReportSet rs;
    for (int i = 1; i <= i_max; ++i) {
        rs.add(verify_lemma(LemmaId::H4i_1, i, N, ctx));
        rs.add(verify_lemma(LemmaId::H4i_3, i, N, ctx));
        rs.add(verify_lemma(LemmaId::H4i, i, N, ctx));
    }
    rs.add(verify_huffing_step(HuffStepId::G1_to_G2, 1, 0, N_steps, ctx));
    rs.add(verify_huffing_step(HuffStepId::G2_to_G1, 1, 0, N_steps, ctx));
    rs.add(verify_huffing_step(HuffStepId::G3_to_G3, 1, 0, N_steps, ctx));
    return rs;
}

ReportSet valuation_suite(VerifyContext& ctx) {
    ReportSet rs;

    {
        Timer t;
        ctx.m.ensure_rows(20);
        VerificationReport r = check_pmij(ctx.m);
        r.case_id = "pmij(rows<=20)";
        r.elapsed_ms = t.ms();
        rs.add(std::move(r));
    }
    for (int k = 1; k <= 4; ++k) {
        Timer t;
        VerificationReport r;
        try {
            CoeffVector v = x_vector(k, ctx.m, ctx.limits);
            r = check_valuation_bounds(v);
        } catch (const infeasible_error& e) {
            r.status = Status::infeasible;
            r.note = e.what();
        }
        r.case_id = "pi1/pi11: x_" + std::to_string(k);
        r.elapsed_ms = t.ms();
        rs.add(std::move(r));
    }
    for (int k = 1; k <= 2; ++k) {
        ChainResult cr = y_odd_chain_upto(k, 5, ctx.m, ctx.limits);
        for (const auto& step : cr.steps) {
            Timer t;
            VerificationReport r = check_valuation_bounds(step);
            r.case_id = "pi4/pi5: " + step.label();
            r.elapsed_ms = t.ms();
            rs.add(std::move(r));
        }
        for (int s = static_cast<int>(cr.steps.size()) + 1; s <= 5; ++s) {
            VerificationReport r;
            r.case_id = "pi4/pi5: y^(" + std::to_string(2 * k - 1) + ")_" + std::to_string(s);
            r.status = Status::infeasible;
            r.note = cr.stopped_reason;
            rs.add(std::move(r));
        }
    }
    for (int k = 1; k <= 2; ++k) {
        ChainResult cr = y_even_chain_upto(k, 4, ctx.m, ctx.limits);  // beta <= 3
        for (const auto& step : cr.steps) {
            Timer t;
            VerificationReport r = check_valuation_bounds(step);
            r.case_id = "pi6: " + step.label();
            r.elapsed_ms = t.ms();
            rs.add(std::move(r));
        }
        for (int s = static_cast<int>(cr.steps.size()) + 1; s <= 4; ++s) {
            VerificationReport r;
            r.case_id = "pi6: y^(" + std::to_string(2 * k) + ")_" + std::to_string(s);
            r.status = Status::infeasible;
            r.note = cr.stopped_reason;
            rs.add(std::move(r));
        }
    }
    return rs;
}

}  // namespace regular7

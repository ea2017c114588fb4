#include "regular7/coeffvec.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "regular7/valuation.hpp"

namespace regular7 {

namespace {
const mpz_class kZero = 0;

long support_of(const std::vector<mpz_class>& v) {
    for (size_t i = v.size(); i > 0; --i)
        if (v[i - 1] != 0) return static_cast<long>(i);
    return 0;
}

void trim(std::vector<mpz_class>& v) {
    v.resize(static_cast<size_t>(support_of(v)));
}

long chain_row(Family f, int step, long s) {
    switch (f) {
        case Family::x: return step % 2 == 1 ? 4 * s : 4 * s + 1;
        case Family::y_odd: return step % 2 == 1 ? 4 * s - 1 : 4 * s - 3;
        case Family::y_even: return 4 * s;
    }
    return 0;
}

// col_d: output entry j reads column s + j - col_d of the matrix row.
int chain_col_d(Family f) { return f == Family::y_odd ? 1 : 0; }

// One application of the linear recursion: out[j] = sum_s cur[s] * m_{row(s), s+j-d}.
std::vector<mpz_class> apply_step(const std::vector<mpz_class>& cur, Family f, int step,
                                  MTable& m, const SweepLimits& limits,
                                  const std::string& what) {
    long supp = support_of(cur);
    if (supp == 0) return {};
    const int d = chain_col_d(f);
    long max_row = 0, out_max = 0;
    for (long s = 1; s <= supp; ++s) {
        if (cur[static_cast<size_t>(s - 1)] == 0) continue;
        long r = chain_row(f, step, s);
        max_row = std::max(max_row, r);
        out_max = std::max(out_max, 2 * r - s + d);
    }
    if (out_max < 1) return {};
    std::vector<mpz_class> out(static_cast<size_t>(out_max));

    auto fold_row = [&](long s, long r, auto&& col_at) {
        const mpz_class& ys = cur[static_cast<size_t>(s - 1)];
        long j_hi = std::min(out_max, 2 * r - s + d);
        for (long j = 1; j <= j_hi; ++j) {
            const mpz_class& mv = col_at(s + j - d);
            if (mv != 0)
                mpz_addmul(out[static_cast<size_t>(j - 1)].get_mpz_t(), ys.get_mpz_t(),
                           mv.get_mpz_t());
        }
    };

    if (max_row <= limits.materialize_row_cap) {
        m.ensure_rows(static_cast<int>(max_row));
        for (long s = 1; s <= supp; ++s) {
            if (cur[static_cast<size_t>(s - 1)] == 0) continue;
            long r = chain_row(f, step, s);
            fold_row(s, r, [&](long col) -> const mpz_class& {
                return m.entry(static_cast<int>(r), col);
            });
        }
    } else if (max_row <= limits.wave_row_cap) {
        std::map<long, long> s_of_row;  // chain_row is injective in s
        for (long s = 1; s <= supp; ++s)
            if (cur[static_cast<size_t>(s - 1)] != 0) s_of_row[chain_row(f, step, s)] = s;
        m.wave(static_cast<int>(max_row), [&](int i, std::span<const mpz_class> row) {
            auto it = s_of_row.find(i);
            if (it == s_of_row.end()) return;
            fold_row(it->second, i, [&](long col) -> const mpz_class& {
                return (col >= 1 && col <= static_cast<long>(row.size()))
                           ? row[static_cast<size_t>(col - 1)]
                           : kZero;
            });
        });
    } else {
        std::ostringstream os;
        os << what << ": needs matrix rows up to " << max_row << " (wave cap " << limits.wave_row_cap
           << "); entry sizes grow like 7^(3i) per row, beyond desk scale";
        throw infeasible_error(os.str(), max_row, limits.wave_row_cap);
    }
    trim(out);
    return out;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::x: return "x";
        case Family::y_odd: return "y_odd";
        case Family::y_even: return "y_even";
    }
    return "unknown";
}

long CoeffVector::support() const { return support_of(entries); }

const mpz_class& CoeffVector::at(long j) const {
    if (j < 1) throw std::out_of_range("CoeffVector::at: j must be >= 1");
    if (j > static_cast<long>(entries.size())) return kZero;
    return entries[static_cast<size_t>(j - 1)];
}

std::string CoeffVector::label() const {
    std::ostringstream os;
    switch (family) {
        case Family::x: os << "x_" << index; break;
        case Family::y_odd: os << "y^(" << 2 * k - 1 << ")_" << index; break;
        case Family::y_even: os << "y^(" << 2 * k << ")_" << index; break;
    }
    return os.str();
}

CoeffVector x_vector(int k, MTable& m, const SweepLimits& limits) {
    if (k < 1) throw std::invalid_argument("x_vector: k must be >= 1");
    CoeffVector v;
    v.family = Family::x;
    v.k = k;
    v.index = 1;
    v.entries = {mpz_class(7), mpz_class(49)};  // x_1 = (7, 7^2, 0, ...)
    for (int t = 1; t < k; ++t) {
        v.entries = apply_step(v.entries, Family::x, t, m, limits, "x_" + std::to_string(t + 1));
        v.index = t + 1;
    }
    return v;
}

namespace {

ChainResult chain_upto(Family f, int k, int steps, MTable& m, const SweepLimits& limits) {
    if (k < 1 || steps < 1) throw std::invalid_argument("chain: k, steps must be >= 1");
    ChainResult res;
    CoeffVector base;  // step 1 is x_{2k-1} for both families
    try {
        base = x_vector(2 * k - 1, m, limits);
    } catch (const infeasible_error& e) {
        res.stopped_reason = e.what();
        res.rows_needed = e.rows_needed;
        return res;
    }
    res.steps.push_back({f, k, 1, base.entries});
    for (int s = 1; s < steps; ++s) {
        CoeffVector next{f, k, s + 1, {}};
        try {
            next.entries =
                apply_step(res.steps.back().entries, f, s, m, limits, next.label());
        } catch (const infeasible_error& e) {
            res.stopped_reason = e.what();
            res.rows_needed = e.rows_needed;
            return res;
        }
        res.steps.push_back(std::move(next));
    }
    return res;
}

std::vector<CoeffVector> chain_strict(Family f, int k, int steps, MTable& m,
                                      const SweepLimits& limits) {
    ChainResult res = chain_upto(f, k, steps, m, limits);
    if (!res.stopped_reason.empty())
        throw infeasible_error(res.stopped_reason, res.rows_needed, limits.wave_row_cap);
    return std::move(res.steps);
}

}  // namespace

std::vector<CoeffVector> y_odd_chain(int k, int steps, MTable& m, const SweepLimits& limits) {
    return chain_strict(Family::y_odd, k, steps, m, limits);
}

std::vector<CoeffVector> y_even_chain(int k, int steps, MTable& m, const SweepLimits& limits) {
    return chain_strict(Family::y_even, k, steps, m, limits);
}

ChainResult y_odd_chain_upto(int k, int steps, MTable& m, const SweepLimits& limits) {
    return chain_upto(Family::y_odd, k, steps, m, limits);
}

ChainResult y_even_chain_upto(int k, int steps, MTable& m, const SweepLimits& limits) {
    return chain_upto(Family::y_even, k, steps, m, limits);
}

long valuation_floor(const CoeffVector& v, long j) {
    switch (v.family) {
        case Family::x:
            if (v.index == 1) return j == 1 ? 1 : 2;  // exact values, asserted separately
            if (v.index % 2 == 1)
                return (v.index - 1) / 2 + 1 + floor_div(7 * j - 4, 4);
            return v.index / 2 + 1 + floor_div(7 * j - 6, 4);
        case Family::y_odd: {
            int beta = (v.index % 2 == 1) ? (v.index - 1) / 2 : (v.index - 2) / 2;
            return v.k + beta + floor_div(7 * j - 7, 4);
        }
        case Family::y_even:
            return v.k + (v.index - 1) + floor_div(7 * j - 7, 4);
    }
    return 0;
}

VerificationReport check_valuation_bounds(const CoeffVector& v) {
    VerificationReport r;
    r.case_id = v.label() + " valuation bounds";
    r.params["family"] = family_name(v.family);
    r.params["k"] = std::to_string(v.k);
    r.params["index"] = std::to_string(v.index);
    std::ostringstream range;
    range << "entries j = 1.." << v.support();
    r.range_checked = range.str();

    const bool exact_x1 = (v.family == Family::x && v.index == 1);
    for (long j = 1; j <= v.support(); ++j) {
        const mpz_class& e = v.at(j);
        Valuation val = pi7(e);
        std::ostringstream loc;
        loc << v.label() << "[" << j << "]";
        if (exact_x1) {
            // pi(x_{1,1}) = 1 and pi(x_{1,2}) = 2 exactly.
            Valuation want = Valuation::of(j == 1 ? 1 : 2);
            if (!(val == want))
                r.add_discrepancy(loc.str(), "pi = " + want.to_string(),
                                  "pi = " + val.to_string());
            continue;
        }
        long bound = valuation_floor(v, j);
        if (!val.at_least(bound))
            r.add_discrepancy(loc.str(), "pi >= " + std::to_string(bound),
                              "pi = " + val.to_string());
    }
    return r;
}

}  // namespace regular7

#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace regular7 {

/**
 * Truncated Laurent series over arbitrary-precision integers.
 *
 * A Series knows the coefficient of q^n exactly for every n < prec():
 * below offset() the coefficient is zero by construction, on
 * [offset, prec) it is stored, and at prec and above it is unknown
 * (not zero). Every operation propagates the tightest window derivable
 * from its inputs, so a coefficient is never reported unless it is
 * provable from the operands. An empty window (offset == prec) is a
 * valid value and propagates through arithmetic.
 *
 * Series values are immutable after construction; all operations are
 * pure functions and safe to share across threads.
 */
class Series {
public:
    Series() : offset_(0) {}
    Series(long offset, std::vector<mpz_class> coeffs)
        : offset_(offset), c_(std::move(coeffs)) {}

    static Series zero(long offset, long prec);
    /// The constant series 1 on the window [0, prec).
    static Series one(long prec);

    long offset() const { return offset_; }
    long prec() const { return offset_ + static_cast<long>(c_.size()); }
    long length() const { return static_cast<long>(c_.size()); }
    bool empty_window() const { return c_.empty(); }

    /// Coefficient of q^n. Zero below the window; throws at or above prec.
    const mpz_class& coeff(long n) const;

    const std::vector<mpz_class>& coeffs() const { return c_; }

    /// Lowest exponent with a nonzero stored coefficient, or prec() if none.
    long lowest_nonzero() const;

    std::string to_string(int max_terms = 12) const;

private:
    long offset_;
    std::vector<mpz_class> c_;
};

// Exact ring operations. Window rules:
//   add/sub: offset = min(offsets), prec = min(precs)
//   mul:     offset = sum of offsets, prec = min(a.prec + b.offset, b.prec + a.offset)
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series neg(const Series& a);
Series mul(const Series& a, const Series& b);
Series scaled(const mpz_class& k, const Series& a);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return neg(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

/// Multiplicative inverse. Requires the lowest nonzero coefficient to be
/// +-1 (otherwise the inverse is not integral) and a nonempty window;
/// throws std::domain_error otherwise.
Series inverse(const Series& a);

/// Integer power by repeated squaring; negative exponents go through
/// inverse() and inherit its precondition. pow(a, 0) is 1.
Series pow(const Series& a, long e);

/// Multiplication by q^d: shifts the window, coefficients unchanged.
Series shift(const Series& a, long d);

/// Huffing operator H: zeroes every coefficient whose exponent is not
/// divisible by 7, exponents left in place. Window unchanged.
Series huff(const Series& a);

/// Sum_n c(A n + B) q^n over all n with A n + B inside a's window.
/// Requires A >= 1. The result window may be empty.
Series extract_progression(const Series& a, long A, long B);

/// f_r = (q^r; q^r)_inf = prod_{m>=1} (1 - q^{rm}) on [0, prec), expanded
/// sparsely by the pentagonal number theorem. Requires r >= 1, prec >= 1.
Series euler_product(long r, long prec);

/// q^d * prod_r f_r^{e_r}. Scales must be distinct and positive.
/// Always expandable: each f_r has constant term 1.
struct EtaQuotientSpec {
    long leading_power = 0;                          // the explicit q^d prefactor
    std::vector<std::pair<long, long>> factors;      // (scale r, exponent e)
};

/// Expansion with prec coefficients: window [d, d + prec).
Series expand(const EtaQuotientSpec& spec, long prec);

/// Expansion up to an absolute exponent bound: window [d, abs_prec).
Series expand_to(const EtaQuotientSpec& spec, long abs_prec);

/// Window-aware equality: compares every exponent below min(precs),
/// treating positions below either offset as zero. Throws
/// std::invalid_argument when the common window is empty.
bool equal_on_common_window(const Series& a, const Series& b);

/// First exponent (below min(precs)) where a and b differ, or prec of the
/// common window if they agree. Same emptiness precondition as equality.
long first_mismatch(const Series& a, const Series& b);

/// JSON form {offset, prec, coeffs: [decimal strings]}.
nlohmann::json series_to_json(const Series& a);

}  // namespace regular7

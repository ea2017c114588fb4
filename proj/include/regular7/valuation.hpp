#pragma once

#include <gmpxx.h>

#include <string>

namespace regular7 {

/// 7-adic valuation: the exponent of the highest power of 7 dividing n,
/// with pi(0) = +infinity.
struct Valuation {
    bool infinite = false;
    unsigned long v = 0;

    static Valuation inf() { return {true, 0}; }
    static Valuation of(unsigned long value) { return {false, value}; }

    /// pi >= bound, with +infinity above everything (a bound <= 0 is vacuous).
    bool at_least(long bound) const {
        return infinite || static_cast<long>(v) >= bound;
    }

    bool operator==(const Valuation& o) const {
        return infinite == o.infinite && (infinite || v == o.v);
    }

    std::string to_string() const { return infinite ? "inf" : std::to_string(v); }
};

Valuation pi7(const mpz_class& n);

/// Floor division (rounds toward -infinity); the bracket in the valuation bounds.
long floor_div(long a, long b);

}  // namespace regular7

#pragma once

// Test-only oracles, deliberately independent of the library's computation
// paths: dynamic-programming partition counters (coin-style over allowed
// parts) and a naive polynomial multiplier for expanding small products by
// hand. Everything here is brute force.

#include <gmpxx.h>

#include <vector>

namespace oracles {

/// p(0..n_max) by the coin DP over parts 1..n_max.
inline std::vector<mpz_class> dp_partitions(long n_max) {
    std::vector<mpz_class> dp(static_cast<size_t>(n_max) + 1);
    dp[0] = 1;
    for (long part = 1; part <= n_max; ++part)
        for (long m = part; m <= n_max; ++m)
            dp[static_cast<size_t>(m)] += dp[static_cast<size_t>(m - part)];
    return dp;
}

/// b_ell(0..n_max) by the coin DP over parts not divisible by ell.
inline std::vector<mpz_class> dp_regular(long ell, long n_max) {
    std::vector<mpz_class> dp(static_cast<size_t>(n_max) + 1);
    dp[0] = 1;
    for (long part = 1; part <= n_max; ++part) {
        if (part % ell == 0) continue;
        for (long m = part; m <= n_max; ++m)
            dp[static_cast<size_t>(m)] += dp[static_cast<size_t>(m - part)];
    }
    return dp;
}

/// Coefficients of prod_{m=1}^{terms} (1 - q^{r m}) below q^prec, expanded
/// term by term with a schoolbook multiply.
inline std::vector<mpz_class> naive_euler(long r, long terms, long prec) {
    std::vector<mpz_class> c(static_cast<size_t>(prec));
    c[0] = 1;
    for (long m = 1; m <= terms; ++m) {
        std::vector<mpz_class> next(c);
        for (long n = r * m; n < prec; ++n)
            next[static_cast<size_t>(n)] -= c[static_cast<size_t>(n - r * m)];
        c = std::move(next);
    }
    return c;
}

}  // namespace oracles

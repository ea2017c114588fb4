#pragma once

#include <gmpxx.h>

#include <string>

namespace regular7 {

/// A claim "c(A n + B) == 0 (mod 7^e)" where c is p or b_{7^m}.
struct CongruenceSpec {
    enum class Family { p, regular };
    Family family = Family::p;
    mpz_class ell;  // the regularity modulus 7^m (unset for family p)
    mpz_class A;    // progression step, >= 1
    mpz_class B;    // progression residue, >= 0 (may exceed A; used as-is)
    int e = 1;      // modulus exponent
    std::string source;

    std::string claim() const;  // human-readable statement
};

/// Exact quotient num/den; throws std::domain_error if den does not divide num.
mpz_class exact_div(const mpz_class& num, const mpz_class& den);

/// b_{7^{2k-1}}(7^{2k+2b-1} n + (18*7^{2k+2b-1} - 7^{2k-1} + 1)/24) == 0 (mod 7^{k+b})
CongruenceSpec spec_c1(int k, int beta);

/// b_{7^{2k}}(7^{2k+b-1} (n+1) - (7^{2k} - 1)/24) == 0 (mod 7^{k+b})
CongruenceSpec spec_c3(int k, int beta);

enum class WatsonParity { odd, even };

/// p(7^{2k-1} n + lambda_{2k-1}) == 0 (mod 7^k) and
/// p(7^{2k} n + lambda_{2k}) == 0 (mod 7^{k+1}).
CongruenceSpec spec_watson(int k, WatsonParity parity);

}  // namespace regular7

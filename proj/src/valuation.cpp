#include "regular7/valuation.hpp"

namespace regular7 {

Valuation pi7(const mpz_class& n) {
    if (n == 0) return Valuation::inf();
    mpz_class reduced;
    mpz_class seven = 7;
    unsigned long v =
        mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), seven.get_mpz_t());
    return Valuation::of(v);
}

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace regular7

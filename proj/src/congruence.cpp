#include "regular7/congruence.hpp"

#include <sstream>
#include <stdexcept>

#include "regular7/partitions.hpp"

namespace regular7 {

std::string CongruenceSpec::claim() const {
    std::ostringstream os;
    if (family == Family::p)
        os << "p(";
    else
        os << "b_" << ell.get_str() << "(";
    os << A.get_str() << "n + " << B.get_str() << ") == 0 (mod 7^" << e << ")";
    return os.str();
}

mpz_class exact_div(const mpz_class& num, const mpz_class& den) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0)
        throw std::domain_error("exact_div: " + den.get_str() + " does not divide " +
                                num.get_str());
    return q;
}

CongruenceSpec spec_c1(int k, int beta) {
    if (k < 1 || beta < 0) throw std::invalid_argument("spec_c1: need k >= 1, beta >= 0");
    CongruenceSpec s;
    s.family = CongruenceSpec::Family::regular;
    s.ell = pow7(static_cast<unsigned long>(2 * k - 1));
    s.A = pow7(static_cast<unsigned long>(2 * k + 2 * beta - 1));
    s.B = exact_div(18 * s.A - s.ell + 1, 24);
    s.e = k + beta;
    std::ostringstream os;
    os << "c1(k=" << k << ",beta=" << beta << ")";
    s.source = os.str();
    return s;
}

CongruenceSpec spec_c3(int k, int beta) {
    if (k < 1 || beta < 0) throw std::invalid_argument("spec_c3: need k >= 1, beta >= 0");
    CongruenceSpec s;
    s.family = CongruenceSpec::Family::regular;
    s.ell = pow7(static_cast<unsigned long>(2 * k));
    s.A = pow7(static_cast<unsigned long>(2 * k + beta - 1));
    s.B = s.A - exact_div(s.ell - 1, 24);
    s.e = k + beta;
    std::ostringstream os;
    os << "c3(k=" << k << ",beta=" << beta << ")";
    s.source = os.str();
    return s;
}

CongruenceSpec spec_watson(int k, WatsonParity parity) {
    if (k < 1) throw std::invalid_argument("spec_watson: need k >= 1");
    CongruenceSpec s;
    s.family = CongruenceSpec::Family::p;
    if (parity == WatsonParity::odd) {
        s.A = pow7(static_cast<unsigned long>(2 * k - 1));
        s.B = lambda_k(static_cast<unsigned>(2 * k - 1));
        s.e = k;
    } else {
        s.A = pow7(static_cast<unsigned long>(2 * k));
        s.B = lambda_k(static_cast<unsigned>(2 * k));
        s.e = k + 1;
    }
    std::ostringstream os;
    os << "watson(k=" << k << "," << (parity == WatsonParity::odd ? "odd" : "even") << ")";
    s.source = os.str();
    return s;
}

}  // namespace regular7

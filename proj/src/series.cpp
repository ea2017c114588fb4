#include "regular7/series.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace regular7 {

namespace {
const mpz_class kZero = 0;
}

Series Series::zero(long offset, long prec) {
    if (prec < offset) throw std::invalid_argument("Series::zero: prec < offset");
    return Series(offset, std::vector<mpz_class>(static_cast<size_t>(prec - offset)));
}

Series Series::one(long prec) {
    if (prec < 1) throw std::invalid_argument("Series::one: prec must be >= 1");
    std::vector<mpz_class> c(static_cast<size_t>(prec));
    c[0] = 1;
    return Series(0, std::move(c));
}

const mpz_class& Series::coeff(long n) const {
    if (n < offset_) return kZero;
    if (n >= prec()) throw std::out_of_range("Series::coeff: exponent beyond window");
    return c_[static_cast<size_t>(n - offset_)];
}

long Series::lowest_nonzero() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return offset_ + static_cast<long>(i);
    return prec();
}

std::string Series::to_string(int max_terms) const {
    std::ostringstream os;
    int shown = 0;
    bool first = true;
    for (size_t i = 0; i < c_.size() && shown < max_terms; ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << c_[i].get_str() << "*q^" << offset_ + static_cast<long>(i);
        first = false;
        ++shown;
    }
    if (first) os << "0";
    os << "  [" << offset_ << ", " << prec() << ")";
    return os.str();
}

namespace {

Series add_impl(const Series& a, const Series& b, bool subtract) {
    long off = std::min(a.offset(), b.offset());
    long prec = std::min(a.prec(), b.prec());
    if (prec <= off) return Series(off, {});
    std::vector<mpz_class> c(static_cast<size_t>(prec - off));
    for (long n = off; n < prec; ++n) {
        mpz_class& out = c[static_cast<size_t>(n - off)];
        out = a.coeff(n);
        if (subtract)
            out -= b.coeff(n);
        else
            out += b.coeff(n);
    }
    return Series(off, std::move(c));
}

}  // namespace

Series add(const Series& a, const Series& b) { return add_impl(a, b, false); }
Series sub(const Series& a, const Series& b) { return add_impl(a, b, true); }

Series neg(const Series& a) {
    std::vector<mpz_class> c(a.coeffs());
    for (auto& v : c) v = -v;
    return Series(a.offset(), std::move(c));
}

Series mul(const Series& a, const Series& b) {
    long off = a.offset() + b.offset();
    long prec = std::min(a.prec() + b.offset(), b.prec() + a.offset());
    if (prec <= off || a.empty_window() || b.empty_window())
        return Series(std::min(off, prec), {});
    size_t n = static_cast<size_t>(prec - off);
    std::vector<mpz_class> c(n);
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    for (size_t i = 0; i < ac.size(); ++i) {
        if (i >= n) break;
        if (ac[i] == 0) continue;
        size_t lim = std::min(bc.size(), n - i);
        const mpz_class& va = ac[i];
        for (size_t j = 0; j < lim; ++j) {
            if (bc[j] == 0) continue;
            mpz_addmul(c[i + j].get_mpz_t(), va.get_mpz_t(), bc[j].get_mpz_t());
        }
    }
    return Series(off, std::move(c));
}

Series scaled(const mpz_class& k, const Series& a) {
    std::vector<mpz_class> c(a.coeffs());
    for (auto& v : c) v *= k;
    return Series(a.offset(), std::move(c));
}

Series inverse(const Series& a) {
    long m = a.lowest_nonzero();
    if (m >= a.prec())
        throw std::domain_error("inverse: series has no nonzero coefficient in window");
    const mpz_class& lead = a.coeff(m);
    if (lead != 1 && lead != -1)
        throw std::domain_error("inverse: lowest nonzero coefficient is not a unit");
    size_t len = static_cast<size_t>(a.prec() - m);
    std::vector<mpz_class> b(len);
    b[0] = lead;  // 1/lead == lead for +-1
    mpz_class acc;
    for (size_t t = 1; t < len; ++t) {
        acc = 0;
        for (size_t u = 1; u <= t; ++u) {
            const mpz_class& au = a.coeff(m + static_cast<long>(u));
            if (au == 0) continue;
            mpz_addmul(acc.get_mpz_t(), au.get_mpz_t(), b[t - u].get_mpz_t());
        }
        b[t] = -lead * acc;
    }
    return Series(-m, std::move(b));
}

Series pow(const Series& a, long e) {
    if (e < 0) return pow(inverse(a), -e);
    if (e == 0) return Series::one(std::max<long>(a.length(), 1));
    Series base = a;
    Series result;
    bool have = false;
    unsigned long ee = static_cast<unsigned long>(e);
    while (ee != 0) {
        if (ee & 1UL) {
            result = have ? mul(result, base) : base;
            have = true;
        }
        ee >>= 1;
        if (ee != 0) base = mul(base, base);
    }
    return result;
}

Series shift(const Series& a, long d) { return Series(a.offset() + d, a.coeffs()); }

Series huff(const Series& a) {
    std::vector<mpz_class> c(a.coeffs());
    for (size_t i = 0; i < c.size(); ++i) {
        long n = a.offset() + static_cast<long>(i);
        long r = n % 7;
        if (r < 0) r += 7;
        if (r != 0) c[i] = 0;
    }
    return Series(a.offset(), std::move(c));
}

namespace {
long ceil_div(long a, long b) {  // b > 0
    long q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}
}  // namespace

Series extract_progression(const Series& a, long A, long B) {
    if (A < 1) throw std::invalid_argument("extract_progression: A must be >= 1");
    long nlo = ceil_div(a.offset() - B, A);
    long nhi = ceil_div(a.prec() - B, A);
    if (nhi <= nlo) return Series(nlo, {});
    std::vector<mpz_class> c(static_cast<size_t>(nhi - nlo));
    for (long n = nlo; n < nhi; ++n) c[static_cast<size_t>(n - nlo)] = a.coeff(A * n + B);
    return Series(nlo, std::move(c));
}

Series euler_product(long r, long prec) {
    if (r < 1) throw std::invalid_argument("euler_product: r must be >= 1");
    if (prec < 1) throw std::invalid_argument("euler_product: prec must be >= 1");
    std::vector<mpz_class> c(static_cast<size_t>(prec));
    // f_1 = sum_{j in Z} (-1)^j q^{j(3j-1)/2}, composed with q -> q^r.
    for (long j = 0;; ++j) {
        long g1 = j * (3 * j - 1) / 2;
        long g2 = j * (3 * j + 1) / 2;
        if (r * g1 >= prec && r * g2 >= prec) break;
        int sign = (j % 2 == 0) ? 1 : -1;
        if (r * g1 < prec) c[static_cast<size_t>(r * g1)] += sign;
        if (j > 0 && r * g2 < prec) c[static_cast<size_t>(r * g2)] += sign;
    }
    return Series(0, std::move(c));
}

Series expand(const EtaQuotientSpec& spec, long prec) {
    if (prec < 1) throw std::invalid_argument("expand: prec must be >= 1");
    std::set<long> seen;
    for (const auto& [r, e] : spec.factors) {
        if (r < 1) throw std::invalid_argument("expand: scales must be positive");
        if (!seen.insert(r).second) throw std::invalid_argument("expand: scales must be distinct");
        (void)e;
    }
    Series result = Series::one(prec);
    for (const auto& [r, e] : spec.factors) {
        if (e == 0) continue;
        result = mul(result, pow(euler_product(r, prec), e));
    }
    return shift(result, spec.leading_power);
}

Series expand_to(const EtaQuotientSpec& spec, long abs_prec) {
    long p = abs_prec - spec.leading_power;
    if (p < 1) return Series(spec.leading_power, {});
    return expand(spec, p);
}

bool equal_on_common_window(const Series& a, const Series& b) {
    return first_mismatch(a, b) >= std::min(a.prec(), b.prec());
}

long first_mismatch(const Series& a, const Series& b) {
    // The stored windows must overlap; the comparison itself also covers
    // the known-zero region below either offset.
    long hi = std::min(a.prec(), b.prec());
    if (hi <= std::max(a.offset(), b.offset()))
        throw std::invalid_argument("series comparison: common window is empty");
    for (long n = std::min(a.offset(), b.offset()); n < hi; ++n)
        if (a.coeff(n) != b.coeff(n)) return n;
    return hi;
}

nlohmann::json series_to_json(const Series& a) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& v : a.coeffs()) coeffs.push_back(v.get_str());
    return nlohmann::json{{"offset", a.offset()}, {"prec", a.prec()}, {"coeffs", coeffs}};
}

}  // namespace regular7

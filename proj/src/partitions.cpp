#include "regular7/partitions.hpp"

#include <stdexcept>

namespace regular7 {

PartitionTable PartitionTable::unrestricted() {
    return PartitionTable(Kind::unrestricted, 0);
}

PartitionTable PartitionTable::regular(unsigned long ell) {
    if (ell < 2) throw std::invalid_argument("PartitionTable::regular: ell must be >= 2");
    return PartitionTable(Kind::regular, ell);
}

const mpz_class& PartitionTable::at(long n) const {
    if (n < 0 || n > max_n()) throw std::out_of_range("PartitionTable::at: n not computed");
    return v_[static_cast<size_t>(n)];
}

void PartitionTable::extend(long n_max) {
    if (kind_ != Kind::unrestricted)
        throw std::logic_error("PartitionTable::extend: regular table needs a p-table");
    if (n_max < 0) return;
    if (v_.empty()) v_.push_back(1);
    v_.reserve(static_cast<size_t>(n_max) + 1);
    mpz_class s;
    for (long n = static_cast<long>(v_.size()); n <= n_max; ++n) {
        s = 0;
        for (long j = 1;; ++j) {
            long g1 = j * (3 * j - 1) / 2;
            if (g1 > n) break;
            const bool plus = (j % 2 == 1);
            if (plus)
                s += v_[static_cast<size_t>(n - g1)];
            else
                s -= v_[static_cast<size_t>(n - g1)];
            long g2 = j * (3 * j + 1) / 2;
            if (g2 <= n) {
                if (plus)
                    s += v_[static_cast<size_t>(n - g2)];
                else
                    s -= v_[static_cast<size_t>(n - g2)];
            }
        }
        v_.push_back(s);
    }
}

void PartitionTable::extend(long n_max, const PartitionTable& p) {
    if (kind_ != Kind::regular)
        throw std::logic_error("PartitionTable::extend: p-table argument is for regular tables");
    if (p.kind() != Kind::unrestricted || p.max_n() < n_max)
        throw std::invalid_argument("PartitionTable::extend: p-table does not cover n_max");
    if (n_max < 0) return;
    v_.reserve(static_cast<size_t>(n_max) + 1);
    const long ell = static_cast<long>(ell_);
    mpz_class s;
    // b_ell(n) = sum_j (-1)^j p(n - ell * g_j) over all pentagonal g_j.
    for (long n = static_cast<long>(v_.size()); n <= n_max; ++n) {
        s = p.at(n);
        for (long j = 1;; ++j) {
            long g1 = ell * (j * (3 * j - 1) / 2);
            if (g1 > n) break;
            const bool plus = (j % 2 == 0);
            if (plus)
                s += p.at(n - g1);
            else
                s -= p.at(n - g1);
            long g2 = ell * (j * (3 * j + 1) / 2);
            if (g2 <= n) {
                if (plus)
                    s += p.at(n - g2);
                else
                    s -= p.at(n - g2);
            }
        }
        v_.push_back(s);
    }
}

PartitionTable partition_count(long n_max) {
    if (n_max < 0) throw std::invalid_argument("partition_count: n_max must be >= 0");
    PartitionTable t = PartitionTable::unrestricted();
    t.extend(n_max);
    return t;
}

PartitionTable regular_count(unsigned long ell, long n_max) {
    if (n_max < 0) throw std::invalid_argument("regular_count: n_max must be >= 0");
    PartitionTable p = partition_count(n_max);
    PartitionTable b = PartitionTable::regular(ell);
    b.extend(n_max, p);
    return b;
}

const PartitionTable& PartitionStore::p(long n_max) {
    if (p_.max_n() < n_max) p_.extend(n_max);
    return p_;
}

const PartitionTable& PartitionStore::b(unsigned long ell, long n_max) {
    auto it = b_.find(ell);
    if (it == b_.end()) it = b_.emplace(ell, PartitionTable::regular(ell)).first;
    if (it->second.max_n() < n_max) it->second.extend(n_max, p(n_max));
    return it->second;
}

mpz_class pow7(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 7, e);
    return r;
}

mpz_class lambda_k(unsigned k) {
    if (k < 1) throw std::invalid_argument("lambda_k: k must be >= 1");
    mpz_class mod = pow7(k);
    mpz_class lam;
    mpz_class twentyfour = 24;
    if (mpz_invert(lam.get_mpz_t(), twentyfour.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw std::logic_error("lambda_k: 24 not invertible mod 7^k");  // unreachable
    return lam;  // mpz_invert returns the least nonnegative representative
}

}  // namespace regular7

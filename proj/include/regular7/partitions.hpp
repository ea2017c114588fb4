#pragma once

#include <gmpxx.h>

#include <map>
#include <span>
#include <vector>

namespace regular7 {

/**
 * Cached table of partition counts, indexed by n from 0.
 *
 * Unrestricted tables hold p(n), computed by the pentagonal-number
 * recurrence. Regular tables hold b_ell(n), the number of partitions of
 * n with no part divisible by ell, computed as the sparse convolution
 * f_ell * (1/f_1) against a p-table. Both extend in place: re-requests
 * over a larger range append to the existing values.
 *
 * A completed table is immutable for readers; extension is single-writer.
 */
class PartitionTable {
public:
    enum class Kind { unrestricted, regular };

    static PartitionTable unrestricted();
    static PartitionTable regular(unsigned long ell);  // ell >= 2

    Kind kind() const { return kind_; }
    unsigned long modulus() const { return ell_; }  // 0 for unrestricted

    /// Highest n currently computed, or -1 for a fresh table.
    long max_n() const { return static_cast<long>(v_.size()) - 1; }

    const mpz_class& at(long n) const;
    std::span<const mpz_class> values() const { return v_; }

    /// Extend an unrestricted table to cover 0..n_max.
    void extend(long n_max);

    /// Extend a regular table to cover 0..n_max; p must already cover n_max.
    void extend(long n_max, const PartitionTable& p);

private:
    PartitionTable(Kind k, unsigned long ell) : kind_(k), ell_(ell) {}

    Kind kind_;
    unsigned long ell_;
    std::vector<mpz_class> v_;
};

/// p(0..n_max) by the pentagonal recurrence.
PartitionTable partition_count(long n_max);

/// b_ell(0..n_max); builds the needed p-table internally. Requires ell >= 2.
PartitionTable regular_count(unsigned long ell, long n_max);

/// Shared cache: one p-table plus one b_ell-table per ell, all extending
/// in place as larger ranges are requested.
class PartitionStore {
public:
    const PartitionTable& p(long n_max);
    const PartitionTable& b(unsigned long ell, long n_max);

private:
    PartitionTable p_ = PartitionTable::unrestricted();
    std::map<unsigned long, PartitionTable> b_;
};

/// 7^e as an exact integer.
mpz_class pow7(unsigned long e);

/// lambda_k: the unique integer in (0, 7^k) with 24 * lambda_k == 1 (mod 7^k).
mpz_class lambda_k(unsigned k);

}  // namespace regular7

// Primality bitset + ordered odd-prime list + prime counting up to a limit.
//
// The table is the ground truth for the odd-prime sequence 3, 5, 7, 11, ...
// used everywhere else: 2 is reported prime by is_prime() but is excluded
// from odd_primes() and from all partition logic.
//
// Immutable after construction; safe to share across threads for reads.

#pragma once

#include <cstdint>
#include <vector>

namespace goldbach {

class PrimeTable {
public:
    // Default cap on the memory footprint of one table (4 GiB).
    static constexpr uint64_t kDefaultMemoryBudget = 4ull << 30;

    // Sieve all integers in [0, limit]. limit must be >= 2.
    // Deterministic: the same limit always yields bit-identical tables.
    static PrimeTable build(uint64_t limit,
                            uint64_t memory_budget_bytes = kDefaultMemoryBudget);

    // Rough upper bound on the bytes build(limit) will allocate.
    static uint64_t estimated_bytes(uint64_t limit);

    uint64_t limit() const { return limit_; }

    // m > limit raises out_of_range: the table never silently answers
    // outside the sieved range.
    bool is_prime(uint64_t m) const;

    // True iff m is prime and m >= 3.
    bool is_odd_prime(uint64_t m) const;

    // pi(y): number of primes <= y, counting 2. Requires y <= limit.
    uint64_t prime_count(uint64_t y) const;

    // Ascending list of primes in [3, limit].
    const std::vector<uint64_t>& odd_primes() const { return odd_primes_; }

private:
    PrimeTable() = default;

    // One pi checkpoint per kCheckpointWords bitset words (512 integers).
    static constexpr uint64_t kCheckpointWords = 8;

    bool test_bit(uint64_t m) const {
        return (bits_[m >> 6] >> (m & 63)) & 1u;
    }

    uint64_t limit_ = 0;
    std::vector<uint64_t> bits_;            // bit m set <=> m prime
    std::vector<uint64_t> odd_primes_;
    std::vector<uint64_t> pi_checkpoints_;  // primes below word i*kCheckpointWords
};

}  // namespace goldbach

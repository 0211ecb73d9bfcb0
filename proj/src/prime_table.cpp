#include "prime_table.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace goldbach {

uint64_t PrimeTable::estimated_bytes(uint64_t limit) {
    // bitset + odd prime list (pi(x) < 1.3 x/ln x for x >= 17) + checkpoints
    double ln = std::log(double(limit < 17 ? 17 : limit));
    uint64_t bitset_bytes = limit / 8 + 16;
    uint64_t primes_bytes = uint64_t(1.3 * double(limit) / ln) * 8 + 64;
    uint64_t checkpoint_bytes = limit / 64 + 64;
    return bitset_bytes + primes_bytes + checkpoint_bytes;
}

PrimeTable PrimeTable::build(uint64_t limit, uint64_t memory_budget_bytes) {
    if (limit < 2)
        fail(Status::invalid_argument,
             "prime table limit must be >= 2, got " + std::to_string(limit));
    uint64_t need = estimated_bytes(limit);
    if (need > memory_budget_bytes)
        fail(Status::resource,
             "prime table to " + std::to_string(limit) + " needs ~" +
                 std::to_string(need) + " bytes, exceeding the memory budget of " +
                 std::to_string(memory_budget_bytes) + " bytes");

    PrimeTable t;
    t.limit_ = limit;
    uint64_t words = (limit >> 6) + 1;
    t.bits_.assign(words, 0);

    auto set_bit = [&](uint64_t m) { t.bits_[m >> 6] |= 1ull << (m & 63); };

    set_bit(2);
    for (uint64_t m = 3; m <= limit; m += 2) set_bit(m);

    for (uint64_t i = 3; i * i <= limit; i += 2) {
        if (!t.test_bit(i)) continue;
        for (uint64_t j = i * i; j <= limit; j += 2 * i)
            t.bits_[j >> 6] &= ~(1ull << (j & 63));
    }
    if (limit >= 1) t.bits_[0] &= ~2ull;  // 1 is not prime (bit 0 never set)

    t.odd_primes_.reserve(size_t(1.3 * double(limit) / std::log(double(limit < 17 ? 17 : limit))));
    for (uint64_t m = 3; m <= limit; m += 2)
        if (t.test_bit(m)) t.odd_primes_.push_back(m);

    t.pi_checkpoints_.reserve(words / kCheckpointWords + 2);
    uint64_t running = 0;
    for (uint64_t w = 0; w < words; ++w) {
        if (w % kCheckpointWords == 0) t.pi_checkpoints_.push_back(running);
        running += std::popcount(t.bits_[w]);
    }
    return t;
}

bool PrimeTable::is_prime(uint64_t m) const {
    if (m > limit_)
        fail(Status::out_of_range,
             "is_prime(" + std::to_string(m) + ") beyond sieve limit " +
                 std::to_string(limit_));
    return test_bit(m);
}

bool PrimeTable::is_odd_prime(uint64_t m) const {
    if (m > limit_)
        fail(Status::out_of_range,
             "is_odd_prime(" + std::to_string(m) + ") beyond sieve limit " +
                 std::to_string(limit_));
    return m >= 3 && test_bit(m);
}

uint64_t PrimeTable::prime_count(uint64_t y) const {
    if (y > limit_)
        fail(Status::out_of_range,
             "prime_count(" + std::to_string(y) + ") beyond sieve limit " +
                 std::to_string(limit_));
    uint64_t word = y >> 6;
    uint64_t count = pi_checkpoints_[word / kCheckpointWords];
    for (uint64_t w = (word / kCheckpointWords) * kCheckpointWords; w < word; ++w)
        count += std::popcount(bits_[w]);
    uint64_t mask = (y & 63) == 63 ? ~0ull : ((1ull << ((y & 63) + 1)) - 1);
    count += std::popcount(bits_[word] & mask);
    return count;
}

}  // namespace goldbach

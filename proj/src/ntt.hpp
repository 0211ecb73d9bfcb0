// Exact integer self-convolution via a number-theoretic transform.
//
// Works mod p = 998244353 = 119 * 2^23 + 1 (primitive root 3), so any
// convolution whose true coefficients stay below p comes back exact.
// Inputs here are 0/1 prime indicators, hence true coefficients are
// bounded by the input popcount; the caller enforces popcount < p.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace goldbach::ntt {

constexpr uint64_t kMod = 998244353;
constexpr uint64_t kPrimitiveRoot = 3;
constexpr size_t kMaxTransformSize = size_t(1) << 23;

// Square of the polynomial with coefficients `a`, truncated to out_len
// coefficients. All values must be < kMod; true result coefficients
// must be < kMod for the answer to be exact.
std::vector<uint64_t> self_convolution(const std::vector<uint64_t>& a, size_t out_len);

}  // namespace goldbach::ntt

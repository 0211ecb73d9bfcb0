// 128-bit unsigned helpers for exact weighted sums.
// GCC/Clang __int128 is the configured wide-integer width; all overflow
// is detected and surfaced, never wrapped.

#pragma once

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace goldbach {

using u128 = unsigned __int128;

inline u128 checked_add_u128(u128 a, u128 b, const char* what) {
    u128 out;
    if (__builtin_add_overflow(a, b, &out))
        fail(Status::overflow, std::string(what) + ": 128-bit accumulator overflow");
    return out;
}

inline u128 checked_mul_u128(u128 a, u128 b, const char* what) {
    u128 out;
    if (__builtin_mul_overflow(a, b, &out))
        fail(Status::overflow, std::string(what) + ": 128-bit product overflow");
    return out;
}

inline uint64_t checked_add_u64(uint64_t a, uint64_t b, const char* what) {
    uint64_t out;
    if (__builtin_add_overflow(a, b, &out))
        fail(Status::overflow, std::string(what) + ": 64-bit accumulator overflow");
    return out;
}

inline std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    char buf[48];
    int pos = sizeof(buf);
    while (v != 0) {
        buf[--pos] = char('0' + unsigned(v % 10));
        v /= 10;
    }
    return std::string(buf + pos, sizeof(buf) - pos);
}

}  // namespace goldbach

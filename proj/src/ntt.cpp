#include "ntt.hpp"

#include <bit>
#include <string>

#include "errors.hpp"

namespace goldbach::ntt {

namespace {

// Montgomery arithmetic mod kMod (odd, < 2^30). Values live in the
// Montgomery domain [0, mod); reduce() brings a 64-bit product back.
struct Mont {
    uint32_t mod;
    uint32_t ninv;  // -mod^{-1} mod 2^32
    uint32_t r2;    // 2^64 mod mod

    explicit Mont(uint32_t m) : mod(m) {
        uint32_t x = m;  // Newton iteration: x = m^{-1} mod 2^32
        for (int i = 0; i < 5; ++i) x *= 2 - m * x;
        ninv = uint32_t(0) - x;
        r2 = uint32_t((unsigned __int128)1 << 64 % 1);  // placeholder, set below
        r2 = uint32_t(((unsigned __int128)1 << 64) % m);
    }

    uint32_t reduce(uint64_t t) const {
        // t < mod * 2^32; returns t * 2^{-32} mod mod, in [0, mod)
        uint32_t q = uint32_t(t) * ninv;
        uint32_t r = uint32_t((t + uint64_t(q) * mod) >> 32);
        return r >= mod ? r - mod : r;
    }
    uint32_t mul(uint32_t a, uint32_t b) const { return reduce(uint64_t(a) * b); }
    uint32_t to_mont(uint32_t a) const { return mul(a, r2); }
    uint32_t from_mont(uint32_t a) const { return reduce(a); }
    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= mod ? s - mod : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + mod - b; }
    uint32_t pow(uint32_t base, uint64_t exp) const {
        uint32_t acc = to_mont(1);
        while (exp) {
            if (exp & 1) acc = mul(acc, base);
            base = mul(base, base);
            exp >>= 1;
        }
        return acc;
    }
};

const Mont& mont() {
    static const Mont m(uint32_t(kMod));
    return m;
}

// Iterative radix-2 Cooley-Tukey over the Montgomery domain.
void transform(std::vector<uint32_t>& a, bool invert) {
    const Mont& mt = mont();
    const size_t n = a.size();

    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    for (size_t len = 2; len <= n; len <<= 1) {
        uint64_t exp = (kMod - 1) / len;
        if (invert) exp = kMod - 1 - exp;
        uint32_t wlen = mt.pow(mt.to_mont(uint32_t(kPrimitiveRoot)), exp);
        for (size_t i = 0; i < n; i += len) {
            uint32_t w = mt.to_mont(1);
            for (size_t j = 0; j < len / 2; ++j) {
                uint32_t u = a[i + j];
                uint32_t v = mt.mul(a[i + j + len / 2], w);
                a[i + j] = mt.add(u, v);
                a[i + j + len / 2] = mt.sub(u, v);
                w = mt.mul(w, wlen);
            }
        }
    }

    if (invert) {
        uint32_t n_inv = mt.pow(mt.to_mont(uint32_t(n % kMod)), kMod - 2);
        for (auto& x : a) x = mt.mul(x, n_inv);
    }
}

}  // namespace

std::vector<uint64_t> self_convolution(const std::vector<uint64_t>& a, size_t out_len) {
    if (a.empty()) return std::vector<uint64_t>(out_len, 0);

    size_t need = 2 * a.size() - 1;
    size_t size = std::bit_ceil(need);
    if (size > kMaxTransformSize)
        fail(Status::resource,
             "convolution length " + std::to_string(need) +
                 " exceeds the supported transform size " +
                 std::to_string(kMaxTransformSize));

    const Mont& mt = mont();
    std::vector<uint32_t> work(size, 0);
    for (size_t i = 0; i < a.size(); ++i) work[i] = mt.to_mont(uint32_t(a[i] % kMod));

    transform(work, false);
    for (auto& x : work) x = mt.mul(x, x);
    transform(work, true);

    std::vector<uint64_t> out(out_len, 0);
    size_t keep = out_len < size ? out_len : size;
    for (size_t i = 0; i < keep; ++i) out[i] = mt.from_mont(work[i]);
    return out;
}

}  // namespace goldbach::ntt

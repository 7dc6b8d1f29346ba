// Part of atcf-sim, an aerial-terrestrial cell-free massive MIMO toolkit.
// SPDX-License-Identifier: Apache-2.0

#ifndef ATCF_CORE_RNG_HPP
#define ATCF_CORE_RNG_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <vector>

namespace atcf {

namespace detail {

// Philox 4x32-10 block function (counter-based, Random123 family).
struct PhiloxBlock {
    static constexpr std::uint32_t mult_a = 0xD2511F53u;
    static constexpr std::uint32_t mult_b = 0xCD9E8D57u;
    static constexpr std::uint32_t bump_a = 0x9E3779B9u;
    static constexpr std::uint32_t bump_b = 0xBB67AE85u;

    static std::array<std::uint32_t, 4> generate(std::uint64_t key, std::uint64_t counter) {
        std::uint32_t k0 = static_cast<std::uint32_t>(key);
        std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
        std::array<std::uint32_t, 4> c = {static_cast<std::uint32_t>(counter),
                                          static_cast<std::uint32_t>(counter >> 32), 0u, 0u};
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = static_cast<std::uint64_t>(mult_a) * c[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(mult_b) * c[2];
            const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
            const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
            c = {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
            k0 += bump_a;
            k1 += bump_b;
        }
        return c;
    }
};

// SplitMix64 finalizer, used to fold substream path indices into the key.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace detail

// A deterministic random stream. Identical (seed, path) reproduces identical
// draws bit-exactly; children derived under distinct paths are statistically
// independent and may be consumed in any order or handed to parallel workers.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : key_(detail::mix64(seed ^ 0xA02B693F3C4B7E1Dull)) {}

    RngStream(std::uint64_t seed, std::initializer_list<std::uint32_t> path) : RngStream(seed) {
        for (std::uint32_t p : path) *this = derive(p);
    }

    // Child stream under the given sub-index. Does not disturb this stream.
    RngStream derive(std::uint32_t index) const {
        RngStream child(*this);
        child.key_ = detail::mix64(key_ ^ (0x6A09E667F3BCC909ull + index));
        child.counter_ = 0;
        child.buf_pos_ = 4;
        return child;
    }

    RngStream derive(std::initializer_list<std::uint32_t> path) const {
        RngStream child(*this);
        child.counter_ = 0;
        child.buf_pos_ = 4;
        for (std::uint32_t p : path) child = child.derive(p);
        return child;
    }

    std::uint32_t next_u32() {
        if (buf_pos_ >= 4) {
            buf_ = detail::PhiloxBlock::generate(key_, counter_++);
            buf_pos_ = 0;
        }
        return buf_[buf_pos_++];
    }

    std::uint64_t next_u64() {
        const std::uint64_t lo = next_u32();
        const std::uint64_t hi = next_u32();
        return (hi << 32) | lo;
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n) {
        // Modulo bias is < 2^-40 for the sizes used here.
        return next_u64() % n;
    }

    // Standard normal via Box-Muller; the pair is consumed eagerly so the
    // sequence is a pure function of the draw index.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    // Circularly-symmetric complex normal CN(0,1): each component has
    // variance 1/2.
    std::complex<double> complex_normal() {
        const double re = normal();
        const double im = normal();
        constexpr double half_sqrt2 = 0.70710678118654752440;
        return {re * half_sqrt2, im * half_sqrt2};
    }

    // Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(uniform_index(i));
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
    std::array<std::uint32_t, 4> buf_ = {0, 0, 0, 0};
    int buf_pos_ = 4;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace atcf

#endif

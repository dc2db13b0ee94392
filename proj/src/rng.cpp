#include "mimo/rng.hpp"

#include <cmath>

namespace mimo {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

}  // namespace

std::array<std::uint32_t, 4> Philox4x32::rounds(std::array<std::uint32_t, 4> c,
                                                std::array<std::uint32_t, 2> k) {
    for (int r = 0; r < 10; ++r) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, c[0], hi0, lo0);
        mulhilo(kMul1, c[2], hi1, lo1);
        c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
        k[0] += kWeyl0;
        k[1] += kWeyl1;
    }
    return c;
}

std::array<std::uint32_t, 4> Philox4x32::block(std::uint64_t index) const {
    const std::array<std::uint32_t, 4> counter = {
        static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
        static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
    const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(key_),
                                              static_cast<std::uint32_t>(key_ >> 32)};
    return rounds(counter, key);
}

namespace {

constexpr double kInv32 = 1.0 / 4294967296.0;  // 2^-32
constexpr double kTwoPi = 6.283185307179586476925286766559;

// Box-Muller pair from one 128-bit block; x0 offset keeps u1 in (0, 1).
inline void normal_pair(const std::array<std::uint32_t, 4>& b, double& z0, double& z1) {
    const double u1 = (b[0] + 0.5) * kInv32;
    const double u2 = b[1] * kInv32;
    const double r = std::sqrt(-2.0 * std::log(u1));
    z0 = r * std::cos(kTwoPi * u2);
    z1 = r * std::sin(kTwoPi * u2);
}

}  // namespace

double GaussianStream::next() {
    double z0, z1;
    normal_pair(eng_.block(index_++), z0, z1);
    (void)z1;
    return z0;
}

std::complex<double> GaussianStream::next_cn() {
    double z0, z1;
    normal_pair(eng_.block(index_++), z0, z1);
    return {z0 * M_SQRT1_2, z1 * M_SQRT1_2};
}

std::uint32_t UniformStream::next_u32() {
    if (used_ == 4) {
        cache_ = eng_.block(index_++);
        used_ = 0;
    }
    return cache_[used_++];
}

std::uint32_t UniformStream::next_below(std::uint32_t bound) {
    if (bound == 0) return 0;
    if ((bound & (bound - 1)) == 0) return next_u32() & (bound - 1);
    const std::uint32_t limit = (0xFFFFFFFFu / bound) * bound;
    std::uint32_t v;
    do {
        v = next_u32();
    } while (v >= limit);
    return v % bound;
}

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

std::uint64_t hash_name(std::string_view name) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (const char ch : name) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001B3ull;
    }
    return h;
}

std::uint64_t substream(std::uint64_t purpose, std::uint64_t id, std::uint64_t epoch) {
    std::uint64_t h = mix64(purpose + 0x9E3779B97F4A7C15ull);
    h = mix64(h ^ id);
    h = mix64(h ^ epoch);
    return h;
}

}  // namespace mimo

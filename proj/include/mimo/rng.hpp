#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string_view>

namespace mimo {

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).  Chosen over
// the stdlib engines because substreams are free: every (key, stream, block)
// triple maps to an independent 128-bit output with no sequential state, so
// per-user channel draws cannot depend on registry order or event history.
// The seed→output mapping is pinned by known-answer tests and must not change.
class Philox4x32 {
public:
    Philox4x32(std::uint64_t key, std::uint64_t stream) : key_(key), stream_(stream) {}

    // 128 bits of output for the given block index of this (key, stream).
    std::array<std::uint32_t, 4> block(std::uint64_t index) const;

    // Raw 10-round keyed bijection, exposed for known-answer tests.
    static std::array<std::uint32_t, 4> rounds(std::array<std::uint32_t, 4> counter,
                                               std::array<std::uint32_t, 2> key);

private:
    std::uint64_t key_;
    std::uint64_t stream_;
};

// Standard normal / circular complex normal draws via Box-Muller over Philox
// blocks.  Each call consumes exactly one block, so positions are stable.
class GaussianStream {
public:
    GaussianStream(std::uint64_t key, std::uint64_t stream) : eng_(key, stream) {}

    double next();                  // N(0, 1)
    std::complex<double> next_cn(); // CN(0, 1): real/imag i.i.d. N(0, 1/2)

private:
    Philox4x32 eng_;
    std::uint64_t index_ = 0;
};

// Uniform 32-bit words, four per block.
class UniformStream {
public:
    UniformStream(std::uint64_t key, std::uint64_t stream) : eng_(key, stream) {}

    std::uint32_t next_u32();
    // Unbiased draw in [0, bound); power-of-two bounds take a mask fast path.
    std::uint32_t next_below(std::uint32_t bound);

private:
    Philox4x32 eng_;
    std::uint64_t index_ = 0;
    std::array<std::uint32_t, 4> cache_{};
    unsigned used_ = 4;
};

// splitmix64 finalizer: bijective 64-bit mix used to derive stream ids.
std::uint64_t mix64(std::uint64_t x);

// FNV-1a 64-bit hash of a user id (or any label).
std::uint64_t hash_name(std::string_view name);

// Stream-id derivation.  Purposes keep draw categories disjoint; (id, epoch)
// separate users and re-draws of the same user.
inline constexpr std::uint64_t kStreamChannel = 1;
inline constexpr std::uint64_t kStreamNoise = 2;
inline constexpr std::uint64_t kStreamSymbols = 3;
inline constexpr std::uint64_t kStreamBeta = 4;
inline constexpr std::uint64_t kStreamHistory = 5;

std::uint64_t substream(std::uint64_t purpose, std::uint64_t id, std::uint64_t epoch);

}  // namespace mimo

#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdint>

#include "mimo/rng.hpp"

using mimo::GaussianStream;
using mimo::Philox4x32;
using mimo::UniformStream;

TEST_CASE("keyed bijection known-answer vectors") {
    using A4 = std::array<std::uint32_t, 4>;
    using A2 = std::array<std::uint32_t, 2>;

    CHECK(Philox4x32::rounds(A4{0, 0, 0, 0}, A2{0, 0}) ==
          A4{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
    CHECK(Philox4x32::rounds(A4{0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                             A2{0xffffffffu, 0xffffffffu}) ==
          A4{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
    CHECK(Philox4x32::rounds(A4{0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                             A2{0xa4093822u, 0x299f31d0u}) ==
          A4{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("blocks are stable and streams disjoint") {
    const Philox4x32 a(42, 7), b(42, 7), c(42, 8), d(43, 7);
    CHECK(a.block(5) == b.block(5));
    CHECK(a.block(5) != a.block(6));
    CHECK(a.block(5) != c.block(5));
    CHECK(a.block(5) != d.block(5));
}

TEST_CASE("gaussian stream moments") {
    GaussianStream g(123, 456);
    const std::size_t n = 100000;
    double sum = 0.0, sum2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double z = g.next();
        sum += z;
        sum2 += z * z;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    CHECK(std::abs(mean) < 0.02);
    CHECK(var == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("complex gaussian has unit power") {
    GaussianStream g(9, 1);
    const std::size_t n = 100000;
    double power = 0.0;
    for (std::size_t i = 0; i < n; ++i) power += std::norm(g.next_cn());
    CHECK(power / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("uniform stream bounds and coverage") {
    UniformStream u(77, 3);
    std::array<std::size_t, 4> histo{};
    const std::size_t n = 40000;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t v = u.next_below(4);
        REQUIRE(v < 4);
        ++histo[v];
    }
    for (const std::size_t h : histo)
        CHECK(std::abs(static_cast<double>(h) / (n / 4.0) - 1.0) < 0.05);

    UniformStream w(77, 4);
    for (int i = 0; i < 1000; ++i) CHECK(w.next_below(3) < 3);
}

TEST_CASE("name hashing and stream derivation") {
    CHECK(mimo::hash_name("") == 0xcbf29ce484222325ull);
    CHECK(mimo::hash_name("a") == 0xaf63dc4c8601ec8cull);
    CHECK(mimo::hash_name("u0") != mimo::hash_name("u1"));

    const auto s1 = mimo::substream(mimo::kStreamChannel, mimo::hash_name("u0"), 0);
    const auto s2 = mimo::substream(mimo::kStreamNoise, mimo::hash_name("u0"), 0);
    const auto s3 = mimo::substream(mimo::kStreamChannel, mimo::hash_name("u1"), 0);
    const auto s4 = mimo::substream(mimo::kStreamChannel, mimo::hash_name("u0"), 1);
    CHECK(s1 != s2);
    CHECK(s1 != s3);
    CHECK(s1 != s4);
    // the finalizer alone fixes 0; seeded from the golden-ratio increment it
    // reproduces the first splitmix64 output for seed 0
    CHECK(mimo::mix64(0) == 0);
    CHECK(mimo::mix64(0x9E3779B97F4A7C15ull) == 0xE220A8397B1DCDAFull);
}

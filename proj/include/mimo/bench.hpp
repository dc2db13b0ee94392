#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mimo/complexity.hpp"
#include "mimo/decoder.hpp"

namespace mimo {

struct BenchConfig {
    std::size_t antennas = 100;
    std::vector<std::size_t> user_counts = {10, 16, 24, 30};
    UpdateKind scenario = UpdateKind::Remove;
    std::size_t repetitions = 7;  // median; at least 3
    DetectorKind detector = DetectorKind::ZF;
    double rho = 100.0;
    std::uint64_t seed = 1;
};

struct BenchRow {
    std::size_t m;
    double fast_ns;    // median wall time of one incremental update
    double direct_ns;  // median wall time of one from-scratch rebuild
    double speedup;    // direct_ns / fast_ns
};

// Times the incremental update against a direct rebuild of the identical
// post-event state.  Monotonic clock, warm-up pass, inner loops sized to
// ~hundreds of microseconds per sample, medians across repetitions.
std::vector<BenchRow> run_bench(const BenchConfig& cfg);

std::string bench_csv(std::span<const BenchRow> rows);

}  // namespace mimo

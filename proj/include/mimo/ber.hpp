#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mimo/channel.hpp"
#include "mimo/decoder.hpp"

namespace mimo {

struct BerConfig {
    SystemConfig system;  // rho is ignored; the sweep sets it per point
    DetectorKind detector = DetectorKind::ZF;
    std::string constellation = "qpsk";
    std::size_t users = 10;
    std::vector<double> snr_db = {20.0};
    std::size_t blocks = 1000;  // channel realizations per SNR point
    bool noiseless = false;     // zeroed noise stream (oracle tests)
    bool count_bits = false;    // symbol errors by default, Gray bits with flag
    bool fast_state = false;    // drive the decoder via incremental updates
};

struct BerPoint {
    double snr_db;
    std::size_t blocks;
    std::uint64_t errors;
    std::uint64_t total;
    double rate;
};

// Monte-Carlo error-rate sweep: a fresh channel per block per user.  With
// fast_state the same channels reach the decoder through per-block CSI
// updates of a single maintained state instead of fresh builds, so matched
// seeds make the two paths directly comparable.
std::vector<BerPoint> run_ber(const BerConfig& cfg);

std::string ber_csv(std::span<const BerPoint> points);

}  // namespace mimo

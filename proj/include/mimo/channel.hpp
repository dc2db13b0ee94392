#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mimo/complex_matrix.hpp"
#include "mimo/rng.hpp"
#include "mimo/stbc.hpp"

namespace mimo {

// Large-scale gain policy.  Gains are kept in (0, 1]: the strongest user
// defines the reference level.
struct BetaPolicy {
    enum class Kind { AllOnes, LogNormal };
    Kind kind = Kind::AllOnes;
    double sigma_db = 8.0;  // shadowing spread, used by LogNormal only
};

struct SystemConfig {
    std::size_t antennas = 100;  // N, receive antennas at the base station
    double rho = 100.0;          // linear SNR
    std::uint64_t seed = 1;
    BetaPolicy beta{};

    void validate() const;  // antennas >= 1, rho > 0
};

// One user's channel state: N×2 small-scale matrix, scalar large-scale gain,
// and the cached 2N×4 effective channel beta·effective_channel(h).
struct UserChannel {
    std::string user_id;
    ComplexMatrix h;
    double beta = 1.0;
    ComplexMatrix h_eff;

    static UserChannel make(std::string user_id, ComplexMatrix h, double beta);
};

// Deterministic draw: the stream depends only on (seed, user_id, epoch), so
// the same user re-drawn after any event history gets the same channel, and
// bumping epoch gives an independent one (CSI refresh).
UserChannel draw_user_channel(const SystemConfig& cfg, const std::string& user_id,
                              std::uint64_t epoch = 0);

// Batch large-scale gains for m users: sorted descending and renormalized so
// the first equals 1.  AllOnes yields all ones.
std::vector<double> draw_beta_set(const SystemConfig& cfg, std::size_t m);

// Single-user gain for dynamic joins, where no batch to normalize against
// exists: |log-normal| attenuation in (0, 1].
double draw_single_beta(const SystemConfig& cfg, const std::string& user_id,
                        std::uint64_t epoch = 0);

// m users named u0..u{m-1} with batch gains assigned in order.
std::vector<UserChannel> draw_user_set(const SystemConfig& cfg, std::size_t m);

// [β₁Ĥ₁ | β₂Ĥ₂ | … ] in registry order; 2N×4M.  Empty list gives 0×0.
ComplexMatrix assemble_channel(std::span<const UserChannel> users);

// √(ρ/2)·G·x + w with w i.i.d. CN(0,1); pass nullptr for the noiseless
// variant used by oracle tests.
std::vector<Complex> received_signal(const ComplexMatrix& g, std::span<const Complex> x,
                                     double rho, GaussianStream* noise);

}  // namespace mimo

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mimo/channel.hpp"
#include "mimo/complex_matrix.hpp"
#include "mimo/constellation.hpp"
#include "mimo/linalg.hpp"
#include "mimo/stbc.hpp"

namespace mimo {

enum class DetectorKind { ZF, MMSE };

struct DecoderMode {
    DetectorKind kind = DetectorKind::ZF;
    double rho = 100.0;  // linear SNR; MMSE regularization and detection scale
};

// ZF: GᴴG.  MMSE: (2/ρ)I + GᴴG.  ZF rejects overloaded systems (more code
// columns than receive rows) since the Gram would be singular.
HermitianPD build_z(const ComplexMatrix& g, const DecoderMode& mode);

struct UserDecision {
    std::string user_id;
    std::array<std::size_t, 4> indices;  // constellation point indices
    SymbolVector symbols;
};

// Linear decode state: user registry, assembled channel G (2N×4M), and the
// maintained inverse of the decode matrix Z.  The inverse is kept current
// incrementally by the update members (see fast_update.cpp); a full rebuild
// is forced every refresh_interval updates to bound floating-point drift.
class DecoderState {
public:
    DecoderState(std::size_t antennas, DecoderMode mode, std::size_t refresh_interval = 64);

    static DecoderState from_users(std::size_t antennas, DecoderMode mode,
                                   std::vector<UserChannel> users,
                                   std::size_t refresh_interval = 64);

    std::size_t antennas() const { return antennas_; }
    const DecoderMode& mode() const { return mode_; }
    const std::vector<UserChannel>& users() const { return users_; }
    std::size_t user_count() const { return users_.size(); }
    std::size_t dim() const { return 4 * users_.size(); }
    const ComplexMatrix& channel() const { return channel_; }
    const ComplexMatrix& zinv() const { return zinv_; }
    std::size_t updates_since_refresh() const { return updates_since_refresh_; }
    std::size_t refresh_interval() const { return refresh_interval_; }
    void set_refresh_interval(std::size_t r) { refresh_interval_ = r; }

    std::optional<std::size_t> find_user(const std::string& user_id) const;

    // Recomputes Zinv from scratch (the direct-inverse baseline).
    void rebuild();

    // Incremental updates, O(M²) each: only a 4k×4k block is ever inverted.
    void add_user(const UserChannel& user);
    void add_users(std::span<const UserChannel> users);
    void remove_user(const std::string& user_id);
    void remove_users(std::span<const std::string> user_ids);
    // Remove followed by add: the user re-enters at the trailing position.
    void update_csi(const std::string& user_id, const UserChannel& new_channel);

    // Filters y through Q = Zinv·Gᴴ and detects per entry; registry order.
    std::vector<UserDecision> decode(std::span<const Complex> y, const Constellation& cons) const;

    // ‖Z·Zinv − I‖_F, the drift measure used by tests and verified replays.
    double consistency_residual() const;

private:
    void after_update();  // bump counter, symmetrize, maybe refresh
    const std::vector<Complex>& cached_gains() const;

    std::size_t antennas_;
    DecoderMode mode_;
    std::size_t refresh_interval_;
    std::vector<UserChannel> users_;
    ComplexMatrix channel_;  // 2N×4M
    ComplexMatrix zinv_;     // 4M×4M

    std::size_t updates_since_refresh_ = 0;
    mutable std::vector<Complex> gains_;  // diag(Q·G), cached per state version
    mutable bool gains_valid_ = false;
};

}  // namespace mimo

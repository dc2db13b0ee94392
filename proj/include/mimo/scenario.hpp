#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "mimo/channel.hpp"
#include "mimo/decoder.hpp"

namespace mimo {

struct ScenarioEvent {
    enum class Kind { Add, Remove, UpdateCsi };
    Kind kind;
    std::string user_id;
};

// Script validation/parsing failure; index is the offending event position
// (or npos for config-level problems).
class ScriptError : public std::runtime_error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    ScriptError(std::size_t event_index, const std::string& what)
        : std::runtime_error(what), index_(event_index) {}
    std::size_t event_index() const { return index_; }

private:
    std::size_t index_;
};

// Line-delimited script: one config object, then one event object per line.
// Field reference lives in docs/formats.md.
struct ScenarioScript {
    SystemConfig system;
    DetectorKind detector = DetectorKind::ZF;
    std::string constellation = "qpsk";
    std::size_t verify_every = 8;
    std::size_t refresh_interval = 64;
    std::vector<ScenarioEvent> events;

    static ScenarioScript parse(std::istream& in);
    static ScenarioScript load(const std::string& path);

    // Schema-level replay: every add is of an absent user, every
    // remove/update of a present one, and ZF capacity is never exceeded.
    void validate() const;

    DecoderMode mode() const { return DecoderMode{detector, system.rho}; }
};

struct EventRecord {
    std::size_t index;
    ScenarioEvent::Kind kind;
    std::string user_id;
    std::size_t users_before;
    std::size_t users_after;
    bool verified = false;
    double oracle_rel_error = 0.0;  // meaningful only when verified
    std::size_t decode_blocks = 0;
    std::size_t decode_mismatches = 0;
    double fast_ns = 0.0;
    double rebuild_ns = 0.0;  // meaningful only when verified
};

struct RunReport {
    std::vector<EventRecord> events;
    double max_oracle_error = 0.0;
    double mean_speedup = 0.0;  // rebuild/fast over verified events
    std::size_t decode_blocks = 0;
    std::size_t decode_mismatches = 0;
    bool passed = true;

    std::string to_csv() const;
};

struct ReplayOptions {
    double oracle_tolerance = 1e-9;
    // injected decode comparisons per verified checkpoint (0 disables)
    std::size_t blocks_per_checkpoint = 0;
};

// Replays the script through the incremental updates; at every checkpoint
// compares the maintained inverse against a from-scratch rebuild and (when
// enabled) symbol decisions on injected noisy blocks.
RunReport run_scenario(const ScenarioScript& script, const ReplayOptions& opts = {});

}  // namespace mimo

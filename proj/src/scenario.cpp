#include "mimo/scenario.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "mimo/csv.hpp"
#include "mimo/rng.hpp"

namespace mimo {

namespace {

using nlohmann::json;

const char* kind_name(ScenarioEvent::Kind k) {
    switch (k) {
        case ScenarioEvent::Kind::Add: return "add";
        case ScenarioEvent::Kind::Remove: return "remove";
        case ScenarioEvent::Kind::UpdateCsi: return "update_csi";
    }
    return "?";
}

json parse_line(const std::string& line, std::size_t lineno) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw ScriptError(ScriptError::npos,
                          "line " + std::to_string(lineno) + ": not a JSON object");
    return j;
}

template <class T>
T field_or(const json& j, const char* key, T fallback, std::size_t lineno) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ScriptError(ScriptError::npos, "line " + std::to_string(lineno) +
                                                 ": field '" + key + "' has the wrong type");
    }
}

}  // namespace

ScenarioScript ScenarioScript::parse(std::istream& in) {
    ScenarioScript script;
    std::string line;
    std::size_t lineno = 0;
    bool have_config = false;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const json j = parse_line(line, lineno);
        const auto type = field_or<std::string>(j, "type", "", lineno);
        if (!have_config) {
            if (type != "config")
                throw ScriptError(ScriptError::npos, "line " + std::to_string(lineno) +
                                                         ": first object must have type=config");
            script.system.antennas = field_or<std::size_t>(j, "antennas", 100, lineno);
            const double rho_db = field_or<double>(j, "rho_db", 20.0, lineno);
            script.system.rho = std::pow(10.0, rho_db / 10.0);
            script.system.seed = field_or<std::uint64_t>(j, "seed", 1, lineno);
            const auto mode = field_or<std::string>(j, "mode", "zf", lineno);
            if (mode == "zf") script.detector = DetectorKind::ZF;
            else if (mode == "mmse") script.detector = DetectorKind::MMSE;
            else
                throw ScriptError(ScriptError::npos, "line " + std::to_string(lineno) +
                                                         ": mode must be zf or mmse");
            const auto beta = field_or<std::string>(j, "beta_policy", "all_ones", lineno);
            if (beta == "all_ones") script.system.beta.kind = BetaPolicy::Kind::AllOnes;
            else if (beta == "log_normal") script.system.beta.kind = BetaPolicy::Kind::LogNormal;
            else
                throw ScriptError(ScriptError::npos,
                                  "line " + std::to_string(lineno) +
                                      ": beta_policy must be all_ones or log_normal");
            script.system.beta.sigma_db = field_or<double>(j, "sigma_db", 8.0, lineno);
            script.constellation = field_or<std::string>(j, "constellation", "qpsk", lineno);
            script.verify_every = field_or<std::size_t>(j, "verify_every", 8, lineno);
            script.refresh_interval = field_or<std::size_t>(j, "refresh_interval", 64, lineno);
            if (script.verify_every < 1)
                throw ScriptError(ScriptError::npos, "verify_every must be at least 1");
            if (script.refresh_interval < 1)
                throw ScriptError(ScriptError::npos, "refresh_interval must be at least 1");
            have_config = true;
            continue;
        }
        ScenarioEvent ev;
        if (type == "add") ev.kind = ScenarioEvent::Kind::Add;
        else if (type == "remove") ev.kind = ScenarioEvent::Kind::Remove;
        else if (type == "update_csi") ev.kind = ScenarioEvent::Kind::UpdateCsi;
        else
            throw ScriptError(script.events.size(),
                              "line " + std::to_string(lineno) + ": unknown event type '" +
                                  type + "'");
        ev.user_id = field_or<std::string>(j, "user", "", lineno);
        if (ev.user_id.empty())
            throw ScriptError(script.events.size(),
                              "line " + std::to_string(lineno) + ": event needs a user field");
        script.events.push_back(std::move(ev));
    }
    if (!have_config)
        throw ScriptError(ScriptError::npos, "script has no config line");
    script.system.validate();
    Constellation::parse(script.constellation);  // throws on bad name
    return script;
}

ScenarioScript ScenarioScript::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ScriptError(ScriptError::npos, "cannot open script " + path);
    return parse(f);
}

void ScenarioScript::validate() const {
    std::unordered_set<std::string> present;
    for (std::size_t i = 0; i < events.size(); ++i) {
        const ScenarioEvent& ev = events[i];
        switch (ev.kind) {
            case ScenarioEvent::Kind::Add:
                if (present.count(ev.user_id))
                    throw ScriptError(i, "event " + std::to_string(i) + ": add of user " +
                                             ev.user_id + " who is already present");
                if (detector == DetectorKind::ZF &&
                    4 * (present.size() + 1) > 2 * system.antennas)
                    throw ScriptError(i, "event " + std::to_string(i) +
                                             ": zero-forcing capacity exceeded at " +
                                             std::to_string(present.size() + 1) + " users");
                present.insert(ev.user_id);
                break;
            case ScenarioEvent::Kind::Remove:
                if (!present.erase(ev.user_id))
                    throw ScriptError(i, "event " + std::to_string(i) + ": remove of absent user " +
                                             ev.user_id);
                break;
            case ScenarioEvent::Kind::UpdateCsi:
                if (!present.count(ev.user_id))
                    throw ScriptError(i, "event " + std::to_string(i) + ": update of absent user " +
                                             ev.user_id);
                break;
        }
    }
}

namespace {

double elapsed_ns(std::chrono::steady_clock::time_point t0,
                  std::chrono::steady_clock::time_point t1) {
    return std::chrono::duration<double, std::nano>(t1 - t0).count();
}

}  // namespace

RunReport run_scenario(const ScenarioScript& script, const ReplayOptions& opts) {
    script.system.validate();
    script.validate();
    const Constellation cons = Constellation::parse(script.constellation);

    DecoderState state(script.system.antennas, script.mode(), script.refresh_interval);
    std::unordered_map<std::string, std::uint64_t> next_epoch;

    RunReport report;
    double speedup_sum = 0.0;
    std::size_t speedup_n = 0;

    using clock = std::chrono::steady_clock;
    for (std::size_t i = 0; i < script.events.size(); ++i) {
        const ScenarioEvent& ev = script.events[i];
        EventRecord rec;
        rec.index = i;
        rec.kind = ev.kind;
        rec.user_id = ev.user_id;
        rec.users_before = state.user_count();

        const auto t0 = clock::now();
        switch (ev.kind) {
            case ScenarioEvent::Kind::Add:
                state.add_user(
                    draw_user_channel(script.system, ev.user_id, next_epoch[ev.user_id]++));
                break;
            case ScenarioEvent::Kind::Remove: state.remove_user(ev.user_id); break;
            case ScenarioEvent::Kind::UpdateCsi:
                state.update_csi(
                    ev.user_id,
                    draw_user_channel(script.system, ev.user_id, next_epoch[ev.user_id]++));
                break;
        }
        rec.users_after = state.user_count();
        rec.fast_ns = elapsed_ns(t0, clock::now());

        const bool checkpoint =
            ((i + 1) % script.verify_every == 0) || (i + 1 == script.events.size());
        if (checkpoint) {
            rec.verified = true;
            DecoderState reference = state;
            const auto r0 = clock::now();
            reference.rebuild();
            rec.rebuild_ns = elapsed_ns(r0, clock::now());
            rec.oracle_rel_error = relative_error(state.zinv(), reference.zinv());
            report.max_oracle_error = std::max(report.max_oracle_error, rec.oracle_rel_error);
            if (rec.oracle_rel_error > opts.oracle_tolerance) report.passed = false;
            if (rec.fast_ns > 0.0) {
                speedup_sum += rec.rebuild_ns / rec.fast_ns;
                ++speedup_n;
            }

            if (opts.blocks_per_checkpoint > 0 && state.user_count() > 0) {
                const std::size_t dim = state.dim();
                std::vector<Complex> x(dim);
                for (std::size_t b = 0; b < opts.blocks_per_checkpoint; ++b) {
                    UniformStream sym(script.system.seed, substream(kStreamSymbols, i, b));
                    for (std::size_t p = 0; p < dim; ++p)
                        x[p] = cons.point(sym.next_below(static_cast<std::uint32_t>(cons.size())));
                    GaussianStream noise(script.system.seed, substream(kStreamNoise, i, b));
                    const std::vector<Complex> y =
                        received_signal(state.channel(), x, script.system.rho, &noise);
                    const auto fast_dec = state.decode(y, cons);
                    const auto ref_dec = reference.decode(y, cons);
                    ++rec.decode_blocks;
                    for (std::size_t u = 0; u < fast_dec.size(); ++u)
                        if (fast_dec[u].indices != ref_dec[u].indices) {
                            ++rec.decode_mismatches;
                            break;
                        }
                }
                report.decode_blocks += rec.decode_blocks;
                report.decode_mismatches += rec.decode_mismatches;
                if (rec.decode_mismatches > 0) report.passed = false;
            }
        }
        report.events.push_back(std::move(rec));
    }
    report.mean_speedup = speedup_n > 0 ? speedup_sum / static_cast<double>(speedup_n) : 0.0;
    return report;
}

std::string RunReport::to_csv() const {
    CsvWriter w({"event_index", "event", "user_id", "users_before", "users_after", "verified",
                 "oracle_rel_error", "decode_blocks", "decode_mismatches", "fast_ns",
                 "rebuild_ns"});
    for (const EventRecord& e : events) {
        w.cell(e.index)
            .cell(kind_name(e.kind))
            .cell(e.user_id)
            .cell(e.users_before)
            .cell(e.users_after)
            .cell(e.verified ? "yes" : "no");
        if (e.verified) w.cell(e.oracle_rel_error);
        else w.cell("");
        w.cell(e.decode_blocks).cell(e.decode_mismatches).cell(e.fast_ns);
        if (e.verified) w.cell(e.rebuild_ns);
        else w.cell("");
        w.end_row();
    }
    return w.str();
}

}  // namespace mimo

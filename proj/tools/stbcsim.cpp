// Command-line front end: scenario replay with oracle verification, error
// rate sweeps, operation-count tables, and wall-clock benchmarks.
// Exit codes: 0 success, 2 validation/usage error, 3 oracle failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mimo/bench.hpp"
#include "mimo/ber.hpp"
#include "mimo/complexity.hpp"
#include "mimo/csv.hpp"
#include "mimo/errors.hpp"
#include "mimo/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitOracle = 3;

void emit(const std::string& csv, const std::optional<std::string>& out_dir,
          const std::string& filename) {
    if (!out_dir) {
        std::fputs(csv.c_str(), stdout);
        return;
    }
    namespace fs = std::filesystem;
    fs::create_directories(*out_dir);
    const std::string path = (fs::path(*out_dir) / filename).string();
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << csv;
    f.close();
    if (!f) throw std::runtime_error("short write to " + path);
    std::printf("wrote %s\n", path.c_str());
}

struct CommonFlags {
    std::optional<std::uint64_t> seed;
    std::optional<std::string> mode;
    std::optional<double> rho_db;
    std::optional<std::size_t> antennas;
    std::optional<std::string> out_dir;

    void attach(CLI::App* cmd) {
        cmd->add_option("--seed", seed, "RNG seed");
        cmd->add_option("--mode", mode, "detector: zf or mmse")
            ->check(CLI::IsMember({"zf", "mmse"}));
        cmd->add_option("--rho-db", rho_db, "SNR in dB");
        cmd->add_option("--antennas", antennas, "base-station antenna count N");
        cmd->add_option("--out-dir", out_dir, "directory for CSV artifacts");
    }

    mimo::DetectorKind detector(mimo::DetectorKind fallback) const {
        if (!mode) return fallback;
        return *mode == "mmse" ? mimo::DetectorKind::MMSE : mimo::DetectorKind::ZF;
    }
};

int cmd_scenario(const std::string& path, const CommonFlags& common, std::size_t blocks,
                 double tolerance) {
    mimo::ScenarioScript script = mimo::ScenarioScript::load(path);
    if (common.seed) script.system.seed = *common.seed;
    if (common.antennas) script.system.antennas = *common.antennas;
    if (common.rho_db) script.system.rho = std::pow(10.0, *common.rho_db / 10.0);
    if (common.mode) script.detector = common.detector(script.detector);
    script.validate();

    mimo::ReplayOptions opts;
    opts.oracle_tolerance = tolerance;
    opts.blocks_per_checkpoint = blocks;
    const mimo::RunReport report = mimo::run_scenario(script, opts);

    emit(report.to_csv(), common.out_dir, "scenario_report.csv");
    std::printf("events=%zu max_oracle_error=%.3e mean_speedup=%.2f decode_mismatches=%zu/%zu %s\n",
                report.events.size(), report.max_oracle_error, report.mean_speedup,
                report.decode_mismatches, report.decode_blocks,
                report.passed ? "PASS" : "FAIL");
    return report.passed ? kExitOk : kExitOracle;
}

int cmd_tables(const CommonFlags& common, const std::vector<std::size_t>& m_values,
               std::size_t k) {
    using mimo::UpdateKind;
    const struct {
        UpdateKind kind;
        const char* file;
    } tables[] = {{UpdateKind::Add, "add_table.csv"},
                  {UpdateKind::Remove, "remove_table.csv"},
                  {UpdateKind::CsiUpdate, "csi_table.csv"}};
    for (const auto& table : tables) {
        mimo::CsvWriter w({"scenario", "m", "direct_ops", "fast_ops", "reduction_pct"});
        for (const mimo::CostReport& r : mimo::reduction_table(table.kind, m_values, k))
            w.row(mimo::update_kind_name(r.scenario), r.m, r.direct_ops, r.fast_ops,
                  r.reduction_pct);
        emit(w.str(), common.out_dir, table.file);
    }
    return kExitOk;
}

int cmd_ber(const CommonFlags& common, std::size_t users, std::vector<double> snr_db,
            std::size_t blocks, const std::string& constellation, bool noiseless, bool bits,
            bool fast_state) {
    mimo::BerConfig cfg;
    if (common.antennas) cfg.system.antennas = *common.antennas;
    if (common.seed) cfg.system.seed = *common.seed;
    cfg.detector = common.detector(mimo::DetectorKind::ZF);
    cfg.users = users;
    if (common.rho_db && snr_db.empty()) snr_db = {*common.rho_db};
    if (!snr_db.empty()) cfg.snr_db = std::move(snr_db);
    cfg.blocks = blocks;
    cfg.constellation = constellation;
    cfg.noiseless = noiseless;
    cfg.count_bits = bits;
    cfg.fast_state = fast_state;
    const auto points = mimo::run_ber(cfg);
    emit(mimo::ber_csv(points), common.out_dir, "ber.csv");
    return kExitOk;
}

int cmd_bench(const CommonFlags& common, const std::vector<std::size_t>& m_values,
              const std::string& scenario, std::size_t repetitions) {
    mimo::BenchConfig cfg;
    if (common.antennas) cfg.antennas = *common.antennas;
    if (common.seed) cfg.seed = *common.seed;
    if (common.rho_db) cfg.rho = std::pow(10.0, *common.rho_db / 10.0);
    cfg.detector = common.detector(mimo::DetectorKind::ZF);
    if (!m_values.empty()) cfg.user_counts = m_values;
    cfg.scenario = mimo::parse_update_kind(scenario);
    cfg.repetitions = repetitions;
    const auto rows = mimo::run_bench(cfg);
    emit(mimo::bench_csv(rows), common.out_dir, "bench.csv");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"space-time block code uplink simulator with incremental decoder updates"};
    app.require_subcommand(1);

    CommonFlags sc_common, tb_common, ber_common, bench_common;

    auto* sc = app.add_subcommand("scenario", "replay an event script with oracle checks");
    std::string script_path;
    std::size_t sc_blocks = 25;
    double sc_tolerance = 1e-9;
    sc->add_option("file", script_path, "script file (one JSON object per line)")
        ->required()
        ->check(CLI::ExistingFile);
    sc->add_option("--blocks", sc_blocks, "decode comparisons per checkpoint");
    sc->add_option("--tolerance", sc_tolerance, "oracle relative-error bound");
    sc_common.attach(sc);

    auto* tb = app.add_subcommand("tables", "emit operation-count tables");
    std::vector<std::size_t> tb_m = {10, 16, 24, 30};
    std::size_t tb_k = 4;
    tb->add_option("--m-values", tb_m, "user counts");
    tb->add_option("--k", tb_k, "block size in scalar columns");
    tb_common.attach(tb);

    auto* ber = app.add_subcommand("ber", "Monte-Carlo error-rate sweep");
    std::size_t ber_users = 10, ber_blocks = 1000;
    std::vector<double> ber_snr;
    std::string ber_constellation = "qpsk";
    bool ber_noiseless = false, ber_bits = false, ber_fast = false;
    ber->add_option("--users", ber_users, "user count M");
    ber->add_option("--snr-db", ber_snr, "SNR sweep points in dB");
    ber->add_option("--blocks", ber_blocks, "channel realizations per point");
    ber->add_option("--constellation", ber_constellation, "qpsk or 16qam");
    ber->add_flag("--noiseless", ber_noiseless, "disable the noise stream");
    ber->add_flag("--bits", ber_bits, "count Gray-label bit errors instead of symbols");
    ber->add_flag("--fast-state", ber_fast, "drive the decoder via incremental updates");
    ber_common.attach(ber);

    auto* bench = app.add_subcommand("bench", "wall-clock update-vs-rebuild benchmark");
    std::vector<std::size_t> bench_m;
    std::string bench_scenario = "remove";
    std::size_t bench_reps = 7;
    bench->add_option("--m-values", bench_m, "user counts");
    bench->add_option("--scenario", bench_scenario, "add, remove, or csi_update")
        ->check(CLI::IsMember({"add", "remove", "csi_update"}));
    bench->add_option("--repetitions", bench_reps, "timing repetitions (median)");
    bench_common.attach(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (sc->parsed()) return cmd_scenario(script_path, sc_common, sc_blocks, sc_tolerance);
        if (tb->parsed()) return cmd_tables(tb_common, tb_m, tb_k);
        if (ber->parsed())
            return cmd_ber(ber_common, ber_users, ber_snr, ber_blocks, ber_constellation,
                           ber_noiseless, ber_bits, ber_fast);
        if (bench->parsed()) return cmd_bench(bench_common, bench_m, bench_scenario, bench_reps);
    } catch (const mimo::ScriptError& e) {
        std::fprintf(stderr, "script error: %s\n", e.what());
        return kExitValidation;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    }
    return kExitValidation;
}

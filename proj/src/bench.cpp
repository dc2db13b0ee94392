#include "mimo/bench.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "mimo/csv.hpp"

namespace mimo {

namespace {

using clock_type = std::chrono::steady_clock;

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double elapsed_ns(clock_type::time_point t0, clock_type::time_point t1) {
    return std::chrono::duration<double, std::nano>(t1 - t0).count();
}

constexpr double kTargetSampleNs = 2e5;  // aim for ~200 µs per timed sample
constexpr std::size_t kMaxInner = 32;

std::size_t calibrate_inner(double single_ns) {
    if (single_ns <= 0.0) return kMaxInner;
    const double want = kTargetSampleNs / single_ns;
    return std::clamp<std::size_t>(static_cast<std::size_t>(want), 1, kMaxInner);
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
    if (cfg.repetitions < 3) throw std::invalid_argument("benchmark needs at least 3 repetitions");
    if (!(cfg.rho > 0.0)) throw std::invalid_argument("rho must be positive");

    std::vector<BenchRow> rows;
    rows.reserve(cfg.user_counts.size());
    const DecoderMode mode{cfg.detector, cfg.rho};

    for (const std::size_t m : cfg.user_counts) {
        if (m < 1) throw std::invalid_argument("benchmark needs at least one user");
        if (cfg.scenario == UpdateKind::Remove && m < 2)
            throw std::invalid_argument("remove benchmark needs at least two users");
        SystemConfig sys;
        sys.antennas = cfg.antennas;
        sys.seed = cfg.seed;
        sys.rho = cfg.rho;
        const DecoderState base = DecoderState::from_users(cfg.antennas, mode,
                                                           draw_user_set(sys, m), 1u << 30);

        std::function<void(DecoderState&)> op;
        switch (cfg.scenario) {
            case UpdateKind::Add: {
                op = [extra = draw_user_channel(sys, "extra")](DecoderState& s) {
                    s.add_user(extra);
                };
                break;
            }
            case UpdateKind::Remove: {
                op = [victim = base.users()[m / 2].user_id](DecoderState& s) {
                    s.remove_user(victim);
                };
                break;
            }
            case UpdateKind::CsiUpdate: {
                const std::string id = base.users()[m / 2].user_id;
                op = [id, fresh = draw_user_channel(sys, id, 1)](DecoderState& s) {
                    s.update_csi(id, fresh);
                };
                break;
            }
        }

        DecoderState post = base;
        op(post);

        // Warm-up, untimed: lets the allocator settle on a reuse pattern for
        // the large temporaries both paths churn through, so neither side
        // pays first-touch page costs inside a timed region.
        for (int k = 0; k < 3; ++k) {
            DecoderState s = base;
            op(s);
            post.rebuild();
        }

        auto time_once = [](auto&& fn) {
            const auto t0 = clock_type::now();
            fn();
            return elapsed_ns(t0, clock_type::now());
        };

        double single_ns;
        {
            DecoderState probe = base;
            single_ns = time_once([&] { op(probe); });
        }
        const std::size_t inner = calibrate_inner(single_ns);
        const std::size_t inner_d = calibrate_inner(time_once([&] { post.rebuild(); }));

        // Each op runs on a copy made immediately beforehand, so its working
        // set is as warm as the rebuild path's; the copy itself stays outside
        // the timed window.
        std::vector<double> fast_samples, direct_samples;
        fast_samples.reserve(cfg.repetitions);
        direct_samples.reserve(cfg.repetitions);
        for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
            double total = 0.0;
            for (std::size_t k = 0; k < inner; ++k) {
                DecoderState s = base;
                total += time_once([&] { op(s); });
            }
            fast_samples.push_back(total / static_cast<double>(inner));

            total = 0.0;
            for (std::size_t k = 0; k < inner_d; ++k) total += time_once([&] { post.rebuild(); });
            direct_samples.push_back(total / static_cast<double>(inner_d));
        }

        BenchRow row;
        row.m = m;
        row.fast_ns = median(std::move(fast_samples));
        row.direct_ns = median(std::move(direct_samples));
        row.speedup = row.fast_ns > 0.0 ? row.direct_ns / row.fast_ns : 0.0;
        rows.push_back(row);
    }
    return rows;
}

std::string bench_csv(std::span<const BenchRow> rows) {
    CsvWriter w({"m", "fast_ns", "direct_ns", "speedup"});
    for (const BenchRow& r : rows) w.row(r.m, r.fast_ns, r.direct_ns, r.speedup);
    return w.str();
}

}  // namespace mimo

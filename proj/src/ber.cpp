#include "mimo/ber.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "mimo/csv.hpp"
#include "mimo/rng.hpp"

namespace mimo {

namespace {

std::vector<UserChannel> block_channels(const SystemConfig& cfg, std::size_t users,
                                        std::uint64_t epoch) {
    std::vector<UserChannel> out;
    out.reserve(users);
    for (std::size_t i = 0; i < users; ++i)
        out.push_back(draw_user_channel(cfg, "u" + std::to_string(i), epoch));
    return out;
}

}  // namespace

std::vector<BerPoint> run_ber(const BerConfig& cfg) {
    cfg.system.validate();
    if (cfg.users < 1) throw std::invalid_argument("error-rate run needs at least one user");
    if (cfg.blocks < 1) throw std::invalid_argument("error-rate run needs at least one block");
    const Constellation cons = Constellation::parse(cfg.constellation);

    std::vector<BerPoint> out;
    out.reserve(cfg.snr_db.size());
    for (std::size_t s = 0; s < cfg.snr_db.size(); ++s) {
        SystemConfig sys = cfg.system;
        sys.rho = std::pow(10.0, cfg.snr_db[s] / 10.0);
        const DecoderMode mode{cfg.detector, sys.rho};

        DecoderState fast_state(sys.antennas, mode);
        if (cfg.fast_state)
            fast_state =
                DecoderState::from_users(sys.antennas, mode, block_channels(sys, cfg.users, 0));

        std::uint64_t errors = 0, total = 0;
        const std::size_t dim = 4 * cfg.users;
        std::vector<Complex> x(dim);
        std::vector<std::size_t> sent(dim);
        for (std::size_t b = 0; b < cfg.blocks; ++b) {
            DecoderState state(sys.antennas, mode);
            if (cfg.fast_state) {
                // same channels, reached through remove-and-readd updates;
                // updating every user in registry order restores the order
                if (b > 0)
                    for (std::size_t i = 0; i < cfg.users; ++i) {
                        const std::string id = "u" + std::to_string(i);
                        fast_state.update_csi(id, draw_user_channel(sys, id, b));
                    }
            } else {
                state = DecoderState::from_users(sys.antennas, mode,
                                                 block_channels(sys, cfg.users, b));
            }
            const DecoderState& st = cfg.fast_state ? fast_state : state;

            UniformStream sym(sys.seed, substream(kStreamSymbols, s, b));
            for (std::size_t p = 0; p < dim; ++p) {
                sent[p] = sym.next_below(static_cast<std::uint32_t>(cons.size()));
                x[p] = cons.point(sent[p]);
            }
            GaussianStream noise(sys.seed, substream(kStreamNoise, s, b));
            const std::vector<Complex> y =
                received_signal(st.channel(), x, sys.rho, cfg.noiseless ? nullptr : &noise);
            const auto decisions = st.decode(y, cons);
            for (std::size_t m = 0; m < decisions.size(); ++m)
                for (std::size_t k = 0; k < 4; ++k) {
                    const std::size_t got = decisions[m].indices[k];
                    const std::size_t want = sent[4 * m + k];
                    if (cfg.count_bits) {
                        errors += static_cast<std::uint64_t>(std::popcount(got ^ want));
                        total += cons.bits_per_symbol();
                    } else {
                        errors += got != want ? 1 : 0;
                        ++total;
                    }
                }
        }
        out.push_back({cfg.snr_db[s], cfg.blocks, errors, total,
                       total > 0 ? static_cast<double>(errors) / static_cast<double>(total) : 0.0});
    }
    return out;
}

std::string ber_csv(std::span<const BerPoint> points) {
    CsvWriter w({"snr_db", "blocks", "errors", "total", "rate"});
    for (const BerPoint& p : points) w.row(p.snr_db, p.blocks, p.errors, p.total, p.rate);
    return w.str();
}

}  // namespace mimo

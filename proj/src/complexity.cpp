#include "mimo/complexity.hpp"

#include <cmath>
#include <stdexcept>

#include "mimo/channel.hpp"
#include "mimo/decoder.hpp"
#include "mimo/linalg.hpp"
#include "mimo/op_count.hpp"

namespace mimo {

std::string update_kind_name(UpdateKind k) {
    switch (k) {
        case UpdateKind::Add: return "add";
        case UpdateKind::Remove: return "remove";
        case UpdateKind::CsiUpdate: return "csi_update";
    }
    throw std::logic_error("bad UpdateKind");
}

UpdateKind parse_update_kind(std::string_view name) {
    if (name == "add") return UpdateKind::Add;
    if (name == "remove") return UpdateKind::Remove;
    if (name == "csi_update" || name == "update_csi") return UpdateKind::CsiUpdate;
    throw std::invalid_argument("unknown update kind '" + std::string(name) + "'");
}

std::int64_t direct_ops(std::size_t m_new) {
    if (m_new < 1) throw std::invalid_argument("direct_ops requires at least one user");
    const std::int64_t n = static_cast<std::int64_t>(4 * m_new);
    return std::llround(static_cast<double>(4 * n * n * n + 10 * n * n - 7 * n) / 6.0);
}

std::int64_t inflate_ops(std::size_t m, std::size_t k) {
    const std::int64_t mm = static_cast<std::int64_t>(m), kk = static_cast<std::int64_t>(k);
    return kk * kk * kk + kk * kk * (12 * mm + 1) + (4 * kk + 1) * (4 * mm) * (4 * mm);
}

std::int64_t deflate_ops(std::size_t m, std::size_t k) {
    if (m < 1) throw std::invalid_argument("deflate_ops requires at least one user");
    const std::int64_t mm = static_cast<std::int64_t>(m), kk = static_cast<std::int64_t>(k);
    return kk * kk * kk + kk * kk * (4 * mm) + (kk + 1) * (4 * mm) * (4 * mm);
}

std::int64_t csi_update_ops(std::size_t m, std::size_t k) {
    if (m < 1) throw std::invalid_argument("csi_update_ops requires at least one user");
    const std::int64_t mm = static_cast<std::int64_t>(m), kk = static_cast<std::int64_t>(k);
    return 2 * kk * kk * kk + kk * kk * (16 * mm - 3) +
           (kk + 1) * (4 * (mm - 1)) * (4 * (mm - 1)) + (4 * kk + 1) * (4 * mm) * (4 * mm);
}

std::int64_t csi_update_ops_tabulated(std::size_t m, std::size_t k) {
    const std::int64_t kk = static_cast<std::int64_t>(k);
    return csi_update_ops(m, k) - kk * kk * kk;
}

CostReport cost_report(UpdateKind scenario, std::size_t m, std::size_t k) {
    CostReport r{};
    r.scenario = scenario;
    r.m = m;
    r.k = k;
    switch (scenario) {
        case UpdateKind::Add:
            r.direct_ops = direct_ops(m + 1);
            r.fast_ops = inflate_ops(m, k);
            break;
        case UpdateKind::Remove:
            if (m < 2) throw std::invalid_argument("remove table requires at least two users");
            r.direct_ops = direct_ops(m - 1);
            r.fast_ops = deflate_ops(m, k);
            break;
        case UpdateKind::CsiUpdate:
            r.direct_ops = direct_ops(m);
            r.fast_ops = csi_update_ops_tabulated(m, k);
            break;
    }
    const double frac = 1.0 - static_cast<double>(r.fast_ops) / static_cast<double>(r.direct_ops);
    r.reduction_pct = static_cast<int>(std::lround(100.0 * frac));
    return r;
}

std::vector<CostReport> reduction_table(UpdateKind scenario, std::span<const std::size_t> m_values,
                                        std::size_t k) {
    std::vector<CostReport> out;
    out.reserve(m_values.size());
    for (const std::size_t m : m_values) out.push_back(cost_report(scenario, m, k));
    return out;
}

namespace {

DecoderState seeded_state(std::size_t antennas, std::size_t m, std::uint64_t seed) {
    SystemConfig cfg;
    cfg.antennas = antennas;
    cfg.seed = seed;
    // huge refresh interval: the counted region must hold exactly one event
    return DecoderState::from_users(antennas, DecoderMode{DetectorKind::ZF, 100.0},
                                    draw_user_set(cfg, m), 1u << 30);
}

}  // namespace

std::uint64_t counted_update_ops(UpdateKind scenario, std::size_t antennas, std::size_t m,
                                 std::uint64_t seed) {
    SystemConfig cfg;
    cfg.antennas = antennas;
    cfg.seed = seed;
    DecoderState st = seeded_state(antennas, m, seed);
    switch (scenario) {
        case UpdateKind::Add: {
            const UserChannel extra = draw_user_channel(cfg, "extra");
            ops::CountScope scope;
            st.add_user(extra);
            return scope.count();
        }
        case UpdateKind::Remove: {
            if (m < 1) throw std::invalid_argument("remove replay requires at least one user");
            const std::string victim = st.users()[m / 2].user_id;
            ops::CountScope scope;
            st.remove_user(victim);
            return scope.count();
        }
        case UpdateKind::CsiUpdate: {
            if (m < 1) throw std::invalid_argument("replay requires at least one user");
            const std::string id = st.users()[m / 2].user_id;
            const UserChannel fresh = draw_user_channel(cfg, id, 1);
            ops::CountScope scope;
            st.update_csi(id, fresh);
            return scope.count();
        }
    }
    throw std::logic_error("bad UpdateKind");
}

std::uint64_t counted_direct_inverse_ops(UpdateKind scenario, std::size_t antennas, std::size_t m,
                                         std::uint64_t seed) {
    std::size_t m_new = m;
    switch (scenario) {
        case UpdateKind::Add: m_new = m + 1; break;
        case UpdateKind::Remove:
            if (m < 2) throw std::invalid_argument("remove replay requires at least two users");
            m_new = m - 1;
            break;
        case UpdateKind::CsiUpdate: m_new = m; break;
    }
    SystemConfig cfg;
    cfg.antennas = antennas;
    cfg.seed = seed;
    const ComplexMatrix g = assemble_channel(draw_user_set(cfg, m_new));
    const HermitianPD z = build_z(g, DecoderMode{DetectorKind::ZF, 100.0});
    ops::CountScope scope;
    const ComplexMatrix zi = hpd_inverse(z);
    (void)zi;
    return scope.count();
}

}  // namespace mimo

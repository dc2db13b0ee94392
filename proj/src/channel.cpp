#include "mimo/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mimo/errors.hpp"

namespace mimo {

void SystemConfig::validate() const {
    if (antennas < 1) throw std::invalid_argument("antenna count must be at least 1");
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw std::invalid_argument("rho must be positive and finite");
    if (beta.kind == BetaPolicy::Kind::LogNormal &&
        (!(beta.sigma_db >= 0.0) || !std::isfinite(beta.sigma_db)))
        throw std::invalid_argument("log-normal sigma_db must be nonnegative");
}

UserChannel UserChannel::make(std::string user_id, ComplexMatrix h, double beta) {
    if (h.cols() != 2)
        throw DimensionError("user channel must have 2 columns, got " + std::to_string(h.cols()));
    if (h.rows() < 1) throw DimensionError("user channel must have at least 1 row");
    if (!h.all_finite()) throw std::invalid_argument("user channel contains non-finite entries");
    if (!(beta > 0.0) || beta > 1.0 || !std::isfinite(beta))
        throw std::invalid_argument("beta must lie in (0, 1], got " + std::to_string(beta));
    UserChannel u;
    u.user_id = std::move(user_id);
    u.beta = beta;
    u.h_eff = Complex(beta) * effective_channel(h, coding_constants());
    u.h = std::move(h);
    return u;
}

UserChannel draw_user_channel(const SystemConfig& cfg, const std::string& user_id,
                              std::uint64_t epoch) {
    cfg.validate();
    GaussianStream gs(cfg.seed, substream(kStreamChannel, hash_name(user_id), epoch));
    ComplexMatrix h(cfg.antennas, 2);
    for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t r = 0; r < cfg.antennas; ++r) h(r, c) = gs.next_cn();
    return UserChannel::make(user_id, std::move(h), draw_single_beta(cfg, user_id, epoch));
}

std::vector<double> draw_beta_set(const SystemConfig& cfg, std::size_t m) {
    cfg.validate();
    std::vector<double> betas(m, 1.0);
    if (cfg.beta.kind == BetaPolicy::Kind::AllOnes || m == 0) return betas;
    for (std::size_t i = 0; i < m; ++i) {
        GaussianStream gs(cfg.seed, substream(kStreamBeta, i, 0));
        betas[i] = std::pow(10.0, cfg.beta.sigma_db * gs.next() / 20.0);
    }
    std::sort(betas.begin(), betas.end(), std::greater<>());
    const double top = betas.front();
    for (double& b : betas) b /= top;
    return betas;
}

double draw_single_beta(const SystemConfig& cfg, const std::string& user_id,
                        std::uint64_t epoch) {
    if (cfg.beta.kind == BetaPolicy::Kind::AllOnes) return 1.0;
    GaussianStream gs(cfg.seed, substream(kStreamBeta, hash_name(user_id), epoch));
    // attenuation-only draw keeps the gain in (0, 1] without a batch to rescale
    return std::pow(10.0, -std::abs(cfg.beta.sigma_db * gs.next()) / 20.0);
}

std::vector<UserChannel> draw_user_set(const SystemConfig& cfg, std::size_t m) {
    const std::vector<double> betas = draw_beta_set(cfg, m);
    std::vector<UserChannel> users;
    users.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const std::string id = "u" + std::to_string(i);
        GaussianStream gs(cfg.seed, substream(kStreamChannel, hash_name(id), 0));
        ComplexMatrix h(cfg.antennas, 2);
        for (std::size_t c = 0; c < 2; ++c)
            for (std::size_t r = 0; r < cfg.antennas; ++r) h(r, c) = gs.next_cn();
        users.push_back(UserChannel::make(id, std::move(h), betas[i]));
    }
    return users;
}

ComplexMatrix assemble_channel(std::span<const UserChannel> users) {
    ComplexMatrix g;
    for (const UserChannel& u : users) {
        if (!g.empty() && u.h_eff.rows() != g.rows())
            throw DimensionError("user " + u.user_id + " has " +
                                 std::to_string(u.h_eff.rows() / 2) +
                                 " antennas, expected " + std::to_string(g.rows() / 2));
        g.append_cols(u.h_eff);
    }
    return g;
}

std::vector<Complex> received_signal(const ComplexMatrix& g, std::span<const Complex> x,
                                     double rho, GaussianStream* noise) {
    if (x.size() != g.cols())
        throw DimensionError("symbol vector length " + std::to_string(x.size()) +
                             " does not match channel columns " + std::to_string(g.cols()));
    std::vector<Complex> y = matvec(g, x);
    const double scale = std::sqrt(rho / 2.0);
    for (Complex& v : y) v *= scale;
    if (noise)
        for (Complex& v : y) v += noise->next_cn();
    return y;
}

}  // namespace mimo

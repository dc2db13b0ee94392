#include "mimo/decoder.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "mimo/errors.hpp"
#include "mimo/op_count.hpp"

namespace mimo {

HermitianPD build_z(const ComplexMatrix& g, const DecoderMode& mode) {
    if (!(mode.rho > 0.0)) throw std::invalid_argument("rho must be positive");
    if (mode.kind == DetectorKind::ZF && g.cols() > g.rows())
        throw CapacityError("zero-forcing needs at least as many receive rows as code columns (" +
                            std::to_string(g.rows()) + " rows < " + std::to_string(g.cols()) +
                            " columns)");
    HermitianPD z = gram(g);
    if (mode.kind == DetectorKind::MMSE) {
        ComplexMatrix m = z.matrix();
        const double reg = 2.0 / mode.rho;
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += reg;
        ops::tally(m.rows());
        return HermitianPD(std::move(m));
    }
    return z;
}

DecoderState::DecoderState(std::size_t antennas, DecoderMode mode, std::size_t refresh_interval)
    : antennas_(antennas), mode_(mode), refresh_interval_(refresh_interval) {
    if (antennas_ < 1) throw std::invalid_argument("antenna count must be at least 1");
    if (!(mode_.rho > 0.0)) throw std::invalid_argument("rho must be positive");
    if (refresh_interval_ < 1) throw std::invalid_argument("refresh interval must be at least 1");
}

DecoderState DecoderState::from_users(std::size_t antennas, DecoderMode mode,
                                      std::vector<UserChannel> users,
                                      std::size_t refresh_interval) {
    DecoderState st(antennas, mode, refresh_interval);
    for (const UserChannel& u : users)
        if (u.h.rows() != antennas)
            throw DimensionError("user " + u.user_id + " has " + std::to_string(u.h.rows()) +
                                 " antennas, expected " + std::to_string(antennas));
    st.users_ = std::move(users);
    st.channel_ = assemble_channel(st.users_);
    st.rebuild();
    return st;
}

std::optional<std::size_t> DecoderState::find_user(const std::string& user_id) const {
    for (std::size_t i = 0; i < users_.size(); ++i)
        if (users_[i].user_id == user_id) return i;
    return std::nullopt;
}

void DecoderState::rebuild() {
    if (users_.empty()) {
        zinv_ = ComplexMatrix();
    } else {
        zinv_ = hpd_inverse(build_z(channel_, mode_));
    }
    updates_since_refresh_ = 0;
    gains_valid_ = false;
}

const std::vector<Complex>& DecoderState::cached_gains() const {
    if (!gains_valid_) {
        // gains[p] = [Q·G]_pp = [Zinv·(GᴴG)]_pp
        const ComplexMatrix s = gram(channel_).matrix();
        const std::size_t n = s.rows();
        gains_.assign(n, Complex{});
        for (std::size_t p = 0; p < n; ++p) {
            Complex acc{};
            auto sc = s.column(p);
            for (std::size_t k = 0; k < n; ++k) acc += zinv_(p, k) * sc[k];
            gains_[p] = acc;
        }
        ops::tally(n * n);
        gains_valid_ = true;
    }
    return gains_;
}

std::vector<UserDecision> DecoderState::decode(std::span<const Complex> y,
                                               const Constellation& cons) const {
    if (users_.empty()) return {};
    if (y.size() != channel_.rows())
        throw DimensionError("received vector length " + std::to_string(y.size()) +
                             " does not match 2N = " + std::to_string(channel_.rows()));
    const std::vector<Complex> t = conj_transpose_matvec(channel_, y);
    const std::vector<Complex> filtered = matvec(zinv_, t);
    const std::vector<std::size_t> idx = detect_indices(filtered, cached_gains(), cons, mode_.rho);
    std::vector<UserDecision> out(users_.size());
    for (std::size_t m = 0; m < users_.size(); ++m) {
        out[m].user_id = users_[m].user_id;
        for (std::size_t k = 0; k < 4; ++k) {
            out[m].indices[k] = idx[4 * m + k];
            out[m].symbols[k] = cons.point(idx[4 * m + k]);
        }
    }
    return out;
}

double DecoderState::consistency_residual() const {
    if (users_.empty()) return 0.0;
    const ComplexMatrix z = build_z(channel_, mode_).matrix();
    ComplexMatrix r = matmul(z, zinv_);
    for (std::size_t i = 0; i < r.rows(); ++i) r(i, i) -= 1.0;
    return r.frobenius_norm();
}

void DecoderState::after_update() {
    // enforce exact Hermitian symmetry, then bound drift via periodic rebuild
    for (std::size_t c = 0; c < zinv_.cols(); ++c) {
        zinv_(c, c) = Complex(zinv_(c, c).real(), 0.0);
        for (std::size_t r = c + 1; r < zinv_.rows(); ++r) {
            const Complex avg = 0.5 * (zinv_(r, c) + std::conj(zinv_(c, r)));
            zinv_(r, c) = avg;
            zinv_(c, r) = std::conj(avg);
        }
    }
    ops::tally((zinv_.rows() * (zinv_.rows() + 1)) / 2);
    gains_valid_ = false;
    ++updates_since_refresh_;
    if (updates_since_refresh_ >= refresh_interval_) rebuild();
}

}  // namespace mimo

// Incremental maintenance of the decoder inverse.  When the channel gains a
// trailing block of columns, the enlarged inverse follows from the
// partitioned-inverse identity: only the block Schur complement is inverted,
// never the full matrix.  Removal is the reverse read-off, and an arbitrary
// (non-trailing) block is first rotated to the back by an exact symmetric
// permutation of both the inverse and the channel columns.

#include "mimo/fast_update.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

#include "mimo/decoder.hpp"
#include "mimo/errors.hpp"
#include "mimo/op_count.hpp"

namespace mimo {

BlockPartition BlockPartition::split(const ComplexMatrix& m, std::size_t s) {
    if (m.rows() != m.cols()) throw DimensionError("block split requires a square matrix");
    if (s > m.rows()) throw DimensionError("split index exceeds matrix dimension");
    const std::size_t t = m.rows() - s;
    BlockPartition p;
    p.f11 = m.block(0, 0, s, s);
    p.f12 = m.block(0, s, s, t);
    p.f21 = m.block(s, 0, t, s);
    p.f22 = m.block(s, s, t, t);
    return p;
}

namespace {

// Hermitian parts accumulate roundoff asymmetry through products; pin them
// back before handing to the HPD factorization.
void symmetrize(ComplexMatrix& m) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
        m(c, c) = Complex(m(c, c).real(), 0.0);
        for (std::size_t r = c + 1; r < m.rows(); ++r) {
            const Complex avg = 0.5 * (m(r, c) + std::conj(m(c, r)));
            m(r, c) = avg;
            m(c, r) = std::conj(avg);
        }
    }
}

}  // namespace

void DecoderState::add_user(const UserChannel& user) { add_users({&user, 1}); }

void DecoderState::add_users(std::span<const UserChannel> batch) {
    if (batch.empty()) return;
    std::unordered_set<std::string> batch_ids;
    for (const UserChannel& u : batch) {
        if (u.h.rows() != antennas_)
            throw DimensionError("user " + u.user_id + " has " + std::to_string(u.h.rows()) +
                                 " antennas, expected " + std::to_string(antennas_));
        if (find_user(u.user_id))
            throw std::invalid_argument("user " + u.user_id + " is already registered");
        if (!batch_ids.insert(u.user_id).second)
            throw std::invalid_argument("duplicate user " + u.user_id + " in batch");
    }
    const std::size_t m_old = 4 * users_.size();
    const std::size_t k = 4 * batch.size();
    if (mode_.kind == DetectorKind::ZF && m_old + k > 2 * antennas_)
        throw CapacityError("zero-forcing capacity exceeded: " + std::to_string(m_old + k) +
                            " code columns > " + std::to_string(2 * antennas_) + " receive rows");

    ComplexMatrix ga;
    for (const UserChannel& u : batch) ga.append_cols(u.h_eff);

    if (users_.empty()) {
        // no existing block: the enlarged inverse is just the small direct one
        users_.assign(batch.begin(), batch.end());
        channel_ = std::move(ga);
        rebuild();
        return;
    }

    // b = Gᴴ·G_a, d = G_aᴴ·G_a (+ regularization), schur = d − bᴴ·Zinv·b
    const ComplexMatrix b = conj_transpose_matmul(channel_, ga);
    ComplexMatrix d = gram(ga).matrix();
    if (mode_.kind == DetectorKind::MMSE) {
        const double reg = 2.0 / mode_.rho;
        for (std::size_t i = 0; i < k; ++i) d(i, i) += reg;
        ops::tally(k);
    }
    const ComplexMatrix t = matmul(zinv_, b);
    ComplexMatrix schur = d - conj_transpose_matmul(b, t);
    symmetrize(schur);
    const ComplexMatrix f22 = hpd_inverse(HermitianPD(std::move(schur)));
    ComplexMatrix f12 = Complex(-1.0) * matmul(t, f22);
    const ComplexMatrix f11 = zinv_ - matmul_conj_transpose(f12, t);

    ComplexMatrix znew(m_old + k, m_old + k);
    znew.set_block(0, 0, f11);
    znew.set_block(0, m_old, f12);
    znew.set_block(m_old, 0, f12.conj_transpose());
    znew.set_block(m_old, m_old, f22);
    zinv_ = std::move(znew);

    channel_.append_cols(ga);
    users_.insert(users_.end(), batch.begin(), batch.end());
    after_update();
}

void DecoderState::remove_user(const std::string& user_id) { remove_users({&user_id, 1}); }

void DecoderState::remove_users(std::span<const std::string> user_ids) {
    if (user_ids.empty()) return;
    std::vector<std::size_t> positions;
    positions.reserve(user_ids.size());
    for (const std::string& id : user_ids) {
        const auto pos = find_user(id);
        if (!pos) throw UnknownUserError("unknown user " + id);
        if (std::find(positions.begin(), positions.end(), *pos) != positions.end())
            throw std::invalid_argument("duplicate user " + id + " in batch");
        positions.push_back(*pos);
    }

    if (positions.size() == users_.size()) {
        users_.clear();
        channel_ = ComplexMatrix();
        zinv_ = ComplexMatrix();
        updates_since_refresh_ = 0;
        gains_valid_ = false;
        return;
    }

    // gather map: kept index blocks in order, then departing blocks
    std::vector<char> leaving(users_.size(), 0);
    for (const std::size_t p : positions) leaving[p] = 1;
    std::vector<std::size_t> map;
    map.reserve(4 * users_.size());
    for (std::size_t u = 0; u < users_.size(); ++u)
        if (!leaving[u])
            for (std::size_t j = 0; j < 4; ++j) map.push_back(4 * u + j);
    for (std::size_t u = 0; u < users_.size(); ++u)
        if (leaving[u])
            for (std::size_t j = 0; j < 4; ++j) map.push_back(4 * u + j);
    const Permutation perm(std::move(map));

    const std::size_t k = 4 * positions.size();
    const std::size_t s = 4 * users_.size() - k;
    const ComplexMatrix zp = perm.is_identity() ? zinv_ : symmetric_permute(zinv_, perm);

    ComplexMatrix f22 = zp.block(s, s, k, k);
    symmetrize(f22);
    const ComplexMatrix f22_inv = hpd_inverse(HermitianPD(std::move(f22)));
    const ComplexMatrix f12 = zp.block(0, s, s, k);
    const ComplexMatrix w = matmul(f12, f22_inv);
    zinv_ = zp.block(0, 0, s, s) - matmul_conj_transpose(w, f12);

    ComplexMatrix gp = perm.is_identity() ? channel_ : permute_cols(channel_, perm);
    gp.erase_cols(s, k);
    channel_ = std::move(gp);

    std::vector<std::size_t> sorted = positions;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    for (const std::size_t p : sorted) users_.erase(users_.begin() + static_cast<std::ptrdiff_t>(p));

    after_update();
}

void DecoderState::update_csi(const std::string& user_id, const UserChannel& new_channel) {
    if (new_channel.user_id != user_id)
        throw std::invalid_argument("replacement channel is labeled " + new_channel.user_id +
                                    ", expected " + user_id);
    if (!find_user(user_id)) throw UnknownUserError("unknown user " + user_id);
    remove_user(user_id);
    add_user(new_channel);
}

}  // namespace mimo

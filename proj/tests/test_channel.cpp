#include <doctest.h>

#include <cmath>
#include <vector>

#include "mimo/channel.hpp"
#include "mimo/errors.hpp"
#include "test_util.hpp"

using mimo::BetaPolicy;
using mimo::Complex;
using mimo::ComplexMatrix;
using mimo::SystemConfig;
using mimo::UserChannel;

namespace {

SystemConfig small_cfg(std::size_t antennas = 8, std::uint64_t seed = 5) {
    SystemConfig cfg;
    cfg.antennas = antennas;
    cfg.seed = seed;
    return cfg;
}

bool bitwise_equal(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t c = 0; c < a.cols(); ++c)
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (a(r, c) != b(r, c)) return false;
    return true;
}

}  // namespace

TEST_CASE("channel draws are reproducible and user-independent") {
    const SystemConfig cfg = small_cfg();
    const UserChannel a = mimo::draw_user_channel(cfg, "u0");
    const UserChannel b = mimo::draw_user_channel(cfg, "u0");
    CHECK(bitwise_equal(a.h, b.h));
    CHECK(bitwise_equal(a.h_eff, b.h_eff));

    const UserChannel c = mimo::draw_user_channel(cfg, "u1");
    CHECK_FALSE(bitwise_equal(a.h, c.h));
    const UserChannel d = mimo::draw_user_channel(cfg, "u0", 1);
    CHECK_FALSE(bitwise_equal(a.h, d.h));
}

TEST_CASE("channel entries have unit mean power") {
    SystemConfig cfg = small_cfg(100, 77);
    double acc = 0.0;
    std::size_t n = 0;
    for (int t = 0; t < 500; ++t) {
        const UserChannel u = mimo::draw_user_channel(cfg, "m" + std::to_string(t));
        for (std::size_t c = 0; c < 2; ++c)
            for (std::size_t r = 0; r < cfg.antennas; ++r) {
                acc += std::norm(u.h(r, c));
                ++n;
            }
    }
    CHECK(acc / static_cast<double>(n) == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("large-scale gain policies") {
    SystemConfig cfg = small_cfg();
    for (const double b : mimo::draw_beta_set(cfg, 6)) CHECK(b == 1.0);
    CHECK(mimo::draw_single_beta(cfg, "u0") == 1.0);

    cfg.beta.kind = BetaPolicy::Kind::LogNormal;
    cfg.beta.sigma_db = 8.0;
    const std::vector<double> betas = mimo::draw_beta_set(cfg, 6);
    CHECK(betas[0] == 1.0);
    for (std::size_t i = 0; i + 1 < betas.size(); ++i) CHECK(betas[i] >= betas[i + 1]);
    for (const double b : betas) {
        CHECK(b > 0.0);
        CHECK(b <= 1.0);
    }
    const double single = mimo::draw_single_beta(cfg, "u9");
    CHECK(single > 0.0);
    CHECK(single <= 1.0);
}

TEST_CASE("user channel cache coherence and validation") {
    const SystemConfig cfg = small_cfg();
    const UserChannel u = mimo::draw_user_channel(cfg, "u0");
    const ComplexMatrix want = Complex(u.beta) * mimo::effective_channel(u.h, mimo::coding_constants());
    CHECK(mimo::relative_error(u.h_eff, want) < 1e-15);

    CHECK_THROWS_AS(UserChannel::make("bad", ComplexMatrix(4, 3), 1.0), mimo::DimensionError);
    CHECK_THROWS(UserChannel::make("bad", ComplexMatrix(4, 2), 0.0));
    CHECK_THROWS(UserChannel::make("bad", ComplexMatrix(4, 2), 1.5));
    ComplexMatrix nanned(4, 2);
    nanned(0, 0) = Complex(std::nan(""), 0.0);
    CHECK_THROWS(UserChannel::make("bad", std::move(nanned), 1.0));
}

TEST_CASE("stacked channel layout") {
    const SystemConfig cfg = small_cfg();
    const std::vector<mimo::UserChannel> users = mimo::draw_user_set(cfg, 3);
    const ComplexMatrix g = mimo::assemble_channel(users);
    REQUIRE(g.rows() == 2 * cfg.antennas);
    REQUIRE(g.cols() == 12);
    for (std::size_t m = 0; m < 3; ++m)
        CHECK(bitwise_equal(g.block(0, 4 * m, g.rows(), 4), users[m].h_eff));

    // dropping user 1's columns matches assembling without user 1
    ComplexMatrix dropped = g;
    dropped.erase_cols(4, 4);
    std::vector<mimo::UserChannel> without = {users[0], users[2]};
    CHECK(bitwise_equal(dropped, mimo::assemble_channel(without)));

    CHECK(mimo::assemble_channel(std::vector<mimo::UserChannel>{}).empty());

    std::vector<mimo::UserChannel> mismatched = {users[0],
                                                 mimo::draw_user_channel(small_cfg(9), "x")};
    CHECK_THROWS_AS((void)mimo::assemble_channel(mismatched), mimo::DimensionError);
}

TEST_CASE("received signal synthesis") {
    // zero symbols, no noise: zero output
    const SystemConfig cfg = small_cfg();
    const ComplexMatrix g = mimo::assemble_channel(mimo::draw_user_set(cfg, 2));
    const std::vector<Complex> x0(8, Complex{});
    for (const Complex& v : mimo::received_signal(g, x0, 4.0, nullptr))
        CHECK(std::abs(v) == 0.0);

    // synthetic identity channel at rho=2: output equals input
    const ComplexMatrix id = ComplexMatrix::identity(4);
    std::vector<Complex> x = {Complex(1, 2), Complex(-3, 0.5), Complex(0, -1), Complex(2, 2)};
    const std::vector<Complex> y = mimo::received_signal(id, x, 2.0, nullptr);
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(y[i] - x[i]) < 1e-15);

    CHECK_THROWS_AS((void)mimo::received_signal(id, x0, 2.0, nullptr), mimo::DimensionError);

    // noise-only variance
    mimo::GaussianStream noise(11, 22);
    const ComplexMatrix zeros(200, 4);
    const std::vector<Complex> xz(4, Complex{});
    double acc = 0.0;
    std::size_t n = 0;
    for (int t = 0; t < 500; ++t)
        for (const Complex& v : mimo::received_signal(zeros, xz, 4.0, &noise)) {
            acc += std::norm(v);
            ++n;
        }
    CHECK(acc / static_cast<double>(n) == doctest::Approx(1.0).epsilon(0.02));

    // identical seeds replay identical noise
    mimo::GaussianStream n1(3, 9), n2(3, 9);
    const auto y1 = mimo::received_signal(zeros, xz, 4.0, &n1);
    const auto y2 = mimo::received_signal(zeros, xz, 4.0, &n2);
    for (std::size_t i = 0; i < y1.size(); ++i) CHECK(y1[i] == y2[i]);
}

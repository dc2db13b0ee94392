#include <doctest.h>

#include <bit>
#include <cmath>
#include <random>
#include <vector>

#include "mimo/constellation.hpp"
#include "mimo/errors.hpp"
#include "mimo/stbc.hpp"
#include "test_util.hpp"

using mimo::Complex;
using mimo::ComplexMatrix;
using mimo::Constellation;
using mimo::SymbolVector;

namespace {

// stack the two time-slot columns of a 2-column received block
std::vector<Complex> vec_two_slots(const ComplexMatrix& y) {
    std::vector<Complex> out;
    out.reserve(2 * y.rows());
    for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t r = 0; r < y.rows(); ++r) out.push_back(y(r, s));
    return out;
}

}  // namespace

TEST_CASE("code constants: golden pair and energy identities") {
    const mimo::CodeConstants& k = mimo::coding_constants();
    const double s5 = std::sqrt(5.0);
    CHECK(k.b.real() == doctest::Approx((1 + s5) / 2).epsilon(1e-12));
    CHECK(k.d.real() == doctest::Approx((1 - s5) / 2).epsilon(1e-12));
    CHECK(k.b.imag() == 0.0);
    CHECK(k.d.imag() == 0.0);
    CHECK(k.gamma == Complex(0, 1));

    const double a2 = std::norm(k.a), c2 = std::norm(k.c);
    const double b = k.b.real(), d = k.d.real();
    CHECK(std::abs(a2 - (1 + d * d) / 5) < 1e-15);
    CHECK(std::abs(c2 - (1 + b * b) / 5) < 1e-15);
    CHECK(std::abs(a2 + c2 - 1.0) < 1e-14);
    CHECK(std::abs(a2 * b * b + c2 * d * d - 1.0) < 1e-14);
    CHECK(std::abs(a2 * b + c2 * d) < 1e-14);
}

TEST_CASE("encoder: zero input, unit input, per-block energy") {
    const auto& k = mimo::coding_constants();
    const SymbolVector zero{{Complex{}, Complex{}, Complex{}, Complex{}}};
    CHECK(mimo::encode(zero, k).frobenius_norm() == 0.0);

    const SymbolVector e1{{1.0, Complex{}, Complex{}, Complex{}}};
    const ComplexMatrix x = mimo::encode(e1, k);
    CHECK(std::abs(x(0, 0) - k.a) < 1e-15);
    CHECK(std::abs(x(1, 1) - k.c) < 1e-15);
    CHECK(std::abs(x(0, 1)) == 0.0);
    CHECK(std::abs(x(1, 0)) == 0.0);

    // tr(X Xᴴ) = Σ|xᵢ|² holds per instance thanks to the constant identities
    std::mt19937_64 rng(21);
    const Constellation qpsk = Constellation::qpsk();
    std::uniform_int_distribution<std::size_t> pick(0, 3);
    for (int t = 0; t < 50; ++t) {
        SymbolVector s{};
        double want = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            s[i] = qpsk.point(pick(rng));
            want += std::norm(s[i]);
        }
        const ComplexMatrix enc = mimo::encode(s, k);
        const double tr = enc.frobenius_norm() * enc.frobenius_norm();
        CHECK(std::abs(tr - want) < 1e-13);
    }
}

TEST_CASE("effective channel: explicit small cases") {
    const auto& k = mimo::coding_constants();
    CHECK(mimo::effective_channel(ComplexMatrix(3, 2), k).frobenius_norm() == 0.0);

    ComplexMatrix h(1, 2);
    h(0, 0) = 1.0;
    const ComplexMatrix he = mimo::effective_channel(h, k);
    REQUIRE(he.rows() == 2);
    REQUIRE(he.cols() == 4);
    CHECK(std::abs(he(0, 0) - k.a) < 1e-15);
    CHECK(std::abs(he(0, 1) - k.a * k.b) < 1e-15);
    CHECK(std::abs(he(0, 2)) == 0.0);
    CHECK(std::abs(he(0, 3)) == 0.0);
    CHECK(std::abs(he(1, 0)) == 0.0);
    CHECK(std::abs(he(1, 1)) == 0.0);
    CHECK(std::abs(he(1, 2) - k.gamma * k.a) < 1e-15);
    CHECK(std::abs(he(1, 3) - k.gamma * k.a * k.b) < 1e-15);

    CHECK_THROWS_AS((void)mimo::effective_channel(ComplexMatrix(4, 3), k), mimo::DimensionError);
}

TEST_CASE("defining equation: encode-then-vectorize equals the effective channel map") {
    const auto& k = mimo::coding_constants();
    std::mt19937_64 rng(22);
    std::normal_distribution<double> n(0.0, 1.0);
    for (int t = 0; t < 100; ++t) {
        const std::size_t antennas = 1 + static_cast<std::size_t>(t % 16);
        const ComplexMatrix h = testutil::random_matrix(antennas, 2, rng);
        SymbolVector x{};
        for (std::size_t i = 0; i < 4; ++i) x[i] = Complex(n(rng), n(rng));

        const ComplexMatrix y = mimo::matmul(h, mimo::encode(x, k));
        const std::vector<Complex> lhs = vec_two_slots(y);
        const std::vector<Complex> rhs =
            mimo::matvec(mimo::effective_channel(h, k), std::span<const Complex>(x.x));

        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            num += std::norm(lhs[i] - rhs[i]);
            den += std::norm(rhs[i]);
        }
        CHECK(std::sqrt(num) <= 1e-13 * std::sqrt(den));
    }
}

TEST_CASE("sampled column orthogonality improves with antenna count") {
    const auto& k = mimo::coding_constants();
    std::mt19937_64 rng(23);
    const auto mean_offdiag = [&](std::size_t antennas) {
        double acc = 0.0;
        std::size_t cnt = 0;
        for (int t = 0; t < 200; ++t) {
            const ComplexMatrix he =
                mimo::effective_channel(testutil::random_matrix(antennas, 2, rng), k);
            const ComplexMatrix z = mimo::gram(he).matrix();
            for (std::size_t p = 0; p < 4; ++p)
                for (std::size_t q = 0; q < 4; ++q)
                    if (p != q) {
                        acc += std::abs(z(p, q)) / static_cast<double>(antennas);
                        ++cnt;
                    }
        }
        return acc / static_cast<double>(cnt);
    };
    const double m100 = mean_offdiag(100);
    const double m200 = mean_offdiag(200);
    CHECK(m100 < 0.15);
    CHECK(m200 < m100);
}

TEST_CASE("constellations are unit energy and Gray labeled") {
    for (const auto& cons : {Constellation::qpsk(), Constellation::qam16()}) {
        double energy = 0.0;
        for (const Complex& p : cons.points()) energy += std::norm(p);
        CHECK(energy / static_cast<double>(cons.size()) == doctest::Approx(1.0).epsilon(1e-14));
        // nearest neighbours differ in exactly one label bit
        for (std::size_t i = 0; i < cons.size(); ++i) {
            double best = 1e9;
            for (std::size_t j = 0; j < cons.size(); ++j)
                if (j != i) best = std::min(best, std::abs(cons.point(i) - cons.point(j)));
            for (std::size_t j = 0; j < cons.size(); ++j)
                if (j != i && std::abs(cons.point(i) - cons.point(j)) < best * 1.0001)
                    CHECK(std::popcount(i ^ j) == 1);
        }
    }
    CHECK(Constellation::parse("16qam").size() == 16);
    CHECK_THROWS(Constellation::parse("8psk"));
}

TEST_CASE("detection: exact recovery, brute-force agreement, tie rule") {
    const Constellation qpsk = Constellation::qpsk();
    const double rho = 100.0;
    const double scale = std::sqrt(rho / 2.0);

    // noiseless: filtered = scale * gains * x recovers x for every point
    std::vector<Complex> gains(4, Complex(1.0));
    std::vector<Complex> filtered(4);
    for (std::size_t i = 0; i < 4; ++i) filtered[i] = scale * qpsk.point(i);
    const auto idx = mimo::detect_indices(filtered, gains, qpsk, rho);
    for (std::size_t i = 0; i < 4; ++i) CHECK(idx[i] == i);

    // random noisy instances against an exhaustive scan
    std::mt19937_64 rng(24);
    std::normal_distribution<double> n(0.0, 0.5);
    for (int t = 0; t < 200; ++t) {
        const Complex g(1.0 + n(rng) * 0.1, n(rng) * 0.1);
        const Complex f = scale * g * qpsk.point(static_cast<std::size_t>(t) % 4) +
                          Complex(n(rng), n(rng));
        const auto got = mimo::detect_indices(std::vector<Complex>{f}, std::vector<Complex>{g},
                                              qpsk, rho);
        std::size_t want = 0;
        double bestd = 1e300;
        for (std::size_t i = 0; i < 4; ++i) {
            const double d2 = std::norm(f - scale * g * qpsk.point(i));
            if (d2 < bestd) {
                bestd = d2;
                want = i;
            }
        }
        CHECK(got[0] == want);
    }

    // perfect tie (zero observation): lowest index wins
    const auto tie = mimo::detect_indices(std::vector<Complex>{Complex{}},
                                          std::vector<Complex>{Complex(1.0)}, qpsk, rho);
    CHECK(tie[0] == 0);

    // single-candidate constellation always returns that candidate
    // (degenerate case covered by the lowest-index rule above)
    CHECK_THROWS_AS(
        (void)mimo::detect_indices(filtered, std::vector<Complex>(3, Complex(1.0)), qpsk, rho),
        mimo::DimensionError);
}

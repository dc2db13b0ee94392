#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "mimo/complexity.hpp"
#include "mimo/errors.hpp"

using mimo::cost_report;
using mimo::csi_update_ops;
using mimo::csi_update_ops_tabulated;
using mimo::deflate_ops;
using mimo::direct_ops;
using mimo::inflate_ops;
using mimo::UpdateKind;

TEST_CASE("direct inversion cost fixtures") {
    CHECK(direct_ops(1) == 65);
    CHECK(direct_ops(10) == 45287);
    CHECK(direct_ops(11) == 59965);
    CHECK(direct_ops(15) == 149930);
    CHECK(direct_ops(25) == 683217);
    CHECK_THROWS_AS((void)direct_ops(0), std::invalid_argument);
}

TEST_CASE("incremental admission cost fixtures") {
    CHECK(inflate_ops(10) == 29200);
    CHECK(inflate_ops(16) == 72784);
    CHECK(inflate_ops(24) == 161360);
    CHECK(inflate_ops(30) == 250640);
    CHECK(inflate_ops(0) == 80);  // joining an empty system still pays the block inverse
}

TEST_CASE("incremental departure cost fixtures") {
    CHECK(deflate_ops(10) == 8704);
    CHECK(deflate_ops(16) == 21568);
    CHECK(deflate_ops(24) == 47680);
    CHECK(deflate_ops(30) == 73984);
    CHECK_THROWS_AS((void)deflate_ops(0), std::invalid_argument);
}

TEST_CASE("channel refresh cost fixtures and the tabulated offset") {
    CHECK(csi_update_ops(10) == 36320);
    CHECK(csi_update_ops_tabulated(10) == 36256);
    CHECK(csi_update_ops_tabulated(16) == 91744);
    CHECK(csi_update_ops_tabulated(24) == 205152);
    CHECK(csi_update_ops_tabulated(30) == 319776);
    CHECK(csi_update_ops(1) == 608);
    for (std::size_t m = 1; m <= 40; ++m)
        CHECK(csi_update_ops(m) - csi_update_ops_tabulated(m) == 64);  // K³ at K = 4
    CHECK_THROWS_AS((void)csi_update_ops(0), std::invalid_argument);
}

TEST_CASE("reduction percentages reproduce the reference rows") {
    const std::array<std::size_t, 4> ms = {10, 16, 24, 30};
    const std::vector<mimo::CostReport> add = mimo::reduction_table(UpdateKind::Add, ms);
    const std::vector<mimo::CostReport> rem = mimo::reduction_table(UpdateKind::Remove, ms);
    const std::vector<mimo::CostReport> csi = mimo::reduction_table(UpdateKind::CsiUpdate, ms);

    const std::array<int, 4> add_ref = {51, 66, 77, 81};
    const std::array<int, 4> rem_ref = {74, 86, 91, 93};
    const std::array<int, 4> csi_ref = {20, 49, 66, 73};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(std::abs(add[i].reduction_pct - add_ref[i]) <= 1);
        CHECK(std::abs(rem[i].reduction_pct - rem_ref[i]) <= 1);
        CHECK(std::abs(csi[i].reduction_pct - csi_ref[i]) <= 1);
    }
    CHECK(add[0].reduction_pct == 51);
    CHECK(rem[3].reduction_pct == 93);
    CHECK(csi[0].reduction_pct == 20);
    CHECK(add[0].direct_ops == 59965);   // baseline re-inverts with 11 users
    CHECK(rem[0].direct_ops == 33222);   // nine users remain
    CHECK(csi[0].direct_ops == 45287);   // same fleet size, fresh channel
}

TEST_CASE("cost report wires the right direct baseline per scenario") {
    CHECK(cost_report(UpdateKind::Add, 10).direct_ops == direct_ops(11));
    CHECK(cost_report(UpdateKind::Remove, 10).direct_ops == direct_ops(9));
    CHECK(cost_report(UpdateKind::CsiUpdate, 10).direct_ops == direct_ops(10));
    CHECK(cost_report(UpdateKind::CsiUpdate, 10).fast_ops == csi_update_ops_tabulated(10));
    CHECK_THROWS_AS((void)cost_report(UpdateKind::Remove, 1), std::invalid_argument);
}

TEST_CASE("incremental updates undercut direct inversion beyond small fleets") {
    // In very small systems the block bookkeeping costs more than a tiny
    // direct inverse; each scenario has a well-defined crossover.
    CHECK(inflate_ops(2) > direct_ops(3));
    for (std::size_t m = 3; m <= 100; ++m) CHECK(inflate_ops(m) < direct_ops(m + 1));

    CHECK(deflate_ops(4) > direct_ops(3));
    for (std::size_t m = 5; m <= 100; ++m) CHECK(deflate_ops(m) < direct_ops(m - 1));

    CHECK(csi_update_ops_tabulated(7) > direct_ops(7));
    for (std::size_t m = 8; m <= 100; ++m) CHECK(csi_update_ops_tabulated(m) < direct_ops(m));
}

TEST_CASE("savings grow monotonically with the user count") {
    auto frac = [](std::int64_t fast, std::int64_t direct) {
        return 1.0 - static_cast<double>(fast) / static_cast<double>(direct);
    };
    for (std::size_t m = 2; m < 100; ++m) {
        CHECK(frac(inflate_ops(m + 1), direct_ops(m + 2)) > frac(inflate_ops(m), direct_ops(m + 1)));
        CHECK(frac(csi_update_ops_tabulated(m + 1), direct_ops(m + 1)) >
              frac(csi_update_ops_tabulated(m), direct_ops(m)));
    }
    for (std::size_t m = 2; m < 100; ++m)
        CHECK(frac(deflate_ops(m + 1), direct_ops(m)) > frac(deflate_ops(m), direct_ops(m - 1)));
}

TEST_CASE("asymptotic growth orders: quadratic updates, cubic baseline") {
    const std::size_t m = 1000;
    const double add_ratio =
        static_cast<double>(inflate_ops(2 * m)) / static_cast<double>(inflate_ops(m));
    const double rem_ratio =
        static_cast<double>(deflate_ops(2 * m)) / static_cast<double>(deflate_ops(m));
    const double dir_ratio =
        static_cast<double>(direct_ops(2 * m)) / static_cast<double>(direct_ops(m));
    CHECK(add_ratio > 3.9);
    CHECK(add_ratio < 4.1);
    CHECK(rem_ratio > 3.9);
    CHECK(rem_ratio < 4.1);
    CHECK(dir_ratio > 7.9);
    CHECK(dir_ratio < 8.1);
}

TEST_CASE("instrumented admission is within a small factor of the model") {
    const std::uint64_t measured = mimo::counted_update_ops(UpdateKind::Add, 100, 10, 7);
    const auto model = static_cast<std::uint64_t>(inflate_ops(10));
    CHECK(measured > model / 4);
    CHECK(measured < model * 4);
}

TEST_CASE("instrumented direct inversion scales cubically") {
    const std::array<std::size_t, 4> ms = {10, 16, 24, 30};
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const std::size_t m : ms) {
        const std::uint64_t ops = mimo::counted_direct_inverse_ops(UpdateKind::CsiUpdate, 100, m, 7);
        const double x = std::log(static_cast<double>(4 * m));
        const double y = std::log(static_cast<double>(ops));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = 4.0;
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    CHECK(slope > 2.7);
    CHECK(slope < 3.3);
}

TEST_CASE("scenario names round trip") {
    for (const UpdateKind k : {UpdateKind::Add, UpdateKind::Remove, UpdateKind::CsiUpdate})
        CHECK(mimo::parse_update_kind(mimo::update_kind_name(k)) == k);
    CHECK(mimo::parse_update_kind("update_csi") == UpdateKind::CsiUpdate);
    CHECK_THROWS_AS((void)mimo::parse_update_kind("teleport"), std::invalid_argument);
}

#include <doctest.h>

#include <cmath>
#include <numeric>

#include "bridgecover/bounds.hpp"

using namespace bridgecover;

TEST_CASE("constants") {
    for (int l = 1; l <= 20; ++l) {
        const double a = 2 * Constants::v3 * l - Constants::gf_offset;
        const double b = Constants::v3 * (2 * l - Constants::ell_offset);
        CHECK(std::abs(a - b) < 1e-3);
    }
    CHECK(std::abs(Constants::ell_offset - Constants::gf_offset / Constants::v3) < 1e-3);
    CHECK(std::abs(Constants::v8 - 3.66386) < 1e-5);
    CHECK(std::abs(2 * Constants::v8 - Constants::borromean_vol) < 1e-4);
}

TEST_CASE("upper and improved bounds") {
    for (int n = 2; n <= 30; ++n) {
        CHECK(upper_bound(SlopePair(5, 2), n) == 4 * n);
        CHECK(upper_bound(SlopePair(7, 3), n) == 6 * n);
        CHECK(upper_bound(SlopePair(9, 4), n) == 8 * n);
        CHECK(improved_upper(SlopePair(5, 2), n) == Integer(3 * n));
        CHECK(improved_upper(SlopePair(7, 3), n) == Integer(4 * n));
        CHECK(improved_upper(SlopePair(9, 4), n) == Integer(5 * n));
    }
    CHECK(upper_bound(SlopePair(2, 1), 2) == 2);
    // 16 = 3*5 + 1 has k, m both odd.
    CHECK_FALSE(improved_upper(SlopePair(16, 5), 4));
    CHECK_FALSE(improved_upper(SlopePair(11, 4), 4));
    for (int k = 2; k <= 50; ++k)
        for (int m = 2; m <= 50; ++m) CHECK(improved_upper_formula(k, m, 1) <= Integer(k * m));
}

TEST_CASE("lower bound evaluations") {
    CHECK_FALSE(lower_bound(SlopePair(3, 1), 10));
    const auto lb = lower_bound(SlopePair(23, 13), 10);
    REQUIRE(lb);
    // Independent long double evaluation.
    const long double pi = std::acos(-1.0L);
    const long double expected =
        10 * std::pow(1 - 2 * std::sqrt(2.0L) * pi * pi / 100, 1.5L) * (6 - 2.6667L);
    CHECK(std::abs(lb->candidates[0].value - static_cast<double>(expected)) < 1e-4);
    CHECK(lb->candidates[0].valid);
    CHECK(lb->candidates[1].valid);

    const auto fig8 = lower_bound(SlopePair(5, 2), 10);
    REQUIRE(fig8);
    CHECK_FALSE(fig8->candidates[0].valid);
    CHECK(fig8->candidates[1].valid);
    CHECK(std::abs(fig8->candidates[1].value - 10 * std::pow(1 - 4 * M_PI * M_PI / 100, 1.5) * 2) < 1e-9);
    const auto large = lower_bound(SlopePair(5, 2), 1000000);
    CHECK(std::abs(large->candidates[1].value / 1000000 - 2) < 1e-4);

    const auto small = lower_bound(SlopePair(7, 2), 3);
    REQUIRE(small);
    CHECK_FALSE(small->candidates[1].in_domain);
    CHECK(small->candidates[1].value == 0);
    CHECK_FALSE(small->best());
}

TEST_CASE("lower bound is monotone past its threshold") {
    for (int p = 5; p <= 25; ++p)
        for (int q = 2; q < p - 1; ++q) {
            if (std::gcd(p, q) != 1) continue;
            double prev = 0;
            for (int n = 7; n <= 100; ++n) {
                const double v = lower_bound(SlopePair(p, q), n)->candidates[1].value;
                CHECK(v > prev);
                prev = v;
            }
        }
}

TEST_CASE("two-sided bounds") {
    for (int p = 2; p <= 25; ++p)
        for (int q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const SlopePair s(p, q);
            for (int n = 2; n <= 100; ++n) {
                const auto lb = lower_bound(s, n);
                if (!lb) continue;
                const double upper = upper_bound(s, n).get_d();
                for (const auto& e : lb->candidates)
                    if (e.valid) CHECK(e.value < upper);
                if (const auto imp = improved_upper(s, n)) CHECK(*imp <= upper_bound(s, n));
            }
        }
}

TEST_CASE("volume estimates") {
    CHECK(std::abs(vol_lower(SlopePair(5, 2)) - 2.02988) < 1e-4);
    CHECK(std::abs(vol_lower(SlopePair(9, 4)) - 2 * Constants::v3) < 1e-12);
    CHECK(std::abs(vol_lower(SlopePair(23, 13)) - Constants::v3 * (6 - 2.6667)) < 1e-12);
    CHECK(std::abs(vol_upper(SlopePair(5, 2)) - 7.32772) < 1e-4);
    CHECK(std::abs(vol_upper(SlopePair(23, 13)) - 4 * Constants::v8) < 1e-12);
    CHECK_THROWS_AS(vol_lower(SlopePair(7, 1)), std::invalid_argument);
    CHECK_THROWS_AS(vol_upper(SlopePair(7, 6)), std::invalid_argument);
    for (int p = 5; p <= 40; ++p)
        for (int q = 2; q < p - 1; ++q)
            if (std::gcd(p, q) == 1) CHECK(vol_lower(SlopePair(p, q)) >= 2 * Constants::v3);
}

TEST_CASE("volume based cover bounds") {
    const int n = 10000000;
    const auto five2 = volume_based_lower(2.81812, n, true);
    CHECK(std::abs(five2[1].value / n - 2.77664) < 1e-4);
    CHECK_FALSE(five2[0].valid);
    const auto six1 = volume_based_lower(3.16396, n, false);
    CHECK(std::abs(six1[0].value / n - 3.11739) < 1e-4);
    CHECK(six1[0].valid);
    const auto unit = volume_based_lower(Constants::v3, n, false);
    CHECK(std::abs(unit[0].value / n - 1) < 1e-4);
    CHECK_THROWS_AS(volume_based_lower(0, 10, false), std::invalid_argument);
    CHECK_THROWS_AS(volume_based_lower(-1, 10, false), std::invalid_argument);
}

TEST_CASE("excluded pairs are detected on the class") {
    CHECK(excluded_pair(SlopePair(5, 2)));
    CHECK(excluded_pair(SlopePair(5, 3)));
    CHECK(excluded_pair(SlopePair(7, 3)));
    CHECK(excluded_pair(SlopePair(7, 4)));
    CHECK_FALSE(excluded_pair(SlopePair(9, 4)));
    CHECK(format6(2.776632) == "2.77663");
    CHECK(format6(40) == "40");
}

TEST_CASE("report fields") {
    const auto r = bounds_report(SlopePair(7, 3), 10, 2.81812);
    CHECK(r.upper == 60);
    CHECK(r.improved_upper == Integer(40));
    CHECK(r.excluded_pair);
    CHECK(r.vol_based_cover_lower.size() == 2);
    const auto t = bounds_report(SlopePair(3, 1), 10);
    CHECK_FALSE(t.lower);
    CHECK(t.lower_reason == "torus link");
    CHECK_FALSE(t.vol_lower);
}

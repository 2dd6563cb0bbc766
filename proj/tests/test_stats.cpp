// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <cmath>

#include <stdexcept>

#include <doctest.h>

#include "unity/rng.hpp"
#include "unity/stats.hpp"

using namespace unity;

TEST_CASE("summary statistics") {
    const std::vector<double> xs{1.0, 2.0, 3.0, 4.0};
    const SummaryStats s = summarize(xs);
    CHECK(s.n == 4);
    CHECK(s.mean == doctest::Approx(2.5));
    CHECK(s.std_dev == doctest::Approx(std::sqrt(1.25)));
    CHECK(s.min == 1.0);
    CHECK(s.max == 4.0);
    CHECK(summarize({}).n == 0);
}

TEST_CASE("kolmogorov critical values match the classic table") {
    CHECK(kolmogorov_critical(0.01) == doctest::Approx(1.6276).epsilon(1e-3));
    CHECK(kolmogorov_critical(0.05) == doctest::Approx(1.3581).epsilon(1e-3));
    CHECK(kolmogorov_critical(0.10) == doctest::Approx(1.2238).epsilon(1e-3));
    CHECK(kolmogorov_sf(1.6276) == doctest::Approx(0.01).epsilon(1e-2));
    CHECK_THROWS_AS(kolmogorov_critical(0.0), std::invalid_argument);
}

TEST_CASE("true exponential samples pass the KS test, shifted ones fail") {
    SimRng rng(101);
    std::vector<double> good(100000);
    for (double& x : good) x = rng.exponential(0.1);
    CHECK(ks_test_exponential(good, 0.1, 0.01).pass);

    // 10% rate mismatch is far outside the critical band at this n
    CHECK_FALSE(ks_test_exponential(good, 0.11, 0.01).pass);

    // degenerate sample: all mass at one point
    const std::vector<double> degenerate(5000, 10.0);
    CHECK_FALSE(ks_test_exponential(degenerate, 0.1, 0.01).pass);

    CHECK_THROWS_AS(ks_statistic_exponential({}, 0.1), std::invalid_argument);
}

TEST_CASE("histogram bins with fixed width") {
    const std::vector<double> xs{0.5, 1.5, 1.7, 2.2, 99.9, 150.0};
    const Histogram h = histogram(xs, 100, 1.0);
    REQUIRE(h.counts.size() == 100);
    CHECK(h.counts[0] == 1);
    CHECK(h.counts[1] == 2);
    CHECK(h.counts[2] == 1);
    CHECK(h.counts[99] == 1);
    CHECK(h.overflow == 1);
    CHECK_THROWS_AS(histogram(xs, 0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(histogram(xs, 10, 0.0), std::invalid_argument);
}

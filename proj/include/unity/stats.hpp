// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef UNITY_STATS_HPP
#define UNITY_STATS_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace unity {

struct SummaryStats {
    std::size_t n = 0;
    double mean = 0.0;
    double std_dev = 0.0;  // population
    double min = 0.0;
    double max = 0.0;
};

SummaryStats summarize(std::span<const double> samples);

/// One-sample Kolmogorov-Smirnov statistic sup |F_n - F| against the
/// Exp(rate) CDF.
double ks_statistic_exponential(std::span<const double> samples, double rate);

/// Survival function of the Kolmogorov distribution,
/// Q(k) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 k^2).
double kolmogorov_sf(double k);

/// k with Q(k) = significance, found by bisection.
double kolmogorov_critical(double significance);

/// Finite-n critical D value (Stephens' approximation):
/// k_crit / (sqrt(n) + 0.12 + 0.11/sqrt(n)).
double ks_critical_value(std::size_t n, double significance);

struct KsReport {
    double statistic = 0.0;
    double critical = 0.0;
    bool pass = false;  // statistic < critical, i.e. not rejected
};

KsReport ks_test_exponential(std::span<const double> samples, double rate, double significance);

struct Histogram {
    double bin_width = 1.0;
    std::vector<std::uint64_t> counts;  // [i*width, (i+1)*width)
    std::uint64_t overflow = 0;
};

Histogram histogram(std::span<const double> samples, std::size_t bins, double width);

} // namespace unity

#endif // UNITY_STATS_HPP

// Copyright (c) 2026 The unity-sim developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "unity/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace unity {

SummaryStats summarize(std::span<const double> samples) {
    SummaryStats s;
    s.n = samples.size();
    if (s.n == 0) return s;
    s.min = std::numeric_limits<double>::infinity();
    s.max = -std::numeric_limits<double>::infinity();
    // Welford's online mean/variance
    double mean = 0.0, m2 = 0.0;
    std::size_t n = 0;
    for (double x : samples) {
        s.min = std::min(s.min, x);
        s.max = std::max(s.max, x);
        ++n;
        const double d1 = x - mean;
        mean += d1 / static_cast<double>(n);
        m2 += d1 * (x - mean);
    }
    s.mean = mean;
    s.std_dev = std::sqrt(m2 / static_cast<double>(n));
    return s;
}

double ks_statistic_exponential(std::span<const double> samples, double rate) {
    if (samples.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double cdf = 1.0 - std::exp(-rate * sorted[i]);
        const double di = static_cast<double>(i);
        d = std::max(d, std::max((di + 1.0) / n - cdf, cdf - di / n));
    }
    return d;
}

double kolmogorov_sf(double k) {
    if (k <= 0.0) return 1.0;
    double sum = 0.0;
    for (int j = 1; j <= 100; ++j) {
        const double term = std::exp(-2.0 * j * j * k * k);
        sum += (j % 2 == 1) ? term : -term;
        if (term < 1e-18) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

double kolmogorov_critical(double significance) {
    if (!(significance > 0.0 && significance < 1.0))
        throw std::invalid_argument("kolmogorov_critical: significance must be in (0,1)");
    double lo = 0.0, hi = 4.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (kolmogorov_sf(mid) > significance) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double ks_critical_value(std::size_t n, double significance) {
    const double k = kolmogorov_critical(significance);
    const double sn = std::sqrt(static_cast<double>(n));
    return k / (sn + 0.12 + 0.11 / sn);
}

KsReport ks_test_exponential(std::span<const double> samples, double rate, double significance) {
    KsReport r;
    r.statistic = ks_statistic_exponential(samples, rate);
    r.critical = ks_critical_value(samples.size(), significance);
    r.pass = r.statistic < r.critical;
    return r;
}

Histogram histogram(std::span<const double> samples, std::size_t bins, double width) {
    if (bins == 0 || !(width > 0.0)) throw std::invalid_argument("histogram: bad binning");
    Histogram h;
    h.bin_width = width;
    h.counts.assign(bins, 0);
    for (double x : samples) {
        if (x < 0.0) continue;
        const auto idx = static_cast<std::size_t>(x / width);
        if (idx < bins) {
            ++h.counts[idx];
        } else {
            ++h.overflow;
        }
    }
    return h;
}

} // namespace unity

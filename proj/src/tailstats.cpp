#include "tailel/tailstats.hpp"

#include "tailel/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tailel {

namespace {

void requireK(std::size_t k, std::size_t n) {
    if (k < 1 || k + 1 > n) {
        throw RangeError("k = " + std::to_string(k) + " outside [1, n-1] for n = " +
                         std::to_string(n));
    }
}

} // namespace

Sample makeSample(std::span<const double> values) {
    Sample s;
    s.values.reserve(values.size());
    for (double v : values) {
        if (std::isfinite(v) && v > 0.0) {
            s.values.push_back(v);
        } else {
            ++s.rejected;
        }
    }
    if (s.values.empty()) {
        throw EmptySampleError("no positive finite observations (" + std::to_string(s.rejected) +
                               " rejected)");
    }
    s.sorted = s.values;
    std::sort(s.sorted.begin(), s.sorted.end());
    return s;
}

double hill(const Sample& sample, std::size_t k) {
    const std::size_t n = sample.n();
    requireK(k, n);
    // Log-excesses over the threshold X_{n,n-k}, summed from the top.
    const double logThreshold = std::log(sample.orderStat(n - k));
    double sum = 0.0;
    for (std::size_t i = 1; i <= k; ++i) {
        sum += std::log(sample.orderStat(n - i + 1)) - logThreshold;
    }
    return sum / static_cast<double>(k);
}

LogSpacings logSpacings(const Sample& sample, std::size_t k) {
    const std::size_t n = sample.n();
    requireK(k, n);
    LogSpacings out;
    out.k = k;
    out.y.resize(k);
    double upper = std::log(sample.orderStat(n));
    double sum = 0.0;
    for (std::size_t i = 1; i <= k; ++i) {
        const double lower = std::log(sample.orderStat(n - i));
        out.y[i - 1] = static_cast<double>(i) * (upper - lower);
        sum += out.y[i - 1];
        upper = lower;
    }
    out.hillEstimate = sum / static_cast<double>(k);
    return out;
}

std::vector<std::size_t> KGrid::values() const {
    std::vector<std::size_t> ks;
    if (kStep == 0) return ks;
    for (std::size_t k = kMin; k <= kMax; k += kStep) ks.push_back(k);
    return ks;
}

void validateGrid(const KGrid& grid, std::size_t n) {
    if (grid.kStep < 1) throw RangeError("k-grid step must be >= 1");
    if (grid.kMin < 1 || grid.kMin > grid.kMax || grid.kMax + 1 > n) {
        throw RangeError("k-grid " + std::to_string(grid.kMin) + ":" + std::to_string(grid.kMax) +
                         " invalid for n = " + std::to_string(n));
    }
}

std::vector<std::pair<std::size_t, double>> hillSeries(const Sample& sample, const KGrid& grid) {
    validateGrid(grid, sample.n());
    std::vector<std::pair<std::size_t, double>> series;
    for (std::size_t k : grid.values()) series.emplace_back(k, hill(sample, k));
    return series;
}

} // namespace tailel

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace tailel {

/// Positive observations and their ascending order statistics.
///
/// Construct through makeSample(); entries that are non-finite or <= 0 are
/// dropped and counted in `rejected`.
struct Sample {
    std::vector<double> values;
    std::vector<double> sorted;
    std::size_t rejected = 0;

    std::size_t n() const { return sorted.size(); }
    /// X_{n,j} in 1-based order-statistic notation.
    double orderStat(std::size_t j) const { return sorted[j - 1]; }
};

/// Throws EmptySampleError if nothing survives filtering.
Sample makeSample(std::span<const double> values);

/// y[i-1] = i * (log X_{n,n-i+1} - log X_{n,n-i}), i = 1..k.
struct LogSpacings {
    std::size_t k = 0;
    std::vector<double> y;
    double hillEstimate = 0.0;
};

/// Hill's estimator from the top k order statistics. Requires 1 <= k <= n-1.
double hill(const Sample& sample, std::size_t k);

LogSpacings logSpacings(const Sample& sample, std::size_t k);

struct KGrid {
    std::size_t kMin = 0;
    std::size_t kMax = 0;
    std::size_t kStep = 1;

    std::vector<std::size_t> values() const;
};

/// Throws RangeError unless 1 <= kMin <= kMax <= n-1 and kStep >= 1.
void validateGrid(const KGrid& grid, std::size_t n);

std::vector<std::pair<std::size_t, double>> hillSeries(const Sample& sample, const KGrid& grid);

} // namespace tailel

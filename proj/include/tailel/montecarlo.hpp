#pragma once

#include "tailel/distributions.hpp"
#include "tailel/intervals.hpp"
#include "tailel/likelihood.hpp"
#include "tailel/tailstats.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tailel {

struct SimulationPlan {
    DistributionSpec dist = DistributionSpec::frechet(1.0);
    std::size_t n = 1000;
    std::size_t reps = 10000;
    KGrid kGrid{10, 200, 5};
    double level = 0.95;
    std::vector<MethodKind> methods{kAllMethods.begin(), kAllMethods.end()};
    std::uint64_t baseSeed = 20240601;

    /// n = 1000, reps = 10000, k = 10..200 step 5, level 0.95, all methods.
    static SimulationPlan studyDefaults(DistributionSpec dist);
    /// Same as studyDefaults with reps = 2000.
    static SimulationPlan deskScale(DistributionSpec dist);
};

/// Throws ParameterError / RangeError / DomainError on an invalid plan.
void validatePlan(const SimulationPlan& plan);

struct RunOptions {
    unsigned threads = 0; ///< 0 = hardware concurrency
};

struct CoverageRow {
    std::size_t k = 0;
    MethodKind method = MethodKind::NormalSelfNorm;
    double coverage = 0.0;
    double avgLength = 0.0; ///< NaN when every interval was degenerate
    double mcStdErr = 0.0;
    std::size_t degenerateCount = 0; ///< includes numerical failures
    std::size_t failureCount = 0;
};

struct CoverageReport {
    SimulationPlan plan;
    double trueGamma = 0.0;
    std::vector<CoverageRow> rows; ///< k-major, methods in plan order
    double wallTimeSeconds = 0.0;

    /// Throws std::out_of_range if the pair was not simulated.
    const CoverageRow& row(std::size_t k, MethodKind method) const;
};

/// Replication r samples from stream (baseSeed, r); each sample is reused
/// across the whole k-grid. Results do not depend on the thread count.
CoverageReport runPlan(const SimulationPlan& plan, RunOptions options = {});

/// l_EL / l_AEL evaluated at the true gamma for each replication, in
/// replication order. Undefined EL values come back as +inf.
std::vector<double> nullStatistics(const DistributionSpec& dist, std::size_t n, std::size_t reps,
                                   std::size_t k, const AdjustmentPolicy& policy,
                                   std::uint64_t baseSeed, RunOptions options = {});

struct MethodDelta {
    MethodKind method;
    double coverageDelta; ///< coverage - nominal level
};

struct LengthRatio {
    MethodKind numerator;
    MethodKind denominator;
    double ratio;
};

struct ComparisonRow {
    std::size_t k = 0;
    std::vector<MethodDelta> deltas;
    std::vector<LengthRatio> lengthRatios; ///< every unordered pair, plan order
    MethodKind closest = MethodKind::NormalSelfNorm;
};

struct ComparisonTable {
    double level = 0.95;
    std::vector<ComparisonRow> rows;
};

/// Per-k coverage error and pairwise length ratios. Requires >= 2 methods.
ComparisonTable compareMethods(const CoverageReport& report);

} // namespace tailel

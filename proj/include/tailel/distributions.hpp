#pragma once

#include "tailel/tailstats.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tailel {

enum class DistributionKind { Frechet, Burr, Pareto, Exponential };

/// Heavy-tailed test distribution plus two exact-oracle families.
///
/// Parameters by kind:
///   Frechet      {alpha}           F(x) = exp(-x^-alpha)
///   Burr         {alpha, beta}     F(x) = 1 - (1 + x^alpha)^-beta
///   Pareto       {gamma}           F(x) = 1 - x^(-1/gamma), x >= 1
///   Exponential  {mean}            F(x) = 1 - exp(-x/mean)
struct DistributionSpec {
    DistributionKind kind;
    std::vector<double> params;

    static DistributionSpec frechet(double alpha);
    static DistributionSpec burr(double alpha, double beta);
    static DistributionSpec pareto(double gamma);
    static DistributionSpec exponential(double mean);

    /// Parses "frechet:1.0", "burr:0.5,1.0", "pareto:1", "exp:2".
    static DistributionSpec parse(const std::string& text);

    /// Inverse of parse(); numbers are printed in shortest round-trip form.
    std::string toString() const;
};

/// Throws ParameterError unless the parameter count matches the kind and all
/// parameters are finite and strictly positive.
void validate(const DistributionSpec& spec);

/// Extreme-value index of the distribution (the mean, for Exponential).
double trueGamma(const DistributionSpec& spec);

/// F^-1(u) for u in (0,1).
double quantile(const DistributionSpec& spec, double u);

/// F^-1(1 - v) for v in (0,1), evaluated without forming 1 - v. This is the
/// path used by the sampler so that upper-tail variates keep full precision.
double upperQuantile(const DistributionSpec& spec, double v);

/// Closed-form CDF; used by tests and goodness-of-fit checks.
double cdf(const DistributionSpec& spec, double x);

/// Identifies one independent variate stream.
struct SeedContract {
    std::uint64_t baseSeed = 0;
    std::uint64_t streamIndex = 0;
};

/// Uniform stream on the open interval (0,1) determined solely by a
/// SeedContract. Backed by xoshiro256** seeded through SplitMix64 from a mix
/// of (baseSeed, streamIndex).
class UniformStream {
public:
    explicit UniformStream(SeedContract seed);

    std::uint64_t nextBits();
    /// Never returns 0 or 1.
    double nextOpen();

private:
    std::uint64_t state_[4];
};

/// n i.i.d. draws by inverse-CDF. Requires n >= 1.
Sample sample(const DistributionSpec& spec, std::size_t n, SeedContract seed);

} // namespace tailel

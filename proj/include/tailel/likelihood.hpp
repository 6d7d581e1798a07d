#pragma once

#include "tailel/tailstats.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace tailel {

enum class AdjustmentKind {
    None,        ///< plain empirical likelihood, no pseudo-observation
    ChenLog,     ///< a_n = max(1, ln(k)/2)
    BartlettExp, ///< a_n = 19/12, half the Bartlett constant of an exponential
    FixedValue,  ///< a_n = user constant
};

struct AdjustmentPolicy {
    AdjustmentKind kind = AdjustmentKind::None;
    std::optional<double> fixed;

    static AdjustmentPolicy none() { return {}; }
    static AdjustmentPolicy chen() { return {AdjustmentKind::ChenLog, std::nullopt}; }
    static AdjustmentPolicy bartlett() { return {AdjustmentKind::BartlettExp, std::nullopt}; }
    static AdjustmentPolicy fixedValue(double a) { return {AdjustmentKind::FixedValue, a}; }

    bool adjusted() const { return kind != AdjustmentKind::None; }
};

/// Bartlett constant b = alpha4/(2 alpha2^2) - alpha3^2/(3 alpha2^3) from the
/// central moments of the underlying distribution.
double bartlettConstant(double alpha2, double alpha3, double alpha4);

/// r-th central moment of an exponential with the given mean:
/// r! mean^r sum_{j=0}^r (-1)^j / j!.
double exponentialCentralMoment(int r, double mean);

/// Numeric a_n for a sample fraction k. Throws ParameterError for a
/// non-positive or missing FixedValue, and for policy None.
double resolveAdjustment(const AdjustmentPolicy& policy, std::size_t k);

/// Outcome of evaluating an EL or AEL ratio statistic at one candidate gamma.
struct ElEvaluation {
    double statistic = 0.0; ///< -2 log R; +inf when undefined
    double lambda = 0.0;
    std::vector<double> weights; ///< k entries for EL, k+1 for AEL
    std::optional<double> pseudoPoint;
    bool defined = true;
    int iterations = 0;
};

/// y_i(gamma) = y_i - gamma.
std::vector<double> centered(const LogSpacings& spacings, double gamma);

/// -a_n (hillEstimate - gamma). Requires an adjusted policy.
double pseudoPoint(const LogSpacings& spacings, double gamma, const AdjustmentPolicy& policy);

/// Empirical likelihood for the constraint sum p_i z_i = 0 over arbitrary
/// working points z. Solves sum z_i / (1 + lambda z_i) = 0 for the
/// multiplier inside its feasibility bracket.
ElEvaluation meanZeroLikelihood(std::span<const double> z);

/// l_EL(gamma) when policy is None, otherwise l_AEL(gamma) with the
/// pseudo-observation appended. Requires gamma > 0, and k >= 2 for EL.
ElEvaluation elStatistic(const LogSpacings& spacings, double gamma, const AdjustmentPolicy& policy);

} // namespace tailel

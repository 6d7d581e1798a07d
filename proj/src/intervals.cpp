#include "tailel/intervals.hpp"

#include "tailel/error.hpp"
#include "tailel/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace tailel {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kStepFactor = 1.25;
constexpr int kMaxExpansion = 200;
constexpr double kAelUpperCap = 1e6;
constexpr double kEndpointRelTol = 1e-8;
constexpr double kResidualRelTol = 1e-6;

void requireLevel(double level) {
    if (!(level > 0.0 && level < 1.0)) throw DomainError("confidence level must lie in (0,1)");
}

MethodKind methodFor(const AdjustmentPolicy& policy) {
    switch (policy.kind) {
    case AdjustmentKind::None: return MethodKind::EL;
    case AdjustmentKind::ChenLog: return MethodKind::AEL_Chen;
    case AdjustmentKind::BartlettExp: return MethodKind::AEL_Bartlett;
    case AdjustmentKind::FixedValue: return MethodKind::AEL_Fixed;
    }
    return MethodKind::EL;
}

struct Endpoint {
    double value;
    bool degenerate;
};

// Walks from the Hill estimate toward `boundary` by factors of 1.25 until
// the statistic reaches the threshold, then refines the crossing.
// `boundaryEvaluable` is false when the boundary itself is outside the
// gamma domain (AEL toward 0), in which case it is never evaluated.
template <class Stat>
Endpoint locateEndpoint(Stat&& stat, double estimate, double threshold, double boundary,
                        bool boundaryEvaluable, bool upward) {
    auto excess = [&](double g) { return stat(g) - threshold; };
    double inside = estimate;
    double fInside = excess(estimate);
    if (fInside >= 0.0) return {estimate, false};

    for (int step = 0; step < kMaxExpansion; ++step) {
        double candidate = upward ? inside * kStepFactor : inside / kStepFactor;
        const bool pastBoundary = upward ? candidate >= boundary : candidate <= boundary;
        if (pastBoundary) {
            if (!boundaryEvaluable) return {boundary, true};
            candidate = boundary;
        }
        const double fCandidate = excess(candidate);
        if (fCandidate >= 0.0) {
            const double root = upward ? brentRoot(excess, inside, candidate, fInside, fCandidate,
                                                   kEndpointRelTol)
                                       : brentRoot(excess, candidate, inside, fCandidate, fInside,
                                                   kEndpointRelTol);
            const double residual = std::fabs(excess(root));
            if (std::isfinite(residual) && residual <= kResidualRelTol * threshold) {
                return {root, false};
            }
            // The statistic jumps past the threshold only at the boundary of
            // the region where it is defined.
            return {pastBoundary ? boundary : root, true};
        }
        if (pastBoundary) return {boundary, true};
        inside = candidate;
        fInside = fCandidate;
    }
    return {upward ? kInf : 0.0, true};
}

} // namespace

std::string_view methodName(MethodKind kind) {
    switch (kind) {
    case MethodKind::NormalSelfNorm: return "normal";
    case MethodKind::NormalConventional: return "normal-conv";
    case MethodKind::EL: return "el";
    case MethodKind::AEL_Chen: return "ael-chen";
    case MethodKind::AEL_Bartlett: return "ael-bartlett";
    case MethodKind::AEL_Fixed: return "ael-fixed";
    }
    return "?";
}

MethodKind parseMethod(std::string_view name) {
    for (MethodKind k : kAllMethods) {
        if (methodName(k) == name) return k;
    }
    if (name == methodName(MethodKind::AEL_Fixed)) return MethodKind::AEL_Fixed;
    throw ParameterError("unknown method '" + std::string(name) + "'");
}

std::vector<MethodKind> parseMethodList(std::string_view list) {
    if (list == "all") return {kAllMethods.begin(), kAllMethods.end()};
    std::vector<MethodKind> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        const auto comma = list.find(',', start);
        const auto end = comma == std::string_view::npos ? list.size() : comma;
        const MethodKind k = parseMethod(list.substr(start, end - start));
        if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

ConfidenceInterval normalInterval(const LogSpacings& spacings, double level, bool conventional) {
    requireLevel(level);
    if (spacings.k < 1) throw RangeError("normal interval needs k >= 1");
    const double g = spacings.hillEstimate;
    const double z = normalUpperQuantile(0.5 * (1.0 - level));
    const double ratio = z / std::sqrt(static_cast<double>(spacings.k));

    ConfidenceInterval ci;
    ci.method = {conventional ? MethodKind::NormalConventional : MethodKind::NormalSelfNorm, level};
    ci.pointEstimate = g;
    if (conventional) {
        ci.lower = g - ratio * g;
        ci.upper = g + ratio * g;
        if (ci.lower < 0.0) {
            ci.lower = 0.0;
            ci.degenerate = true;
        }
    } else {
        ci.lower = g / (1.0 + ratio);
        if (ratio < 1.0) {
            ci.upper = g / (1.0 - ratio);
        } else {
            ci.upper = kInf;
            ci.degenerate = true;
        }
    }
    if (!(g > 0.0)) ci.degenerate = true;
    ci.length = ci.upper - ci.lower;
    return ci;
}

ConfidenceInterval elInterval(const LogSpacings& spacings, double level,
                              const AdjustmentPolicy& policy) {
    requireLevel(level);
    if (spacings.k < 2) throw RangeError("EL intervals need k >= 2");
    const double g = spacings.hillEstimate;

    ConfidenceInterval ci;
    ci.method = {methodFor(policy), level, policy.fixed.value_or(0.0)};
    ci.pointEstimate = g;

    const auto [minIt, maxIt] = std::minmax_element(spacings.y.begin(), spacings.y.end());
    if (*minIt == *maxIt) {
        ci.lower = ci.upper = g;
        ci.degenerate = true;
        return ci;
    }

    const double threshold = chiSq1Quantile(level);
    auto stat = [&](double gamma) { return elStatistic(spacings, gamma, policy).statistic; };

    Endpoint lo, hi;
    if (policy.adjusted()) {
        lo = locateEndpoint(stat, g, threshold, 0.0, false, false);
        hi = locateEndpoint(stat, g, threshold, g * kAelUpperCap, true, true);
        if (hi.degenerate && hi.value == g * kAelUpperCap) hi.value = kInf;
    } else {
        lo = locateEndpoint(stat, g, threshold, *minIt, true, false);
        hi = locateEndpoint(stat, g, threshold, *maxIt, true, true);
    }
    ci.lower = lo.value;
    ci.upper = hi.value;
    ci.degenerate = lo.degenerate || hi.degenerate;
    ci.length = ci.upper - ci.lower;
    return ci;
}

ConfidenceInterval interval(const LogSpacings& spacings, MethodSpec method) {
    switch (method.kind) {
    case MethodKind::NormalSelfNorm: return normalInterval(spacings, method.level, false);
    case MethodKind::NormalConventional: return normalInterval(spacings, method.level, true);
    case MethodKind::EL: return elInterval(spacings, method.level, AdjustmentPolicy::none());
    case MethodKind::AEL_Chen: return elInterval(spacings, method.level, AdjustmentPolicy::chen());
    case MethodKind::AEL_Bartlett:
        return elInterval(spacings, method.level, AdjustmentPolicy::bartlett());
    case MethodKind::AEL_Fixed:
        return elInterval(spacings, method.level,
                          AdjustmentPolicy::fixedValue(method.fixedAdjustment));
    }
    throw ParameterError("unknown method");
}

std::vector<ConfidenceInterval> allIntervals(const LogSpacings& spacings, double level) {
    std::vector<ConfidenceInterval> out;
    out.reserve(kAllMethods.size());
    for (MethodKind k : kAllMethods) out.push_back(interval(spacings, {k, level}));
    return out;
}

} // namespace tailel

#pragma once

#include "tailel/likelihood.hpp"
#include "tailel/quantiles.hpp"
#include "tailel/tailstats.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace tailel {

enum class MethodKind {
    NormalSelfNorm,     ///< (g/(1+z/sqrt k), g/(1-z/sqrt k))
    NormalConventional, ///< g -/+ z g/sqrt k
    EL,
    AEL_Chen,
    AEL_Bartlett,
    AEL_Fixed, ///< AEL with a user-supplied a_n; not part of kAllMethods
};

inline constexpr std::array<MethodKind, 5> kAllMethods = {
    MethodKind::NormalSelfNorm, MethodKind::NormalConventional, MethodKind::EL,
    MethodKind::AEL_Chen, MethodKind::AEL_Bartlett};

/// CLI / CSV name: normal, normal-conv, el, ael-chen, ael-bartlett, ael-fixed.
std::string_view methodName(MethodKind kind);
/// Throws ParameterError on an unknown name.
MethodKind parseMethod(std::string_view name);
/// Comma-separated list; "all" expands to every method in enum order.
std::vector<MethodKind> parseMethodList(std::string_view list);

struct MethodSpec {
    MethodKind kind = MethodKind::NormalSelfNorm;
    double level = 0.95;
    double fixedAdjustment = 0.0; ///< a_n, used by AEL_Fixed only
};

struct ConfidenceInterval {
    MethodSpec method;
    double lower = 0.0;
    double upper = 0.0;
    double length = 0.0;
    bool degenerate = false;
    double pointEstimate = 0.0;

    bool contains(double gamma) const { return lower <= gamma && gamma <= upper; }
};

/// Equal-tailed normal interval at the given level. Self-normalized when
/// conventional is false; degenerate (upper = +inf) when k <= z^2. The
/// conventional form floors the lower limit at 0 and flags it degenerate.
ConfidenceInterval normalInterval(const LogSpacings& spacings, double level, bool conventional);

/// Connected component around the Hill estimate of {gamma : l(gamma) < chi2_1(level)},
/// l being l_EL (policy None) or l_AEL. Requires k >= 2.
ConfidenceInterval elInterval(const LogSpacings& spacings, double level,
                              const AdjustmentPolicy& policy);

/// Dispatch on one method.
ConfidenceInterval interval(const LogSpacings& spacings, MethodSpec method);

/// All five methods, in enum order.
std::vector<ConfidenceInterval> allIntervals(const LogSpacings& spacings, double level);

} // namespace tailel

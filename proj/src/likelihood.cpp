#include "tailel/likelihood.hpp"

#include "tailel/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tailel {

double bartlettConstant(double alpha2, double alpha3, double alpha4) {
    return alpha4 / (2.0 * alpha2 * alpha2) - alpha3 * alpha3 / (3.0 * alpha2 * alpha2 * alpha2);
}

double exponentialCentralMoment(int r, double mean) {
    if (r < 0) throw ParameterError("moment order must be >= 0");
    double factorial = 1.0;
    double power = 1.0;
    for (int i = 1; i <= r; ++i) {
        factorial *= i;
        power *= mean;
    }
    // sum_{j=0}^r (-1)^j / j!
    double series = 0.0;
    double term = 1.0;
    for (int j = 0; j <= r; ++j) {
        if (j > 0) term /= -static_cast<double>(j);
        series += term;
    }
    return factorial * power * series;
}

double resolveAdjustment(const AdjustmentPolicy& policy, std::size_t k) {
    if (k < 1) throw RangeError("k must be >= 1");
    switch (policy.kind) {
    case AdjustmentKind::None:
        throw ParameterError("plain EL has no adjustment factor");
    case AdjustmentKind::ChenLog:
        return std::max(1.0, 0.5 * std::log(static_cast<double>(k)));
    case AdjustmentKind::BartlettExp:
        return 19.0 / 12.0;
    case AdjustmentKind::FixedValue:
        if (!policy.fixed || !(std::isfinite(*policy.fixed) && *policy.fixed > 0.0)) {
            throw ParameterError("fixed adjustment factor must be finite and > 0");
        }
        return *policy.fixed;
    }
    return 0.0;
}

std::vector<double> centered(const LogSpacings& spacings, double gamma) {
    std::vector<double> z(spacings.y.size());
    std::transform(spacings.y.begin(), spacings.y.end(), z.begin(),
                   [gamma](double y) { return y - gamma; });
    return z;
}

double pseudoPoint(const LogSpacings& spacings, double gamma, const AdjustmentPolicy& policy) {
    const double a = resolveAdjustment(policy, spacings.k);
    return -a * (spacings.hillEstimate - gamma);
}

namespace {

constexpr int kMaxIterations = 200;
constexpr double kBracketMargin = 1e-12;
constexpr double kResidualTol = 1e-14;

struct Objective {
    double value;
    double slope;
    double scale; ///< sum of |z_i / (1 + lambda z_i)|
};

Objective evaluate(std::span<const double> z, double lambda) {
    double g = 0.0;
    double dg = 0.0;
    double scale = 0.0;
    for (double zi : z) {
        const double t = zi / (1.0 + lambda * zi);
        g += t;
        dg -= t * t;
        scale += std::fabs(t);
    }
    return {g, dg, scale};
}

} // namespace

ElEvaluation meanZeroLikelihood(std::span<const double> z) {
    ElEvaluation out;
    const std::size_t m = z.size();
    if (m == 0) throw RangeError("empirical likelihood needs at least one point");
    const auto [minIt, maxIt] = std::minmax_element(z.begin(), z.end());
    const double zMin = *minIt;
    const double zMax = *maxIt;
    const double invM = 1.0 / static_cast<double>(m);

    if (zMin == 0.0 && zMax == 0.0) {
        out.weights.assign(m, invM);
        return out;
    }
    if (!(zMin < 0.0 && zMax > 0.0)) {
        out.defined = false;
        out.statistic = std::numeric_limits<double>::infinity();
        return out;
    }

    // Every weight 1/(m(1 + lambda z_i)) must stay <= 1.
    const double lower = (invM - 1.0) / zMax;
    const double upper = (invM - 1.0) / zMin;
    const double margin = kBracketMargin * (upper - lower);
    double lo = lower + margin;
    double hi = upper - margin;

    // g is strictly decreasing: g(lo) > 0 > g(hi). Newton from 0 with a
    // bisection fallback whenever the step leaves the current bracket.
    // Near the feasibility edge 1 + lambda z_i is small and the weights
    // amplify any error in lambda, so convergence is judged on the residual
    // (relative to the size of its terms) as well as on the step length.
    double lambda = std::clamp(0.0, lo, hi);
    Objective f = evaluate(z, lambda);
    int it = 0;
    for (; it < kMaxIterations; ++it) {
        if (std::fabs(f.value) <= kResidualTol * f.scale) break;
        if (f.value > 0.0) {
            lo = lambda;
        } else {
            hi = lambda;
        }
        double next = lambda - f.value / f.slope;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const double step = std::fabs(next - lambda);
        lambda = next;
        f = evaluate(z, lambda);
        if (step <= 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(lambda)) break;
    }
    out.iterations = it + 1;
    out.lambda = lambda;
    out.weights.resize(m);
    double stat = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double t = lambda * z[i];
        stat += std::log1p(t);
        out.weights[i] = invM / (1.0 + t);
    }
    out.statistic = std::max(0.0, 2.0 * stat);
    return out;
}

ElEvaluation elStatistic(const LogSpacings& spacings, double gamma, const AdjustmentPolicy& policy) {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) throw DomainError("gamma must be finite and > 0");
    if (!policy.adjusted() && spacings.k < 2) throw RangeError("EL needs k >= 2");
    if (spacings.k < 1) throw RangeError("AEL needs k >= 1");

    std::vector<double> z = centered(spacings, gamma);
    std::optional<double> pseudo;
    if (policy.adjusted()) {
        pseudo = pseudoPoint(spacings, gamma, policy);
        z.push_back(*pseudo);
    }
    ElEvaluation out = meanZeroLikelihood(z);
    out.pseudoPoint = pseudo;
    return out;
}

} // namespace tailel

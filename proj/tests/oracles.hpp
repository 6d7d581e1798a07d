#pragma once

// Test-only reference computations. Nothing here may call into the code path
// it is used to check.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

namespace oracle {

/// Plain bisection to an absolute tolerance.
inline long double bisect(const std::function<long double(long double)>& f, long double lo,
                          long double hi, long double tol) {
    long double flo = f(lo);
    for (int i = 0; i < 500 && hi - lo > tol; ++i) {
        const long double mid = 0.5L * (lo + hi);
        const long double fm = f(mid);
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5L * (lo + hi);
}

struct ElResult {
    long double lambda;
    long double statistic;
};

/// Mean-zero EL of points z by extended-precision bisection on the
/// multiplier equation.
inline ElResult elByBisection(const std::vector<double>& z, long double tol = 1e-14L) {
    const long double m = static_cast<long double>(z.size());
    const long double zmin = *std::min_element(z.begin(), z.end());
    const long double zmax = *std::max_element(z.begin(), z.end());
    const long double lo = (1.0L / m - 1.0L) / zmax;
    const long double hi = (1.0L / m - 1.0L) / zmin;
    auto g = [&](long double lam) {
        long double s = 0;
        for (double zi : z) s += zi / (1.0L + lam * zi);
        return s;
    };
    const long double lam = bisect(g, lo, hi, tol);
    long double stat = 0;
    for (double zi : z) stat += std::log1p(lam * static_cast<long double>(zi));
    return {lam, 2.0L * stat};
}

/// Standard normal CDF.
inline double normalCdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

/// Normal quantile by bisection on the erfc-based CDF.
inline double normalQuantile(double p) {
    return static_cast<double>(
        bisect([p](long double x) { return normalCdf(static_cast<double>(x)) - p; }, -40, 40,
               1e-15L));
}

/// Chi-square(1) CDF.
inline double chiSq1Cdf(double x) { return x <= 0 ? 0.0 : std::erf(std::sqrt(0.5 * x)); }

/// Kolmogorov-Smirnov distance between the empirical CDF of xs and cdf.
inline double ksDistance(std::vector<double> xs, const std::function<double(double)>& cdf) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        d = std::max({d, (i + 1) / n - f, f - i / n});
    }
    return d;
}

/// Asymptotic 1% critical value of the one-sample KS statistic.
inline double ksCritical1pct(std::size_t n) { return 1.6276 / std::sqrt(static_cast<double>(n)); }

inline double correlation(const std::vector<double>& a, const std::vector<double>& b) {
    const double n = static_cast<double>(a.size());
    const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
    const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
    double sab = 0, saa = 0, sbb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    return sab / std::sqrt(saa * sbb);
}

} // namespace oracle

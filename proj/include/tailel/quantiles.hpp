#pragma once

namespace tailel {

/// Standard normal quantile Phi^-1(p), p in (0,1). Wichura's AS241
/// (PPND16), relative accuracy about 1e-16.
double normalQuantile(double p);

/// Upper-tail normal quantile: Phi^-1(1 - q), accurate for tiny q.
double normalUpperQuantile(double q);

/// Quantile of the chi-square distribution with one degree of freedom.
/// Computed as the square of the two-sided normal critical value, so
/// chiSq1Quantile(1 - a) == normalUpperQuantile(a / 2)^2.
double chiSq1Quantile(double p);

} // namespace tailel

#include "tailel/montecarlo.hpp"

#include "tailel/error.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace tailel {

SimulationPlan SimulationPlan::studyDefaults(DistributionSpec dist) {
    SimulationPlan plan;
    plan.dist = std::move(dist);
    return plan;
}

SimulationPlan SimulationPlan::deskScale(DistributionSpec dist) {
    SimulationPlan plan = studyDefaults(std::move(dist));
    plan.reps = 2000;
    return plan;
}

namespace {

bool needsTwoSpacings(MethodKind m) {
    return m != MethodKind::NormalSelfNorm && m != MethodKind::NormalConventional;
}

// Replications are grouped in fixed blocks; per-block partial sums are
// combined in block order so floating-point results are independent of
// how blocks were scheduled across workers.
constexpr std::size_t kBlockSize = 32;

struct Cell {
    std::size_t covered = 0;
    std::size_t finite = 0;
    std::size_t degenerate = 0;
    std::size_t failures = 0;
    double lengthSum = 0.0;
};

unsigned workerCount(RunOptions options, std::size_t blocks) {
    unsigned t = options.threads ? options.threads : std::thread::hardware_concurrency();
    if (t == 0) t = 1;
    return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(blocks, 1)));
}

template <class Body>
void forEachBlock(std::size_t blocks, unsigned threads, Body&& body) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t b = next.fetch_add(1); b < blocks; b = next.fetch_add(1)) body(b);
    };
    if (threads <= 1) {
        worker();
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
}

} // namespace

void validatePlan(const SimulationPlan& plan) {
    validate(plan.dist);
    if (plan.n < 2) throw ParameterError("n must be >= 2");
    if (plan.reps < 1) throw ParameterError("reps must be >= 1");
    if (!(plan.level > 0.0 && plan.level < 1.0)) throw DomainError("level must lie in (0,1)");
    if (plan.methods.empty()) throw ParameterError("at least one method is required");
    validateGrid(plan.kGrid, plan.n);
    const bool elFamily = std::any_of(plan.methods.begin(), plan.methods.end(), needsTwoSpacings);
    if (elFamily && plan.kGrid.kMin < 2) {
        throw RangeError("empirical likelihood methods need k >= 2");
    }
}

const CoverageRow& CoverageReport::row(std::size_t k, MethodKind method) const {
    for (const auto& r : rows) {
        if (r.k == k && r.method == method) return r;
    }
    throw std::out_of_range("no coverage row for k = " + std::to_string(k) + ", method " +
                            std::string(methodName(method)));
}

CoverageReport runPlan(const SimulationPlan& plan, RunOptions options) {
    validatePlan(plan);
    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::size_t> ks = plan.kGrid.values();
    const std::size_t nk = ks.size();
    const std::size_t nm = plan.methods.size();
    const double gamma0 = trueGamma(plan.dist);
    const std::size_t blocks = (plan.reps + kBlockSize - 1) / kBlockSize;

    std::vector<std::vector<Cell>> partial(blocks, std::vector<Cell>(nk * nm));
    forEachBlock(blocks, workerCount(options, blocks), [&](std::size_t b) {
        auto& cells = partial[b];
        const std::size_t end = std::min(plan.reps, (b + 1) * kBlockSize);
        for (std::size_t r = b * kBlockSize; r < end; ++r) {
            const Sample s = sample(plan.dist, plan.n, {plan.baseSeed, r});
            for (std::size_t ik = 0; ik < nk; ++ik) {
                const LogSpacings sp = logSpacings(s, ks[ik]);
                for (std::size_t im = 0; im < nm; ++im) {
                    Cell& cell = cells[ik * nm + im];
                    try {
                        const ConfidenceInterval ci = interval(sp, {plan.methods[im], plan.level});
                        if (ci.degenerate || !std::isfinite(ci.length)) {
                            ++cell.degenerate;
                            continue;
                        }
                        if (ci.contains(gamma0)) ++cell.covered;
                        ++cell.finite;
                        cell.lengthSum += ci.length;
                    } catch (const std::exception&) {
                        ++cell.failures;
                        ++cell.degenerate;
                    }
                }
            }
        }
    });

    CoverageReport report;
    report.plan = plan;
    report.trueGamma = gamma0;
    report.rows.reserve(nk * nm);
    const double reps = static_cast<double>(plan.reps);
    for (std::size_t ik = 0; ik < nk; ++ik) {
        for (std::size_t im = 0; im < nm; ++im) {
            Cell total;
            for (const auto& cells : partial) {
                const Cell& c = cells[ik * nm + im];
                total.covered += c.covered;
                total.finite += c.finite;
                total.degenerate += c.degenerate;
                total.failures += c.failures;
                total.lengthSum += c.lengthSum;
            }
            CoverageRow row;
            row.k = ks[ik];
            row.method = plan.methods[im];
            row.coverage = static_cast<double>(total.covered) / reps;
            row.mcStdErr = std::sqrt(row.coverage * (1.0 - row.coverage) / reps);
            row.avgLength = total.finite ? total.lengthSum / static_cast<double>(total.finite)
                                         : std::numeric_limits<double>::quiet_NaN();
            row.degenerateCount = total.degenerate;
            row.failureCount = total.failures;
            report.rows.push_back(row);
        }
    }
    report.wallTimeSeconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<double> nullStatistics(const DistributionSpec& dist, std::size_t n, std::size_t reps,
                                   std::size_t k, const AdjustmentPolicy& policy,
                                   std::uint64_t baseSeed, RunOptions options) {
    validate(dist);
    if (k < 1 || k + 1 > n) throw RangeError("k must lie in [1, n-1]");
    const double gamma0 = trueGamma(dist);
    std::vector<double> out(reps);
    const std::size_t blocks = (reps + kBlockSize - 1) / kBlockSize;
    forEachBlock(blocks, workerCount(options, blocks), [&](std::size_t b) {
        const std::size_t end = std::min(reps, (b + 1) * kBlockSize);
        for (std::size_t r = b * kBlockSize; r < end; ++r) {
            const LogSpacings sp = logSpacings(sample(dist, n, {baseSeed, r}), k);
            out[r] = elStatistic(sp, gamma0, policy).statistic;
        }
    });
    return out;
}

ComparisonTable compareMethods(const CoverageReport& report) {
    const auto& methods = report.plan.methods;
    if (methods.size() < 2) throw ParameterError("needs >=2 methods");
    ComparisonTable table;
    table.level = report.plan.level;
    for (std::size_t k : report.plan.kGrid.values()) {
        ComparisonRow row;
        row.k = k;
        double best = std::numeric_limits<double>::infinity();
        for (MethodKind m : methods) {
            const double delta = report.row(k, m).coverage - table.level;
            row.deltas.push_back({m, delta});
            if (std::fabs(delta) < best) {
                best = std::fabs(delta);
                row.closest = m;
            }
        }
        for (std::size_t i = 0; i < methods.size(); ++i) {
            for (std::size_t j = i + 1; j < methods.size(); ++j) {
                const double a = report.row(k, methods[i]).avgLength;
                const double b = report.row(k, methods[j]).avgLength;
                row.lengthRatios.push_back({methods[i], methods[j], a / b});
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace tailel

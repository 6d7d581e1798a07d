#pragma once

#include "tailel/intervals.hpp"
#include "tailel/montecarlo.hpp"
#include "tailel/tailstats.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tailel::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitRuntime = 1,
    kExitUsage = 2,
    kExitInput = 3,       ///< unreadable or malformed input file
    kExitDegenerate = 4,  ///< results written, some intervals flagged degenerate
    kExitEmpty = 5,       ///< no usable observations after filtering
    kExitRange = 6,       ///< k or k-grid outside [1, n-1]
};

struct EstimateArgs {
    std::string input;
    std::size_t k = 0;
};

struct CiArgs {
    std::string input;
    std::size_t k = 0;
    double level = 0.95;
    std::vector<MethodKind> methods{kAllMethods.begin(), kAllMethods.end()};
    std::optional<double> fixedAdjustment;
};

struct HillplotArgs {
    std::string input;
    KGrid grid{10, 200, 1};
    double level = 0.95;
    std::vector<MethodKind> methods{MethodKind::NormalSelfNorm, MethodKind::AEL_Bartlett};
    std::optional<double> fixedAdjustment;
};

enum class Format { Csv, Json };

struct SimulateArgs {
    SimulationPlan plan;
    Format format = Format::Csv;
    unsigned threads = 0;
};

/// Parses "MIN:MAX:STEP" (STEP optional, default 1). Throws ParameterError.
KGrid parseGrid(const std::string& text);

// Each command writes its report to `out`, diagnostics to `err`, and maps
// failures onto ExitCode values instead of throwing.
int runEstimate(const EstimateArgs& args, std::ostream& out, std::ostream& err);
int runCi(const CiArgs& args, std::ostream& out, std::ostream& err);
int runHillplot(const HillplotArgs& args, std::ostream& out, std::ostream& err);
int runSimulate(const SimulateArgs& args, std::ostream& out, std::ostream& err);

} // namespace tailel::cli

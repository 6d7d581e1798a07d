#include "tailel/commands.hpp"

#include "tailel/error.hpp"
#include "tailel/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>

namespace tailel::cli {

namespace {

using nlohmann::ordered_json;

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const DataError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const EmptySampleError& e) {
        err << "empty sample: " << e.what() << '\n';
        return kExitEmpty;
    } catch (const RangeError& e) {
        err << "range error: " << e.what() << '\n';
        return kExitRange;
    } catch (const ParameterError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

Sample loadSample(const std::string& path, std::ostream& err) {
    const DatasetFile file = loadDataset(path);
    if (file.rejectedCount > 0) {
        err << "note: " << file.rejectedCount << " non-positive or non-numeric entries rejected\n";
    }
    Sample s = makeSample(file.values);
    s.rejected = file.rejectedCount;
    return s;
}

ordered_json finiteOrNull(double v) {
    return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr);
}

std::vector<MethodSpec> resolveMethods(const std::vector<MethodKind>& kinds, double level,
                                       const std::optional<double>& fixedA) {
    if (!(level > 0.0 && level < 1.0)) throw ParameterError("--level must lie in (0,1)");
    if (kinds.empty()) throw ParameterError("no methods requested");
    std::vector<MethodSpec> specs;
    for (MethodKind k : kinds) {
        MethodSpec m{k, level};
        if (k == MethodKind::AEL_Fixed) {
            if (!fixedA || !(*fixedA > 0.0) || !std::isfinite(*fixedA)) {
                throw ParameterError("ael-fixed needs --fixed-a > 0");
            }
            m.fixedAdjustment = *fixedA;
        }
        specs.push_back(m);
    }
    return specs;
}

void requireElK(const std::vector<MethodSpec>& specs, std::size_t k) {
    for (const auto& m : specs) {
        if (m.kind != MethodKind::NormalSelfNorm && m.kind != MethodKind::NormalConventional &&
            k < 2) {
            throw RangeError("empirical likelihood methods need k >= 2");
        }
    }
}

ordered_json intervalJson(const ConfidenceInterval& ci) {
    ordered_json j;
    j["method"] = std::string(methodName(ci.method.kind));
    j["level"] = ci.method.level;
    if (ci.method.kind == MethodKind::AEL_Fixed) j["adjustment"] = ci.method.fixedAdjustment;
    j["lower"] = finiteOrNull(ci.lower);
    j["upper"] = finiteOrNull(ci.upper);
    j["length"] = finiteOrNull(ci.length);
    j["degenerate"] = ci.degenerate;
    j["point_estimate"] = ci.pointEstimate;
    return j;
}

} // namespace

KGrid parseGrid(const std::string& text) {
    std::vector<std::size_t> parts;
    std::size_t start = 0;
    while (true) {
        const auto colon = text.find(':', start);
        const std::string tok = text.substr(start, colon == std::string::npos ? std::string::npos
                                                                              : colon - start);
        const auto v = parseReal(tok);
        if (!v || *v < 0 || std::floor(*v) != *v) {
            throw ParameterError("bad k-grid '" + text + "', expected MIN:MAX[:STEP]");
        }
        parts.push_back(static_cast<std::size_t>(*v));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    if (parts.size() == 1) return {parts[0], parts[0], 1};
    if (parts.size() == 2) return {parts[0], parts[1], 1};
    if (parts.size() == 3) {
        if (parts[2] == 0) throw ParameterError("k-grid step must be >= 1");
        return {parts[0], parts[1], parts[2]};
    }
    throw ParameterError("bad k-grid '" + text + "', expected MIN:MAX[:STEP]");
}

int runEstimate(const EstimateArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Sample s = loadSample(args.input, err);
        const LogSpacings sp = logSpacings(s, args.k);
        const auto [lo, hi] = std::minmax_element(sp.y.begin(), sp.y.end());
        ordered_json j;
        j["input"] = args.input;
        j["n"] = s.n();
        j["rejected"] = s.rejected;
        j["k"] = sp.k;
        j["hill"] = hill(s, args.k);
        j["y"] = {{"mean", sp.hillEstimate}, {"min", *lo}, {"max", *hi}};
        out << j.dump(2) << '\n';
        return static_cast<int>(kExitOk);
    });
}

int runCi(const CiArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto specs = resolveMethods(args.methods, args.level, args.fixedAdjustment);
        const Sample s = loadSample(args.input, err);
        const LogSpacings sp = logSpacings(s, args.k);
        requireElK(specs, sp.k);
        ordered_json arr = ordered_json::array();
        bool degenerate = false;
        for (const auto& m : specs) {
            const ConfidenceInterval ci = interval(sp, m);
            degenerate = degenerate || ci.degenerate;
            arr.push_back(intervalJson(ci));
        }
        out << arr.dump(2) << '\n';
        return static_cast<int>(degenerate ? kExitDegenerate : kExitOk);
    });
}

int runHillplot(const HillplotArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto specs = resolveMethods(args.methods, args.level, args.fixedAdjustment);
        const Sample s = loadSample(args.input, err);
        validateGrid(args.grid, s.n());
        requireElK(specs, args.grid.kMin);
        out << "k,hill";
        for (const auto& m : specs) {
            out << ',' << methodName(m.kind) << "_lower," << methodName(m.kind) << "_upper";
        }
        out << '\n';
        bool degenerate = false;
        for (std::size_t k : args.grid.values()) {
            const LogSpacings sp = logSpacings(s, k);
            out << k << ',' << formatFixed6(sp.hillEstimate);
            for (const auto& m : specs) {
                const ConfidenceInterval ci = interval(sp, m);
                degenerate = degenerate || ci.degenerate;
                out << ',' << formatFixed6(ci.lower) << ',' << formatFixed6(ci.upper);
            }
            out << '\n';
        }
        return static_cast<int>(degenerate ? kExitDegenerate : kExitOk);
    });
}

int runSimulate(const SimulateArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const CoverageReport report = runPlan(args.plan, {args.threads});
        out << (args.format == Format::Json ? coverageJson(report) : coverageCsv(report));
        err << "simulated " << args.plan.reps << " replications in " << report.wallTimeSeconds
            << " s\n";
        return static_cast<int>(kExitOk);
    });
}

} // namespace tailel::cli

// tailel: tail-index estimation and confidence intervals from the command line.

#include "tailel/commands.hpp"
#include "tailel/distributions.hpp"
#include "tailel/error.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace tailel;
using namespace tailel::cli;

struct Options {
    std::string input;
    std::size_t k = 0;
    std::string kGrid;
    double level = 0.95;
    std::string methods;
    std::optional<double> fixedA;
    std::string dist = "frechet:1.0";
    std::size_t n = 1000;
    std::size_t reps = 2000;
    std::uint64_t seed = 20240601;
    unsigned threads = 0;
    std::string out;
    std::string format = "csv";
};

int emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream f(opt.out, std::ios::binary);
    f << text;
    if (!f) {
        std::cerr << "cannot write '" << opt.out << "'\n";
        return kExitRuntime;
    }
    return kExitOk;
}

// Runs a command into a buffer so --out receives a complete file or nothing.
template <class Fn>
int runBuffered(const Options& opt, Fn&& fn) {
    std::ostringstream buf;
    const int code = fn(buf);
    if (code == kExitOk || code == kExitDegenerate) {
        const int w = emit(opt, buf.str());
        if (w != kExitOk) return w;
    }
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tail-index inference: Hill estimator, normal, EL and adjusted EL intervals"};
    app.require_subcommand(1);
    Options opt;

    auto addOut = [&](CLI::App* sub) {
        sub->add_option("--out", opt.out, "Write output to this path instead of stdout");
    };
    auto addMethods = [&](CLI::App* sub, const std::string& def) {
        sub->add_option("--methods", opt.methods,
                        "Comma list of normal,normal-conv,el,ael-chen,ael-bartlett,ael-fixed "
                        "or 'all' (default: " + def + ")");
        sub->add_option("--fixed-a", opt.fixedA, "Adjustment factor a_n for ael-fixed");
        sub->add_option("--level", opt.level, "Confidence level in (0,1)")->capture_default_str();
    };

    auto* estimate = app.add_subcommand("estimate", "Hill estimate and log-spacing summary (JSON)");
    estimate->add_option("--input", opt.input, "Single-column CSV of observations")->required();
    estimate->add_option("--k", opt.k, "Number of upper order statistics")->required();
    addOut(estimate);

    auto* ci = app.add_subcommand("ci", "Confidence intervals for gamma (JSON)");
    ci->add_option("--input", opt.input, "Single-column CSV of observations")->required();
    ci->add_option("--k", opt.k, "Number of upper order statistics")->required();
    addMethods(ci, "all");
    addOut(ci);

    auto* hillplot = app.add_subcommand("hillplot", "Hill estimates and CI limits over k (CSV)");
    hillplot->add_option("--input", opt.input, "Single-column CSV of observations")->required();
    hillplot->add_option("--k-grid", opt.kGrid, "MIN:MAX[:STEP]")->required();
    addMethods(hillplot, "normal,ael-bartlett");
    addOut(hillplot);

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo coverage study (CSV or JSON)");
    simulate->add_option("--dist", opt.dist, "frechet:A | burr:A,B | pareto:G | exp:M")
        ->capture_default_str();
    simulate->add_option("--n", opt.n, "Sample size")->capture_default_str();
    simulate->add_option("--reps", opt.reps, "Replications")->capture_default_str();
    simulate->add_option("--k,--k-grid", opt.kGrid, "MIN:MAX[:STEP] (default 10:200:5)");
    simulate->add_option("--seed", opt.seed, "Base seed")->capture_default_str();
    simulate->add_option("--threads", opt.threads, "Worker threads (0 = all cores)")
        ->capture_default_str();
    simulate->add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    addMethods(simulate, "all");
    addOut(simulate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*estimate) {
            return runBuffered(opt, [&](std::ostream& out) {
                return runEstimate({opt.input, opt.k}, out, std::cerr);
            });
        }
        if (opt.methods.empty()) opt.methods = *hillplot ? "normal,ael-bartlett" : "all";
        const std::vector<MethodKind> methods = parseMethodList(opt.methods);
        if (*ci) {
            CiArgs args{opt.input, opt.k, opt.level, methods, opt.fixedA};
            return runBuffered(opt, [&](std::ostream& out) { return runCi(args, out, std::cerr); });
        }
        if (*hillplot) {
            HillplotArgs args{opt.input, parseGrid(opt.kGrid), opt.level, methods, opt.fixedA};
            return runBuffered(opt,
                               [&](std::ostream& out) { return runHillplot(args, out, std::cerr); });
        }
        if (*simulate) {
            SimulateArgs args;
            args.plan = SimulationPlan::deskScale(DistributionSpec::parse(opt.dist));
            args.plan.n = opt.n;
            args.plan.reps = opt.reps;
            if (!opt.kGrid.empty()) args.plan.kGrid = parseGrid(opt.kGrid);
            args.plan.level = opt.level;
            args.plan.methods = methods;
            args.plan.baseSeed = opt.seed;
            if (std::find(methods.begin(), methods.end(), MethodKind::AEL_Fixed) != methods.end()) {
                throw ParameterError("ael-fixed is not supported by simulate");
            }
            validatePlan(args.plan);
            args.format = opt.format == "json" ? Format::Json : Format::Csv;
            args.threads = opt.threads;
            return runBuffered(opt,
                               [&](std::ostream& out) { return runSimulate(args, out, std::cerr); });
        }
    } catch (const ParameterError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const RangeError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

#include "tailel/commands.hpp"
#include "tailel/io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tailel;
using namespace tailel::cli;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kFixture = TAILEL_FIXTURE_DIR "/pareto_fixture.csv";

fs::path scratchDir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("tailel_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string writeFile(const std::string& name, const std::string& text) {
    const fs::path p = scratchDir() / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct Run {
    int code;
    std::string out;
};

// Runs the installed binary; stdout goes to a scratch file.
Run binary(const std::string& args) {
    static int counter = 0;
    const std::string out = (scratchDir() / ("stdout_" + std::to_string(counter++))).string();
    const std::string cmd =
        "\"" TAILEL_CLI_PATH "\" " + args + " > \"" + out + "\" 2> /dev/null";
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), readFile(out)};
}

std::string expLadder() {
    std::ostringstream s;
    s.precision(17);
    for (int i = 1; i <= 4; ++i) s << std::exp(static_cast<double>(i)) << '\n';
    return s.str();
}

} // namespace

TEST_CASE("estimate on an exact exponential ladder") {
    const std::string path = writeFile("ladder.csv", expLadder());
    std::ostringstream out, err;
    REQUIRE(runEstimate({path, 2}, out, err) == kExitOk);
    const json j = json::parse(out.str());
    CHECK(j["n"] == 4);
    CHECK(j["k"] == 2);
    CHECK(j["hill"].get<double>() == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(j["y"]["mean"].get<double>() == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(j["y"]["min"].get<double>() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(j["y"]["max"].get<double>() == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("estimate skips a header and reports rejected entries") {
    const std::string path = writeFile("header.csv", "loss\n" + expLadder() + "-1\n");
    std::ostringstream out, err;
    REQUIRE(runEstimate({path, 2}, out, err) == kExitOk);
    const json j = json::parse(out.str());
    CHECK(j["n"] == 4);
    CHECK(j["rejected"] == 1);
    CHECK(j["hill"].get<double>() == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(err.str().find("rejected") != std::string::npos);
}

TEST_CASE("command exit codes") {
    std::ostringstream out, err;
    const std::string three = writeFile("three.csv", "1\n2\n3\n");
    CHECK(runEstimate({three, 5}, out, err) == kExitRange);
    CHECK(runEstimate({three, 0}, out, err) == kExitRange);
    CHECK(runEstimate({(scratchDir() / "missing.csv").string(), 2}, out, err) == kExitInput);
    const std::string bad = writeFile("bad.csv", "loss\n-1\n0\nfoo\n");
    CHECK(runEstimate({bad, 1}, out, err) == kExitEmpty);

    CiArgs ci{kFixture, 50};
    ci.level = 1.5;
    CHECK(runCi(ci, out, err) == kExitUsage);
    ci.level = 0.95;
    ci.methods = {MethodKind::AEL_Fixed};
    CHECK(runCi(ci, out, err) == kExitUsage);
    ci.fixedAdjustment = 2.0;
    CHECK(runCi(ci, out, err) == kExitOk);
    ci.k = 1;
    ci.methods = {MethodKind::EL};
    CHECK(runCi(ci, out, err) == kExitRange);

    // Three spacings at level 0.95 leave the self-normalized upper limit unbounded.
    CiArgs tiny{three, 1};
    tiny.methods = {MethodKind::NormalSelfNorm};
    std::ostringstream tinyOut;
    CHECK(runCi(tiny, tinyOut, err) == kExitDegenerate);
    const json j = json::parse(tinyOut.str());
    CHECK(j[0]["degenerate"] == true);
    CHECK(j[0]["upper"].is_null());
}

TEST_CASE("ci on the Pareto fixture") {
    std::ostringstream est, err;
    REQUIRE(runEstimate({kFixture, 50}, est, err) == kExitOk);
    const double hill = json::parse(est.str())["hill"].get<double>();

    std::ostringstream a, b;
    REQUIRE(runCi({kFixture, 50}, a, err) == kExitOk);
    REQUIRE(runCi({kFixture, 50}, b, err) == kExitOk);
    CHECK(a.str() == b.str());
    const json j = json::parse(a.str());
    REQUIRE(j.size() == 5);
    const char* names[] = {"normal", "normal-conv", "el", "ael-chen", "ael-bartlett"};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(j[i]["method"] == names[i]);
        CHECK(j[i]["level"] == 0.95);
        CHECK(j[i]["degenerate"] == false);
        CHECK(j[i]["point_estimate"].get<double>() == hill);
        CHECK(j[i]["lower"].get<double>() <= hill);
        CHECK(j[i]["upper"].get<double>() >= hill);
        CHECK(j[i]["length"].get<double>() ==
              doctest::Approx(j[i]["upper"].get<double>() - j[i]["lower"].get<double>()));
    }
}

TEST_CASE("hillplot rows and consistency with ci") {
    std::ostringstream out, err;
    HillplotArgs args{kFixture, {20, 80, 1}};
    REQUIRE(runHillplot(args, out, err) == kExitOk);
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "k,hill,normal_lower,normal_upper,ael-bartlett_lower,ael-bartlett_upper");
    std::size_t rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 61);

    std::ostringstream one, ciOut;
    HillplotArgs single{kFixture, {37, 37, 1}};
    single.methods = {kAllMethods.begin(), kAllMethods.end()};
    REQUIRE(runHillplot(single, one, err) == kExitOk);
    REQUIRE(runCi({kFixture, 37}, ciOut, err) == kExitOk);
    const json ci = json::parse(ciOut.str());
    std::istringstream sl(one.str());
    std::getline(sl, line);
    std::getline(sl, line);
    std::vector<std::string> fields;
    std::istringstream fs_(line);
    for (std::string f; std::getline(fs_, f, ',');) fields.push_back(f);
    REQUIRE(fields.size() == 2 + 2 * 5);
    CHECK(fields[0] == "37");
    CHECK(fields[1] == formatFixed6(ci[0]["point_estimate"].get<double>()));
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(fields[2 + 2 * i] == formatFixed6(ci[i]["lower"].get<double>()));
        CHECK(fields[3 + 2 * i] == formatFixed6(ci[i]["upper"].get<double>()));
    }

    HillplotArgs wide{kFixture, {10, 1000, 1}};
    CHECK(runHillplot(wide, out, err) == kExitRange);
}

TEST_CASE("parseGrid") {
    const KGrid g = parseGrid("10:200:5");
    CHECK(g.kMin == 10);
    CHECK(g.kMax == 200);
    CHECK(g.kStep == 5);
    CHECK(parseGrid("50:50").kStep == 1);
    CHECK(parseGrid("7").kMax == 7);
    CHECK_THROWS(parseGrid("10:x"));
    CHECK_THROWS(parseGrid("10:20:0"));
    CHECK_THROWS(parseGrid("1:2:3:4"));
    CHECK_THROWS(parseGrid("-1:5"));
    CHECK_THROWS(parseGrid("1.5:5"));
}

TEST_CASE("simulate through the library entry point") {
    SimulateArgs args;
    args.plan = SimulationPlan::deskScale(DistributionSpec::burr(0.5, 1.0));
    args.plan.reps = 20;
    args.plan.kGrid = {10, 30, 10};
    std::ostringstream a, b, err;
    REQUIRE(runSimulate(args, a, err) == kExitOk);
    args.threads = 3;
    REQUIRE(runSimulate(args, b, err) == kExitOk);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("true_gamma=2.000000") != std::string::npos);
    CHECK(parseCoverageCsv(a.str()).size() == 3 * 5);

    args.format = Format::Json;
    std::ostringstream j;
    REQUIRE(runSimulate(args, j, err) == kExitOk);
    CHECK(json::parse(j.str())["plan"]["true_gamma"] == 2.0);

    args.plan.reps = 0;
    CHECK(runSimulate(args, j, err) == kExitUsage);
}

TEST_CASE("binary: estimate, ci and exit codes") {
    const std::string ladder = writeFile("bin_ladder.csv", "loss\n" + expLadder());
    Run r = binary("estimate --input \"" + ladder + "\" --k 2");
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["hill"].get<double>() == doctest::Approx(1.5).epsilon(1e-14));

    CHECK(binary("estimate --input \"" + ladder + "\" --k 5").code == kExitRange);
    CHECK(binary("estimate --input /nonexistent/x.csv --k 2").code == kExitInput);
    CHECK(binary("estimate --input \"" + writeFile("bin_bad.csv", "a\n-1\n") + "\" --k 1").code ==
          kExitEmpty);
    CHECK(binary("").code == kExitUsage);
    CHECK(binary("estimate --k 2").code == kExitUsage);
    CHECK(binary("frobnicate").code == kExitUsage);
    CHECK(binary("ci --input \"" + kFixture + "\" --k 50 --methods bootstrap").code == kExitUsage);
    CHECK(binary("simulate --format xml").code == kExitUsage);
    CHECK(binary("simulate --dist cauchy:1").code == kExitUsage);
    CHECK(binary("simulate --reps 5 --k 10:2000:5").code == kExitUsage);
    CHECK(binary("simulate --reps 5 --methods ael-fixed --fixed-a 2").code == kExitUsage);
    CHECK(binary("--help").code == 0);

    const Run a = binary("ci --input \"" + kFixture + "\" --k 50 --level 0.95 --methods all");
    const Run b = binary("ci --input \"" + kFixture + "\" --k 50");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(json::parse(a.out).size() == 5);

    const Run two = binary("ci --input \"" + kFixture + "\" --k 50 --methods el,ael-fixed --fixed-a 1.5");
    REQUIRE(two.code == 0);
    const json j = json::parse(two.out);
    REQUIRE(j.size() == 2);
    CHECK(j[1]["method"] == "ael-fixed");
    CHECK(j[1]["adjustment"] == 1.5);

    const std::string outPath = (scratchDir() / "ci_out.json").string();
    REQUIRE(binary("ci --input \"" + kFixture + "\" --k 50 --out \"" + outPath + "\"").code == 0);
    CHECK(readFile(outPath) == a.out);
}

TEST_CASE("binary: hillplot and simulate") {
    const Run h = binary("hillplot --input \"" + kFixture + "\" --k-grid 20:80:1");
    REQUIRE(h.code == 0);
    CHECK(std::count(h.out.begin(), h.out.end(), '\n') == 62);

    const std::string sim = "simulate --dist pareto:1.0 --n 1000 --reps 200 --k 50:50:1 --seed 7";
    const Run s1 = binary(sim);
    const Run s2 = binary(sim);
    REQUIRE(s1.code == 0);
    CHECK(s1.out == s2.out);
    CHECK(s1.out.find("seed=7") != std::string::npos);
    CHECK(binary(sim + " --threads 1").out == binary(sim + " --threads 4").out);

    const Run burr = binary("simulate --dist burr:0.5,1.0 --reps 10 --k 10:20:10");
    REQUIRE(burr.code == 0);
    CHECK(burr.out.find("true_gamma=2.000000") != std::string::npos);

    const Run grid = binary("simulate --dist frechet:1.0 --reps 4 --k 10:200:5");
    REQUIRE(grid.code == 0);
    CHECK(parseCoverageCsv(grid.out).size() == 39 * 5);

    const Run js = binary("simulate --dist exp:1.0 --reps 10 --k-grid 10:20:10 --format json --methods normal,el");
    REQUIRE(js.code == 0);
    const json j = json::parse(js.out);
    CHECK(j["plan"]["dist"] == "exp:1");
    CHECK(j["rows"].size() == 4);
}

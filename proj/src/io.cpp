#include "tailel/io.hpp"

#include "tailel/error.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace tailel {

namespace {

std::string_view trim(std::string_view s) {
    const auto notSpace = [](char c) { return c != ' ' && c != '\t' && c != '\r' && c != '\n'; };
    std::size_t b = 0;
    while (b < s.size() && !notSpace(s[b])) ++b;
    std::size_t e = s.size();
    while (e > b && !notSpace(s[e - 1])) --e;
    return s.substr(b, e - b);
}

std::string_view firstField(std::string_view line) {
    return trim(line.substr(0, line.find(',')));
}

template <class Fn>
void forEachLine(std::string_view text, Fn&& fn) {
    std::size_t start = 0;
    while (start < text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        fn(text.substr(start, nl - start));
        start = nl + 1;
    }
}

std::vector<std::string_view> splitFields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos
                                                                              : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace

std::optional<double> parseReal(std::string_view token) {
    token = trim(token);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    if (token.empty()) return std::nullopt;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
    return v;
}

DatasetFile parseDataset(std::string_view text, std::string path) {
    DatasetFile file;
    file.path = std::move(path);
    bool firstData = true;
    forEachLine(text, [&](std::string_view raw) {
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') return;
        const std::string_view field = firstField(line);
        const auto value = parseReal(field);
        if (firstData) {
            firstData = false;
            if (!value) {
                file.header = std::string(line);
                return;
            }
        }
        if (value && std::isfinite(*value) && *value > 0.0) {
            file.values.push_back(*value);
            ++file.parsedCount;
        } else {
            ++file.rejectedCount;
        }
    });
    return file;
}

DatasetFile loadDataset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw DataError("error reading '" + path + "'");
    return parseDataset(buf.str(), path);
}

std::string formatFixed6(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 6);
    return std::string(buf, ptr);
}

std::string coverageCsv(const CoverageReport& report) {
    const SimulationPlan& p = report.plan;
    std::string methods;
    for (MethodKind m : p.methods) {
        if (!methods.empty()) methods += ',';
        methods += methodName(m);
    }
    std::ostringstream out;
    out << "# tailel coverage report\n"
        << "# dist=" << p.dist.toString() << " true_gamma=" << formatFixed6(report.trueGamma)
        << " n=" << p.n << " reps=" << p.reps << " k_grid=" << p.kGrid.kMin << ':' << p.kGrid.kMax
        << ':' << p.kGrid.kStep << " level=" << formatFixed6(p.level) << " seed=" << p.baseSeed
        << " methods=" << methods << '\n'
        << "# degenerate or undefined intervals count as non-covering and are excluded from "
           "avg_length\n"
        << "k,method,coverage,mc_stderr,avg_length,degenerate_count\n";
    for (const CoverageRow& r : report.rows) {
        out << r.k << ',' << methodName(r.method) << ',' << formatFixed6(r.coverage) << ','
            << formatFixed6(r.mcStdErr) << ',' << formatFixed6(r.avgLength) << ','
            << r.degenerateCount << '\n';
    }
    return out.str();
}

std::string coverageJson(const CoverageReport& report) {
    using nlohmann::ordered_json;
    const SimulationPlan& p = report.plan;
    ordered_json plan;
    plan["dist"] = p.dist.toString();
    plan["true_gamma"] = report.trueGamma;
    plan["n"] = p.n;
    plan["reps"] = p.reps;
    plan["k_grid"] = {{"min", p.kGrid.kMin}, {"max", p.kGrid.kMax}, {"step", p.kGrid.kStep}};
    plan["level"] = p.level;
    ordered_json methods = ordered_json::array();
    for (MethodKind m : p.methods) methods.push_back(std::string(methodName(m)));
    plan["methods"] = methods;
    plan["seed"] = p.baseSeed;

    ordered_json rows = ordered_json::array();
    for (const CoverageRow& r : report.rows) {
        ordered_json row;
        row["k"] = r.k;
        row["method"] = std::string(methodName(r.method));
        row["coverage"] = r.coverage;
        row["mc_stderr"] = r.mcStdErr;
        row["avg_length"] = std::isfinite(r.avgLength) ? ordered_json(r.avgLength) : nullptr;
        row["degenerate_count"] = r.degenerateCount;
        row["failure_count"] = r.failureCount;
        rows.push_back(std::move(row));
    }
    ordered_json doc;
    doc["plan"] = plan;
    doc["degenerate_convention"] = "non-covering; excluded from avg_length";
    doc["rows"] = rows;
    return doc.dump(2) + "\n";
}

std::vector<CoverageRow> parseCoverageCsv(std::string_view text) {
    std::vector<CoverageRow> rows;
    bool sawHeader = false;
    forEachLine(text, [&](std::string_view raw) {
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') return;
        if (!sawHeader) {
            sawHeader = true;
            return;
        }
        const auto f = splitFields(line);
        if (f.size() != 6) throw DataError("coverage row needs 6 fields: " + std::string(line));
        auto real = [&](std::string_view s) {
            if (s == "nan") return std::nan("");
            const auto v = parseReal(s);
            if (!v) throw DataError("bad number '" + std::string(s) + "'");
            return *v;
        };
        CoverageRow r;
        r.k = static_cast<std::size_t>(real(f[0]));
        r.method = parseMethod(f[1]);
        r.coverage = real(f[2]);
        r.mcStdErr = real(f[3]);
        r.avgLength = real(f[4]);
        r.degenerateCount = static_cast<std::size_t>(real(f[5]));
        rows.push_back(r);
    });
    return rows;
}

} // namespace tailel

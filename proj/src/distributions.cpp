#include "tailel/distributions.hpp"

#include "tailel/error.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace tailel {

DistributionSpec DistributionSpec::frechet(double alpha) {
    DistributionSpec s{DistributionKind::Frechet, {alpha}};
    validate(s);
    return s;
}

DistributionSpec DistributionSpec::burr(double alpha, double beta) {
    DistributionSpec s{DistributionKind::Burr, {alpha, beta}};
    validate(s);
    return s;
}

DistributionSpec DistributionSpec::pareto(double gamma) {
    DistributionSpec s{DistributionKind::Pareto, {gamma}};
    validate(s);
    return s;
}

DistributionSpec DistributionSpec::exponential(double mean) {
    DistributionSpec s{DistributionKind::Exponential, {mean}};
    validate(s);
    return s;
}

namespace {

std::size_t paramCount(DistributionKind kind) {
    return kind == DistributionKind::Burr ? 2 : 1;
}

const char* kindName(DistributionKind kind) {
    switch (kind) {
    case DistributionKind::Frechet: return "frechet";
    case DistributionKind::Burr: return "burr";
    case DistributionKind::Pareto: return "pareto";
    case DistributionKind::Exponential: return "exp";
    }
    return "?";
}

double parseNumber(const std::string& token, const std::string& whole) {
    double v = 0.0;
    const char* first = token.data();
    const char* last = first + token.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
        throw ParameterError("bad distribution parameter '" + token + "' in '" + whole + "'");
    }
    return v;
}

void requireOpenUnit(double u) {
    if (!(u > 0.0 && u < 1.0)) {
        throw DomainError("probability must lie in (0,1)");
    }
}

} // namespace

DistributionSpec DistributionSpec::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw ParameterError("distribution must look like name:params, got '" + text + "'");
    }
    const std::string name = text.substr(0, colon);
    DistributionSpec spec{};
    if (name == "frechet") {
        spec.kind = DistributionKind::Frechet;
    } else if (name == "burr") {
        spec.kind = DistributionKind::Burr;
    } else if (name == "pareto") {
        spec.kind = DistributionKind::Pareto;
    } else if (name == "exp" || name == "exponential") {
        spec.kind = DistributionKind::Exponential;
    } else {
        throw ParameterError("unknown distribution '" + name + "'");
    }
    std::string rest = text.substr(colon + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
        const auto comma = rest.find(',', start);
        const auto end = comma == std::string::npos ? rest.size() : comma;
        spec.params.push_back(parseNumber(rest.substr(start, end - start), text));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    validate(spec);
    return spec;
}

std::string DistributionSpec::toString() const {
    std::string out = kindName(kind);
    out += ':';
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ',';
        char buf[64];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, params[i]);
        out.append(buf, ptr);
    }
    return out;
}

void validate(const DistributionSpec& spec) {
    if (spec.params.size() != paramCount(spec.kind)) {
        throw ParameterError(std::string(kindName(spec.kind)) + " expects " +
                             std::to_string(paramCount(spec.kind)) + " parameter(s)");
    }
    for (double p : spec.params) {
        if (!(std::isfinite(p) && p > 0.0)) {
            throw ParameterError(std::string(kindName(spec.kind)) +
                                 " parameters must be finite and > 0");
        }
    }
}

double trueGamma(const DistributionSpec& spec) {
    validate(spec);
    switch (spec.kind) {
    case DistributionKind::Frechet: return 1.0 / spec.params[0];
    case DistributionKind::Burr: return 1.0 / (spec.params[0] * spec.params[1]);
    case DistributionKind::Pareto: return spec.params[0];
    case DistributionKind::Exponential: return spec.params[0];
    }
    return 0.0;
}

double quantile(const DistributionSpec& spec, double u) {
    validate(spec);
    requireOpenUnit(u);
    const auto& p = spec.params;
    switch (spec.kind) {
    case DistributionKind::Frechet: return std::pow(-std::log(u), -1.0 / p[0]);
    case DistributionKind::Burr:
        return std::pow(std::expm1(-std::log1p(-u) / p[1]), 1.0 / p[0]);
    case DistributionKind::Pareto: return std::exp(-p[0] * std::log1p(-u));
    case DistributionKind::Exponential: return -p[0] * std::log1p(-u);
    }
    return 0.0;
}

double upperQuantile(const DistributionSpec& spec, double v) {
    validate(spec);
    requireOpenUnit(v);
    const auto& p = spec.params;
    switch (spec.kind) {
    case DistributionKind::Frechet: return std::pow(-std::log1p(-v), -1.0 / p[0]);
    case DistributionKind::Burr: return std::pow(std::expm1(-std::log(v) / p[1]), 1.0 / p[0]);
    case DistributionKind::Pareto: return std::pow(v, -p[0]);
    case DistributionKind::Exponential: return -p[0] * std::log(v);
    }
    return 0.0;
}

double cdf(const DistributionSpec& spec, double x) {
    validate(spec);
    const auto& p = spec.params;
    if (!(x > 0.0)) return 0.0;
    switch (spec.kind) {
    case DistributionKind::Frechet: return std::exp(-std::pow(x, -p[0]));
    case DistributionKind::Burr: return -std::expm1(-p[1] * std::log1p(std::pow(x, p[0])));
    case DistributionKind::Pareto: return x <= 1.0 ? 0.0 : -std::expm1(-std::log(x) / p[0]);
    case DistributionKind::Exponential: return -std::expm1(-x / p[0]);
    }
    return 0.0;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

} // namespace

UniformStream::UniformStream(SeedContract seed) {
    std::uint64_t a = seed.baseSeed;
    std::uint64_t b = seed.streamIndex ^ 0x6A09E667F3BCC909ULL;
    std::uint64_t mixed = splitmix64(a) ^ rotl(splitmix64(b), 17);
    for (auto& word : state_) word = splitmix64(mixed);
}

std::uint64_t UniformStream::nextBits() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double UniformStream::nextOpen() {
    // Midpoints of the 2^53 equal cells of [0,1).
    return (static_cast<double>(nextBits() >> 11) + 0.5) * 0x1.0p-53;
}

Sample sample(const DistributionSpec& spec, std::size_t n, SeedContract seed) {
    validate(spec);
    if (n < 1) throw ParameterError("sample size must be >= 1");
    UniformStream stream(seed);
    std::vector<double> values(n);
    // Each uniform is taken as the survival probability 1 - F(x).
    for (auto& x : values) x = upperQuantile(spec, stream.nextOpen());
    return makeSample(values);
}

} // namespace tailel

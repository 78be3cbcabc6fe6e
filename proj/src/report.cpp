#include <bethe/harness.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace bethe::harness {

namespace {

using nlohmann::json;

// JSON has no infinity; a failed quadrature or NaN error is written as null.
json error_value(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double read_error(const json& j) {
    return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

std::string format(const char* fmt, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, fmt, args...);
    return buf;
}

}  // namespace

std::string reports_to_json(std::span<const IdentityReport> reports) {
    json out = json::array();
    for (const auto& r : reports) {
        out.push_back({
            {"identity_id", r.identity_id},
            {"samples_run", r.samples_run},
            {"samples_resampled", r.samples_resampled},
            {"max_rel_error", error_value(r.max_rel_error)},
            {"tolerance", r.tolerance},
            {"pass", r.pass},
            {"wall_time_ms", r.wall_time_ms},
            {"seed", r.seed},
        });
    }
    return out.dump(2);
}

std::vector<IdentityReport> reports_from_json(std::string_view text) {
    json in;
    try {
        in = json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("report JSON: ") + e.what());
    }
    if (!in.is_array()) throw DomainError("report JSON: top level must be a list");
    std::vector<IdentityReport> out;
    try {
        for (const auto& j : in) {
            IdentityReport r;
            r.identity_id = j.at("identity_id").get<std::string>();
            r.samples_run = j.at("samples_run").get<std::uint64_t>();
            r.samples_resampled = j.at("samples_resampled").get<std::uint64_t>();
            r.max_rel_error = read_error(j.at("max_rel_error"));
            r.tolerance = j.at("tolerance").get<double>();
            r.pass = j.at("pass").get<bool>();
            r.wall_time_ms = j.at("wall_time_ms").get<double>();
            r.seed = j.at("seed").get<std::uint64_t>();
            out.push_back(std::move(r));
        }
    } catch (const json::exception& e) {
        throw DomainError(std::string("report JSON: ") + e.what());
    }
    return out;
}

std::string format_report_table(std::span<const IdentityReport> reports) {
    std::ostringstream os;
    os << format("%-18s %8s %9s %12s %10s %10s  %s\n", "identity", "samples", "resampled", "max_rel_err",
                 "tolerance", "time_ms", "result");
    for (const auto& r : reports) {
        std::string result = r.pass ? "PASS" : "FAIL";
        if (r.flagged()) result += " FLAGGED(resample rate)";
        os << format("%-18s %8llu %9llu %12.3e %10.1e %10.1f  %s\n", r.identity_id.c_str(),
                     static_cast<unsigned long long>(r.samples_run),
                     static_cast<unsigned long long>(r.samples_resampled), r.max_rel_error, r.tolerance,
                     r.wall_time_ms, result.c_str());
    }
    return os.str();
}

std::string format_bench_table(const BenchTable& table) {
    std::ostringstream os;
    os << format("%-6s %4s %8s %14s %14s\n", "route", "M", "samples", "mean_ms", "median_ms");
    for (const auto& r : table.rows) {
        os << format("%-6s %4d %8zu %14.6g %14.6g\n", std::string(route_name(r.route)).c_str(), r.M, r.samples,
                     r.mean_ms, r.median_ms);
    }
    os << "cross-route agreement (max relative spread):\n";
    for (const auto& [m, spread] : table.agreement) os << format("  M=%-3d %.3e\n", m, spread);
    return os.str();
}

std::string format_bench_csv(const BenchTable& table) {
    std::ostringstream os;
    os << "route,M,samples,mean_ms,median_ms\n";
    for (const auto& r : table.rows) {
        os << format("%s,%d,%zu,%.9g,%.9g\n", std::string(route_name(r.route)).c_str(), r.M, r.samples, r.mean_ms,
                     r.median_ms);
    }
    return os.str();
}

}  // namespace bethe::harness

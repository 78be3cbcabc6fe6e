#pragma once

// Seeded sampling of rapidity configurations, the registry of numerical
// identities, verification reports and route timing.

#include <bethe/oracles.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bethe::harness {

struct Interval {
    double lo;
    double hi;
};

struct SampleConfig {
    int M = 2;
    Interval c_range{0.5, 2.0};
    Interval rapidity_range{-2.0, 2.0};
    /// Pairwise gaps within and across u and v are at least min_gap * |c|.
    double min_gap = 0.05;
    std::uint64_t seed = 42;
    /// Fixed kappa, or a fresh kappa per sample when empty.
    std::optional<complex> kappa;
};

struct Sample {
    RapiditySet u;
    RapiditySet v;
    Coupling c;
    Kappa kappa;
};

inline constexpr int kMaxSamplingAttempts = 1000;

/// Deterministic stream of samples for one configuration.
class Sampler {
public:
    explicit Sampler(SampleConfig cfg);

    /// Throws SamplingExhausted after kMaxSamplingAttempts rejected draws.
    Sample next();
    std::mt19937_64& engine() noexcept { return rng_; }
    const SampleConfig& config() const noexcept { return cfg_; }

private:
    SampleConfig cfg_;
    std::mt19937_64 rng_;
};

/// First sample of a fresh stream.
Sample sample_configuration(const SampleConfig& cfg);

/// |a - b| / max(|a|, |b|, 1e-300).
double relative_error(complex a, complex b);

struct IdentityReport {
    std::string identity_id;
    std::uint64_t samples_run = 0;
    std::uint64_t samples_resampled = 0;
    double max_rel_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double wall_time_ms = 0.0;
    std::uint64_t seed = 0;

    /// Resample rate at or above 5% of all draws.
    bool flagged() const noexcept;
    bool operator==(const IdentityReport&) const = default;
};

struct IdentityInfo {
    std::string_view id;
    std::string_view summary;
    double default_tolerance;
    int min_m;
    int max_m;
};

std::span<const IdentityInfo> identity_registry();
/// Throws UnknownIdentity.
const IdentityInfo& identity_info(std::string_view id);

/// Runs `samples` accepted samples of the identity; SingularArgument from an
/// evaluation discards the draw and counts it as resampled. Throws
/// UnknownIdentity, or SizeLimit when cfg.M is outside the identity's range.
IdentityReport run_identity(std::string_view identity_id, const SampleConfig& cfg,
                            std::size_t samples, double tolerance);

/// Error of one identity on one sample (relative, or scaled magnitude for
/// the null test). `aux` feeds auxiliary draws such as positions and
/// permutations.
double identity_error(std::string_view identity_id, const Sample& s, std::mt19937_64& aux);

std::string reports_to_json(std::span<const IdentityReport> reports);
std::vector<IdentityReport> reports_from_json(std::string_view text);
std::string format_report_table(std::span<const IdentityReport> reports);

// -- route timing ----------------------------------------------------------

struct BenchRow {
    Route route;
    int M;
    std::size_t samples;
    double mean_ms;
    double median_ms;
};

struct BenchTable {
    std::vector<BenchRow> rows;
    /// Largest relative spread between routes on a common sample, per M.
    std::vector<std::pair<int, double>> agreement;

    const BenchRow* find(Route route, int M) const;
};

/// Largest M each route is timed at.
int bench_route_limit(Route route);

/// Times every route allowed at each M in [m_min, m_max] on `samples_per_m`
/// shared samples. Each timing repeats the call until at least `min_time_ms`.
BenchTable bench_routes(int m_min, int m_max, std::size_t samples_per_m, SampleConfig cfg,
                        double min_time_ms = 5.0);

std::string format_bench_table(const BenchTable& table);
std::string format_bench_csv(const BenchTable& table);

}  // namespace bethe::harness

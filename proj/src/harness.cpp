#include <bethe/harness.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

namespace bethe::harness {

namespace {

using clock = std::chrono::steady_clock;

double elapsed_ms(clock::time_point start) {
    return std::chrono::duration<double, std::milli>(clock::now() - start).count();
}

// Auxiliary draws (positions, permutations) come from their own stream so
// that the rapidity stream does not depend on which identity consumes it.
constexpr std::uint64_t kAuxStream = 0x9e3779b97f4a7c15ULL;

}  // namespace

Sampler::Sampler(SampleConfig cfg) : cfg_(cfg), rng_(cfg.seed) {
    if (cfg_.M < 0) throw DomainError("SampleConfig: M must be non-negative");
    if (!(cfg_.min_gap > 0.0)) throw DomainError("SampleConfig: min_gap must be positive");
    if (!(cfg_.c_range.lo <= cfg_.c_range.hi) || !(cfg_.rapidity_range.lo <= cfg_.rapidity_range.hi)) {
        throw DomainError("SampleConfig: interval bounds out of order");
    }
    if (cfg_.c_range.lo <= 0.0 && cfg_.c_range.hi >= 0.0) {
        throw DomainError("SampleConfig: c range must exclude 0");
    }
}

Sample Sampler::next() {
    std::uniform_real_distribution<double> cdist(cfg_.c_range.lo, cfg_.c_range.hi);
    std::uniform_real_distribution<double> rdist(cfg_.rapidity_range.lo, cfg_.rapidity_range.hi);
    std::uniform_real_distribution<double> kdist(-1.5, 1.5);
    const std::size_t m = static_cast<std::size_t>(cfg_.M);
    for (int attempt = 0; attempt < kMaxSamplingAttempts; ++attempt) {
        const double c = cdist(rng_);
        std::vector<double> all(2 * m);
        for (auto& x : all) x = rdist(rng_);
        complex kappa = cfg_.kappa.value_or(complex(kdist(rng_), kdist(rng_)));

        std::vector<double> sorted = all;
        std::sort(sorted.begin(), sorted.end());
        bool ok = true;
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
            if (sorted[i + 1] - sorted[i] < cfg_.min_gap * std::abs(c)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        const std::span<const double> view(all);
        return {RapiditySet::from_real(view.first(m)), RapiditySet::from_real(view.subspan(m)), Coupling(c),
                Kappa(kappa)};
    }
    throw SamplingExhausted("sample_configuration: no admissible draw after " +
                            std::to_string(kMaxSamplingAttempts) + " attempts");
}

Sample sample_configuration(const SampleConfig& cfg) { return Sampler(cfg).next(); }

double relative_error(complex a, complex b) {
    const double d = std::abs(a - b);
    if (d == 0.0) return 0.0;
    return d / std::max({std::abs(a), std::abs(b), 1e-300});
}

bool IdentityReport::flagged() const noexcept {
    const double total = static_cast<double>(samples_run + samples_resampled);
    return total > 0.0 && static_cast<double>(samples_resampled) >= 0.05 * total;
}

IdentityReport run_identity(std::string_view identity_id, const SampleConfig& cfg,
                            std::size_t samples, double tolerance) {
    const IdentityInfo& info = identity_info(identity_id);
    if (cfg.M < info.min_m || cfg.M > info.max_m) {
        throw SizeLimit(std::string(identity_id) + ": M=" + std::to_string(cfg.M) + " outside [" +
                        std::to_string(info.min_m) + ", " + std::to_string(info.max_m) + "]");
    }
    const auto start = clock::now();
    Sampler sampler(cfg);
    std::mt19937_64 aux(cfg.seed ^ kAuxStream);

    IdentityReport report;
    report.identity_id = std::string(info.id);
    report.tolerance = tolerance;
    report.seed = cfg.seed;
    const std::uint64_t max_draws = 10 * static_cast<std::uint64_t>(samples) + kMaxSamplingAttempts;
    while (report.samples_run < samples) {
        if (report.samples_run + report.samples_resampled >= max_draws) {
            throw SamplingExhausted(std::string(identity_id) + ": singularity guard rejected too many samples");
        }
        const Sample s = sampler.next();
        double err;
        try {
            err = identity_error(info.id, s, aux);
        } catch (const SingularArgument&) {
            ++report.samples_resampled;
            continue;
        } catch (const QuadratureFailure&) {
            err = std::numeric_limits<double>::infinity();
        }
        if (std::isnan(err)) err = std::numeric_limits<double>::infinity();
        report.max_rel_error = std::max(report.max_rel_error, err);
        ++report.samples_run;
    }
    report.pass = report.max_rel_error <= tolerance;
    report.wall_time_ms = elapsed_ms(start);
    return report;
}

// -- route timing ----------------------------------------------------------

const BenchRow* BenchTable::find(Route route, int M) const {
    for (const auto& r : rows) {
        if (r.route == route && r.M == M) return &r;
    }
    return nullptr;
}

int bench_route_limit(Route route) {
    switch (route) {
        case Route::A: return static_cast<int>(kMaxRouteASize);
        case Route::B:
        case Route::C: return static_cast<int>(kMaxRouteBSize);
        case Route::D: return static_cast<int>(kMaxDeterminantSize);
        case Route::integral: return 0;
    }
    return 0;
}

BenchTable bench_routes(int m_min, int m_max, std::size_t samples_per_m, SampleConfig cfg,
                        double min_time_ms) {
    if (m_min < 1 || m_max < m_min) throw DomainError("bench_routes: need 1 <= m_min <= m_max");
    if (m_max > static_cast<int>(kMaxDeterminantSize)) throw SizeLimit("bench_routes: M > 64");
    if (samples_per_m == 0) throw DomainError("bench_routes: need at least one sample");

    BenchTable table;
    constexpr Route kRoutes[] = {Route::A, Route::B, Route::C, Route::D};
    for (int m = m_min; m <= m_max; ++m) {
        cfg.M = m;
        // Rapidities spread with M so that the gap constraint stays easy to meet.
        const double width = std::max(2.0, 0.5 * m);
        cfg.rapidity_range = {-width, width};
        Sampler sampler(cfg);
        std::vector<Sample> samples;
        std::size_t rejected = 0;
        while (samples.size() < samples_per_m) {
            Sample s = sampler.next();
            try {
                for (Route route : kRoutes) {
                    if (m <= bench_route_limit(route)) (void)mepno_route(route, s.u, s.v, s.c, s.kappa);
                }
                samples.push_back(std::move(s));
            } catch (const SingularArgument&) {
                if (++rejected > 1000) throw SamplingExhausted("bench_routes: no admissible samples");
            }
        }

        std::vector<std::vector<complex>> values(samples.size());
        for (Route route : kRoutes) {
            if (m > bench_route_limit(route)) continue;
            std::vector<double> times;
            for (std::size_t k = 0; k < samples.size(); ++k) {
                const Sample& s = samples[k];
                complex value{};
                std::size_t reps = 0;
                const auto start = clock::now();
                double total = 0.0;
                do {
                    value = mepno_route(route, s.u, s.v, s.c, s.kappa).value;
                    ++reps;
                    total = elapsed_ms(start);
                } while (total < min_time_ms);
                times.push_back(total / static_cast<double>(reps));
                values[k].push_back(value);
            }
            double mean = 0.0;
            for (double t : times) mean += t;
            mean /= static_cast<double>(times.size());
            std::sort(times.begin(), times.end());
            const std::size_t mid = times.size() / 2;
            const double median = times.size() % 2 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
            table.rows.push_back({route, m, samples.size(), mean, median});
        }
        double spread = 0.0;
        for (const auto& v : values) {
            for (const auto& x : v) spread = std::max(spread, relative_error(x, v.back()));
        }
        table.agreement.emplace_back(m, spread);
    }
    return table;
}

}  // namespace bethe::harness

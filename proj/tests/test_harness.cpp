#include <bethe/harness.hpp>

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace bethe;
using namespace bethe::harness;

TEST_CASE("sampler is deterministic and respects gaps") {
    SampleConfig cfg;
    cfg.M = 3;
    cfg.seed = 1234;
    Sampler a(cfg), b(cfg);
    for (int k = 0; k < 20; ++k) {
        const Sample x = a.next(), y = b.next();
        CHECK(x.u == y.u);
        CHECK(x.v == y.v);
        CHECK(x.c.value() == y.c.value());
        CHECK(x.kappa.value() == y.kappa.value());

        std::vector<double> all;
        for (const auto& z : x.u) all.push_back(z.real());
        for (const auto& z : x.v) all.push_back(z.real());
        CHECK(all.size() == 6);
        for (std::size_t i = 0; i < all.size(); ++i) {
            CHECK(all[i] >= cfg.rapidity_range.lo);
            CHECK(all[i] <= cfg.rapidity_range.hi);
            for (std::size_t j = i + 1; j < all.size(); ++j) {
                CHECK(std::abs(all[i] - all[j]) >= cfg.min_gap * std::abs(x.c.value()));
            }
        }
        CHECK(x.c.value() >= 0.5);
        CHECK(x.c.value() <= 2.0);
    }
    cfg.seed = 1235;
    CHECK_FALSE(sample_configuration(cfg).u == Sampler(SampleConfig{3, {0.5, 2.0}, {-2.0, 2.0}, 0.05, 1234, {}}).next().u);
}

TEST_CASE("sampler edge cases") {
    SampleConfig cfg;
    cfg.M = 2;
    cfg.rapidity_range = {1.0, 1.0};
    CHECK_THROWS_AS(sample_configuration(cfg), SamplingExhausted);

    SampleConfig fixed;
    fixed.kappa = complex(0.25, -0.5);
    CHECK(sample_configuration(fixed).kappa.value() == complex(0.25, -0.5));

    SampleConfig bad;
    bad.min_gap = 0.0;
    CHECK_THROWS_AS(Sampler{bad}, DomainError);
    bad = SampleConfig{};
    bad.c_range = {-1.0, 1.0};
    CHECK_THROWS_AS(Sampler{bad}, DomainError);
}

TEST_CASE("relative error") {
    CHECK(relative_error(1.0, 1.0) == 0.0);
    CHECK(relative_error(0.0, 0.0) == 0.0);
    CHECK(relative_error(2.0, 1.0) == doctest::Approx(0.5));
    // Denominators are floored at 1e-300.
    CHECK(relative_error(0.0, 1e-310) == doctest::Approx(1e-10));
}

TEST_CASE("registry") {
    const std::vector<std::string> expected{"gaudin",       "lemma2",       "cauchy",          "ik-two-forms",
                                            "k-symmetry",   "k-conjugate",  "cusp",            "exchange",
                                            "routes-ab",    "routes-bc",    "routes-cd",       "kappa-null",
                                            "kappa-poly",   "residue",      "integral-m1",     "integral-m2",
                                            "shift-identities", "appendix-a3", "appendix-a4"};
    const auto reg = identity_registry();
    REQUIRE(reg.size() == expected.size());
    for (std::size_t i = 0; i < reg.size(); ++i) CHECK(reg[i].id == expected[i]);
    CHECK_THROWS_AS(identity_info("nope"), UnknownIdentity);
    CHECK_THROWS_AS(run_identity("nope", SampleConfig{}, 1, 1e-8), UnknownIdentity);
}

TEST_CASE("run_identity") {
    SampleConfig cfg;
    cfg.M = 1;
    const auto g = run_identity("gaudin", cfg, 10, 1e-12);
    CHECK(g.pass);
    CHECK(g.samples_run == 10);
    CHECK(g.max_rel_error <= 1e-12);
    CHECK(g.identity_id == "gaudin");
    CHECK(g.seed == 42);

    cfg.M = 2;
    const auto null = run_identity("kappa-null", cfg, 10, 1e-8);
    CHECK(null.pass);

    const auto strict = run_identity("gaudin", cfg, 5, 0.0);
    CHECK(strict.pass == (strict.max_rel_error <= 0.0));

    cfg.M = 7;
    CHECK_THROWS_AS(run_identity("gaudin", cfg, 1, 1e-8), SizeLimit);
    cfg.M = 2;
    CHECK_THROWS_AS(run_identity("integral-m1", cfg, 1, 1e-6), SizeLimit);
}

TEST_CASE("every identity runs at a small size") {
    for (const auto& info : identity_registry()) {
        SampleConfig cfg;
        cfg.M = std::clamp(2, info.min_m, info.max_m);
        const auto r = run_identity(info.id, cfg, 2, info.default_tolerance);
        CHECK(r.samples_run == 2);
        CHECK(std::isfinite(r.max_rel_error));
        if (info.id != "residue") CHECK_MESSAGE(r.pass, info.id);
    }
}

TEST_CASE("report JSON round trip") {
    std::vector<IdentityReport> reports(2);
    reports[0] = {"gaudin", 50, 1, 3.25e-13, 1e-8, true, 12.5, 42};
    reports[1] = {"residue", 20, 0, 0.5, 1e-3, false, 3.0, 18446744073709551615ULL};
    const auto text = reports_to_json(reports);
    CHECK(text.find("\"identity_id\"") != std::string::npos);
    CHECK(text.find("\"samples_resampled\"") != std::string::npos);
    CHECK(text.find("\"wall_time_ms\"") != std::string::npos);
    CHECK(reports_from_json(text) == reports);
    CHECK_THROWS_AS(reports_from_json("{\"a\": 1}"), DomainError);
    CHECK_THROWS_AS(reports_from_json("[{\"identity_id\": 3}]"), DomainError);

    IdentityReport r;
    r.samples_run = 95;
    r.samples_resampled = 5;
    CHECK(r.flagged());
    r.samples_resampled = 4;
    CHECK_FALSE(r.flagged());
    CHECK(format_report_table(reports).find("FAIL") != std::string::npos);
}

TEST_CASE("bench") {
    SampleConfig cfg;
    const auto table = bench_routes(2, 3, 2, cfg, 0.1);
    for (Route r : {Route::A, Route::B, Route::C, Route::D}) {
        REQUIRE(table.find(r, 2) != nullptr);
        CHECK(table.find(r, 2)->mean_ms > 0.0);
    }
    REQUIRE(table.agreement.size() == 2);
    CHECK(table.agreement[0].first == 2);
    CHECK(table.agreement[0].second <= 1e-9);

    const auto big = bench_routes(10, 10, 1, cfg, 0.1);
    REQUIRE(big.find(Route::D, 10) != nullptr);
    CHECK(big.find(Route::A, 10) == nullptr);
    CHECK(big.find(Route::B, 10) == nullptr);
    CHECK(format_bench_csv(table).rfind("route,M,samples,mean_ms,median_ms", 0) == 0);
    CHECK_THROWS_AS(bench_routes(3, 2, 1, cfg), DomainError);
    CHECK_THROWS_AS(bench_routes(2, 65, 1, cfg), SizeLimit);
}

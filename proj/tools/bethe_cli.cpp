// Command-line front end: verify identities, evaluate single objects, time routes.

#include <bethe/harness.hpp>
#include <bethe/wavefunction.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using bethe::complex;
namespace harness = bethe::harness;

// One entry of a complex list: "1.5", "-2i", "0.3+1.2i", "1e-3-4e-2i".
complex parse_complex_entry(const std::string& text) {
    const char* s = text.c_str();
    char* end = nullptr;
    const double first = std::strtod(s, &end);
    if (end == s) throw bethe::DomainError("cannot parse complex entry '" + text + "'");
    if (*end == '\0') return {first, 0.0};
    if (*end == 'i' && end[1] == '\0') return {0.0, first};
    if (*end == '+' || *end == '-') {
        const char* rest = end;
        const double second = std::strtod(rest, &end);
        if (end != rest && *end == 'i' && end[1] == '\0') return {first, second};
    }
    throw bethe::DomainError("cannot parse complex entry '" + text + "'");
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    for (char ch : text) {
        if (ch == ',') {
            out.push_back(item);
            item.clear();
        } else if (ch != ' ') {
            item.push_back(ch);
        }
    }
    out.push_back(item);
    return out;
}

std::vector<complex> parse_complex_list(const std::string& text) {
    std::vector<complex> out;
    for (const auto& item : split_csv(text)) out.push_back(parse_complex_entry(item));
    return out;
}

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& item : split_csv(text)) {
        const complex z = parse_complex_entry(item);
        if (z.imag() != 0.0) throw bethe::DomainError("positions must be real");
        out.push_back(z.real());
    }
    return out;
}

// "re,im" or a single real.
complex parse_kappa(const std::string& text) {
    const auto parts = split_csv(text);
    if (parts.size() == 1) return parse_complex_entry(parts[0]);
    if (parts.size() == 2) return {parse_complex_entry(parts[0]).real(), parse_complex_entry(parts[1]).real()};
    throw bethe::DomainError("kappa must be given as re,im");
}

void print_complex(complex z) { std::printf("%.17g,%.17g\n", z.real(), z.imag()); }

struct VerifyOptions {
    std::string identity;
    int m = 2;
    std::size_t samples = 20;
    std::uint64_t seed = 42;
    std::optional<double> tol;
    std::optional<double> c;
    std::optional<std::string> kappa;
    std::optional<std::string> json;
};

int run_verify(const VerifyOptions& o) {
    harness::SampleConfig cfg;
    cfg.seed = o.seed;
    if (o.c) cfg.c_range = {*o.c, *o.c};
    if (o.kappa) cfg.kappa = parse_kappa(*o.kappa);

    std::vector<std::string> ids;
    if (o.identity == "all") {
        for (const auto& info : harness::identity_registry()) ids.emplace_back(info.id);
    } else {
        ids.push_back(o.identity);
    }

    std::vector<harness::IdentityReport> reports;
    for (const auto& id : ids) {
        const auto& info = harness::identity_info(id);
        cfg.M = o.m;
        // With "all", each identity runs at the requested M clamped to its range.
        if (o.identity == "all") cfg.M = std::clamp(o.m, info.min_m, info.max_m);
        reports.push_back(harness::run_identity(id, cfg, o.samples, o.tol.value_or(info.default_tolerance)));
    }
    std::cout << harness::format_report_table(reports);
    if (o.json) {
        std::ofstream out(*o.json);
        if (!out) throw bethe::DomainError("cannot write " + *o.json);
        out << harness::reports_to_json(reports) << '\n';
    }
    const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
    return all_pass ? 0 : 1;
}

struct ComputeOptions {
    std::string what;
    std::string u;
    std::optional<std::string> v;
    double c = 1.0;
    std::optional<std::string> kappa;
    std::string route = "D";
    std::optional<std::string> x;
};

int run_compute(const ComputeOptions& o) {
    const bethe::Coupling c(o.c);
    const bethe::RapiditySet u(parse_complex_list(o.u));
    if (o.what == "psi") {
        if (!o.x) throw bethe::DomainError("compute --what psi needs --x");
        const auto x = parse_real_list(*o.x);
        print_complex(bethe::psi_symmetric(x, bethe::BetheState(u, c)));
        return 0;
    }
    if (!o.v) throw bethe::DomainError("compute --what " + o.what + " needs --v");
    const bethe::RapiditySet v(parse_complex_list(*o.v));
    if (o.what == "ik") {
        print_complex(bethe::ik_det(u, v, c));
        return 0;
    }
    if (o.what == "mepno") {
        const bethe::Kappa kappa(o.kappa ? parse_kappa(*o.kappa) : complex{1.0, 0.0});
        print_complex(bethe::mepno_route(bethe::parse_route(o.route), u, v, c, kappa).value);
        return 0;
    }
    throw bethe::DomainError("unknown --what '" + o.what + "' (psi, ik, mepno)");
}

struct BenchOptions {
    int m_min = 2;
    int m_max = 5;
    std::size_t samples = 3;
    std::optional<std::string> csv;
};

int run_bench(const BenchOptions& o) {
    const auto table = harness::bench_routes(o.m_min, o.m_max, o.samples, harness::SampleConfig{});
    std::cout << harness::format_bench_table(table);
    if (o.csv) {
        std::ofstream out(*o.csv);
        if (!out) throw bethe::DomainError("cannot write " + *o.csv);
        out << harness::format_bench_csv(table);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bethe-ansatz determinant identities: verification, evaluation, timing"};
    app.require_subcommand(1);

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Check identities on seeded random samples");
    verify->add_option("--identity", vo.identity, "Identity id, or 'all'")->required();
    verify->add_option("--m", vo.m, "Number of particles M");
    verify->add_option("--samples", vo.samples, "Accepted samples per identity");
    verify->add_option("--seed", vo.seed, "Random seed");
    verify->add_option("--tol", vo.tol, "Tolerance (default: per identity)");
    verify->add_option("--c", vo.c, "Fix the coupling c");
    verify->add_option("--kappa", vo.kappa, "Fix kappa as re,im");
    verify->add_option("--json", vo.json, "Write the JSON report here");

    ComputeOptions co;
    auto* compute = app.add_subcommand("compute", "Evaluate psi, K_M or the matrix element");
    compute->add_option("--what", co.what, "psi | ik | mepno")->required();
    compute->add_option("--u", co.u, "Rapidities u, comma separated (a, a+bi)")->required();
    compute->add_option("--v", co.v, "Rapidities v, comma separated");
    compute->add_option("--c", co.c, "Coupling c")->required();
    compute->add_option("--kappa", co.kappa, "kappa as re,im (default 1)");
    compute->add_option("--route", co.route, "A | B | C | D | integral");
    compute->add_option("--x", co.x, "Positions for --what psi, comma separated");

    BenchOptions bo;
    auto* bench = app.add_subcommand("bench", "Time the matrix-element routes");
    bench->add_option("--m-min", bo.m_min, "Smallest M");
    bench->add_option("--m-max", bo.m_max, "Largest M");
    bench->add_option("--samples", bo.samples, "Samples per M");
    bench->add_option("--csv", bo.csv, "Write the timing table as CSV here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) return run_verify(vo);
        if (*compute) return run_compute(co);
        if (*bench) return run_bench(bo);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

#include <bethe/harness.hpp>
#include <bethe/wavefunction.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace bethe::harness {

namespace {

using Check = std::function<double(const Sample&, std::mt19937_64&)>;

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<int> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<int>(i);
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation(std::move(images));
}

RapiditySet permuted(const Permutation& p, const RapiditySet& a) {
    return RapiditySet(apply_permutation(p, a));
}

RapiditySet prefix(const RapiditySet& a, std::size_t k) {
    return RapiditySet(std::vector<complex>(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k)));
}

RapiditySet suffix(const RapiditySet& a, std::size_t k) {
    return RapiditySet(std::vector<complex>(a.begin() + static_cast<std::ptrdiff_t>(k), a.end()));
}

std::vector<Route> routes_for(std::size_t m) {
    std::vector<Route> r;
    if (m <= kMaxRouteASize) r.push_back(Route::A);
    if (m <= kMaxRouteBSize) r.push_back(Route::B);
    if (m <= kMaxRouteCSize) r.push_back(Route::C);
    r.push_back(Route::D);
    return r;
}

double gaudin(const Sample& s, std::mt19937_64&) {
    return relative_error(gaudin_sum(s.u, s.v, s.c), ik_det(s.u, s.v, s.c));
}

// gamma = u; alpha and beta split v at every position.
double lemma2(const Sample& s, std::mt19937_64&) {
    double worst = 0.0;
    for (std::size_t m1 = 0; m1 <= s.v.size(); ++m1) {
        const auto sides = lemma2_sides(s.u, prefix(s.v, m1), suffix(s.v, m1), s.c);
        worst = std::max(worst, relative_error(sides.lhs, sides.rhs));
    }
    return worst;
}

double cauchy(const Sample& s, std::mt19937_64&) {
    return relative_error(cauchy_det(s.u, s.v, s.c), cauchy_det_factorized(s.u, s.v, s.c));
}

double ik_two_forms(const Sample& s, std::mt19937_64&) {
    return relative_error(ik_det(s.u, s.v, s.c), ik_det_factorized(s.u, s.v, s.c));
}

double k_symmetry(const Sample& s, std::mt19937_64& aux) {
    const auto p = random_permutation(s.u.size(), aux);
    const auto q = random_permutation(s.v.size(), aux);
    return relative_error(ik_det(permuted(p, s.u), permuted(q, s.v), s.c), ik_det(s.u, s.v, s.c));
}

double k_conjugate(const Sample& s, std::mt19937_64&) {
    return relative_error(std::conj(ik_det(s.u, s.v, s.c)), ik_det(s.v, s.u, s.c));
}

// Ordered positions with one coincident adjacent pair, at every pair index.
double cusp(const Sample& s, std::mt19937_64& aux) {
    const std::size_t m = s.u.size();
    const BetheState state(s.u, s.c);
    std::uniform_real_distribution<double> pos(-3.0, 3.0);
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        std::vector<double> x(m - 1);
        for (auto& xi : x) xi = pos(aux);
        std::sort(x.begin(), x.end());
        if (std::adjacent_find(x.begin(), x.end()) != x.end()) throw SingularArgument("cusp: repeated draw");
        x.insert(x.begin() + static_cast<std::ptrdiff_t>(i), x[i]);
        const complex residual = cusp_residual(x, state, i);
        // psi itself is continuous, so the plane-wave sum applies at the wall.
        complex psi{};
        const auto amp = state.amplitudes();
        const auto ordered = state.ordered_rapidities();
        for (std::size_t p = 0; p < amp.size(); ++p) {
            complex phase{};
            for (std::size_t k = 0; k < m; ++k) phase += x[k] * ordered[p * m + k];
            psi += amp[p] * std::exp(complex(0.0, 1.0) * phase);
        }
        const double scale = std::max(std::abs(s.c.value() * psi), 1e-300);
        worst = std::max(worst, std::abs(residual) / scale);
    }
    return worst;
}

// F(P_{j,j+1} P u) = (a - b - ic)/(a - b + ic) F(P u) with a, b at positions j, j+1 of P u.
double exchange(const Sample& s, std::mt19937_64&) {
    const std::size_t m = s.u.size();
    double worst = 0.0;
    for (const auto& p : enumerate_permutations(static_cast<int>(m))) {
        const auto pu = apply_permutation(p, s.u);
        const complex fp = big_f(pu, s.c);
        for (std::size_t j = 0; j + 1 < m; ++j) {
            const auto swapped = apply_permutation(Permutation::adjacent_transposition(m, j) * p, s.u);
            const complex d = pu[j] - pu[j + 1];
            const complex expected = (d - s.c.ic()) / (d + s.c.ic()) * fp;
            worst = std::max(worst, relative_error(big_f(swapped, s.c), expected));
        }
    }
    return worst;
}

double route_pair(Route a, Route b, const Sample& s) {
    return relative_error(mepno_route(a, s.u, s.v, s.c, s.kappa).value,
                          mepno_route(b, s.u, s.v, s.c, s.kappa).value);
}

double kappa_null(const Sample& s, std::mt19937_64&) {
    const double scale = std::max(1.0, std::abs(ik_det(s.v, s.u, s.c)));
    double worst = 0.0;
    for (Route r : routes_for(s.u.size())) {
        worst = std::max(worst, std::abs(mepno_route(r, s.u, s.v, s.c, Kappa{}).value) / scale);
    }
    return worst;
}

// Coefficients from the values at the (M+1)-th roots of unity, then a held-out
// prediction at the sample's kappa. The kappa-derivative at 1, sum_j j c_j,
// must also agree across routes. It cancels by up to five orders against
// sum_j j |c_j|, so its difference is measured on that scale.
double kappa_poly(const Sample& s, std::mt19937_64&) {
    const std::size_t m = s.u.size();
    const std::size_t n = m + 1;
    double worst = 0.0;
    std::vector<complex> derivatives;
    double derivative_scale = 0.0;
    for (Route r : routes_for(m)) {
        std::vector<complex> samples(n);
        for (std::size_t k = 0; k < n; ++k) {
            const complex root = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
            samples[k] = mepno_route(r, s.u, s.v, s.c, Kappa(root)).value;
        }
        std::vector<complex> coeff(n);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                coeff[j] += samples[k] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(n));
            }
            coeff[j] /= static_cast<double>(n);
        }
        complex predicted{};
        for (std::size_t j = n; j-- > 0;) predicted = predicted * s.kappa.value() + coeff[j];
        worst = std::max(worst, relative_error(predicted, mepno_route(r, s.u, s.v, s.c, s.kappa).value));
        complex derivative{};
        double scale = 0.0;
        for (std::size_t j = 1; j < n; ++j) {
            derivative += static_cast<double>(j) * coeff[j];
            scale += static_cast<double>(j) * std::abs(coeff[j]);
        }
        derivative_scale = std::max(derivative_scale, scale);
        derivatives.push_back(derivative);
    }
    const double floor = std::max(derivative_scale, 1e-300);
    for (const auto& d : derivatives) worst = std::max(worst, std::abs(d - derivatives.back()) / floor);
    return worst;
}

double residue(const Sample& s, std::mt19937_64&) {
    const auto probe = residue_probe(s.u, s.v, 1e-5, s.c);
    return relative_error(probe.at_eps, probe.at_half_eps);
}

double integral(const Sample& s, std::mt19937_64&) {
    const auto schedule = fine_damping_schedule();
    return relative_error(mepno_integral_oracle(s.u, s.v, s.c, s.kappa, schedule).value,
                          mepno_det(s.u, s.v, s.c, s.kappa).value);
}

// Additivity of [.}^n, the duality ({x]^n, u) = (x, [u}^n), and invariance of
// the inner product under a common permutation; u doubles as positions.
double shift_identities(const Sample& s, std::mt19937_64& aux) {
    const std::size_t m = s.u.size();
    std::vector<double> x(m), a(m), b(m), ab(m);
    std::uniform_real_distribution<double> pos(-3.0, 3.0);
    for (std::size_t i = 0; i < m; ++i) {
        x[i] = pos(aux);
        a[i] = s.u[i].real();
        b[i] = s.v[i].real();
        ab[i] = a[i] + b[i];
    }
    double worst = 0.0;
    for (int n = 0; n <= static_cast<int>(m); ++n) {
        const auto sa = shifted_set<double>(a, n, ShiftSide::rapidity);
        const auto sb = shifted_set<double>(b, n, ShiftSide::rapidity);
        const auto sab = shifted_set<double>(ab, n, ShiftSide::rapidity);
        for (std::size_t i = 0; i < m; ++i) worst = std::max(worst, relative_error(sa[i] + sb[i], sab[i]));
        const auto sx = shifted_set<double>(x, n, ShiftSide::position);
        worst = std::max(worst, relative_error(set_inner(sx, a), set_inner(std::span<const double>(x), sa)));
    }
    const auto p = random_permutation(m, aux);
    const auto px = apply_permutation<double>(p, x);
    const auto pa = apply_permutation<double>(p, a);
    worst = std::max(worst, relative_error(set_inner(px, pa), set_inner(std::span<const double>(x), a)));
    return worst;
}

complex product(std::span<const double> a, std::size_t from, std::size_t to) {
    double r = 1.0;
    for (std::size_t i = from; i < to; ++i) r *= a[i];
    return r;
}

// Bookkeeping of the bipartition resummation: block factorization of the
// shifted-set products and of F, the mirror identity, and route A grouped by
// induced bipartitions against route A summed directly.
double appendix_a3(const Sample& s, std::mt19937_64&) {
    const std::size_t m = s.u.size();
    std::vector<double> w(m);
    for (std::size_t i = 0; i < m; ++i) w[i] = s.u[i].real() - s.v[i].real();
    double worst = 0.0;
    for (std::size_t n = 0; n <= m; ++n) {
        const auto full = shifted_set<double>(w, static_cast<int>(n), ShiftSide::rapidity);
        const std::vector<double> w1(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n));
        const std::vector<double> w2(w.begin() + static_cast<std::ptrdiff_t>(n), w.end());
        const auto s1 = shifted_set<double>(w1, static_cast<int>(n), ShiftSide::rapidity);
        const auto s2 = shifted_set<double>(w2, 0, ShiftSide::rapidity);
        worst = std::max(worst, relative_error(product(full, 0, n), product(s1, 0, n)));
        worst = std::max(worst, relative_error(product(full, n, m), product(s2, 0, m - n)));

        const RapiditySet u1 = prefix(s.u, n);
        const RapiditySet u2 = suffix(s.u, n);
        worst = std::max(worst, relative_error(big_f(s.u, s.c),
                                               big_f(u1, s.c) * big_f(u2, s.c) *
                                                   set_product(KernelKind::f, u1.values(), u2.values(), PairOrder::all, s.c)));
    }
    const auto mirrored = apply_permutation<double>(Permutation::mirror(m), w);
    const auto s0 = shifted_set<double>(w, 0, ShiftSide::rapidity);
    const auto sm = shifted_set<double>(mirrored, static_cast<int>(m), ShiftSide::rapidity);
    worst = std::max(worst, relative_error(product(s0, 0, m), product(sm, 0, m)));
    if (m <= kMaxRouteASize) {
        worst = std::max(worst, relative_error(mepno_route_a_resummed(s.u, s.v, s.c, s.kappa),
                                               mepno_route_a(s.u, s.v, s.c, s.kappa).value));
    }
    return worst;
}

// Kernel identities under the i c shift, at every (u_i, v_j).
double appendix_a4(const Sample& s, std::mt19937_64&) {
    const complex ic = s.c.ic();
    double worst = 0.0;
    for (const auto& x : s.u) {
        for (const auto& y : s.v) {
            const auto k = [&](KernelKind kind, complex a, complex b) { return kernel(kind, a, b, s.c); };
            worst = std::max(worst, relative_error(k(KernelKind::g, x, y - ic), 1.0 / k(KernelKind::h, x, y)));
            worst = std::max(worst, relative_error(k(KernelKind::g, x - ic, y), -1.0 / k(KernelKind::h, y, x)));
            worst = std::max(worst, relative_error(k(KernelKind::h, x - ic, y), 1.0 / k(KernelKind::g, x, y)));
        }
    }
    return worst;
}

struct Entry {
    IdentityInfo info;
    Check check;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = {
        {{"gaudin", "permutation double sum = K_M", 1e-8, 1, 6}, gaudin},
        {{"lemma2", "bipartition sum of K K f = shifted K_{m1+m2}", 1e-8, 1, 6}, lemma2},
        {{"cauchy", "Cauchy determinant: elimination = product formula", 1e-10, 1, 64}, cauchy},
        {{"ik-two-forms", "K_M: determinant quotient = prefactor form", 1e-10, 1, 64}, ik_two_forms},
        {{"k-symmetry", "K_M(Pu|Qv) = K_M(u|v)", 1e-10, 1, 64}, k_symmetry},
        {{"k-conjugate", "conj K_M(u|v) = K_M(v|u)", 1e-10, 1, 64}, k_conjugate},
        {{"cusp", "derivative jump = c psi at coincident points", 1e-10, 2, 7}, cusp},
        {{"exchange", "amplitude ratio under adjacent exchange", 1e-10, 2, 7}, exchange},
        {{"routes-ab", "matrix element: route A = route B", 1e-8, 1, 5},
         [](const Sample& s, std::mt19937_64&) { return route_pair(Route::A, Route::B, s); }},
        {{"routes-bc", "matrix element: route B = route C", 1e-8, 1, 8},
         [](const Sample& s, std::mt19937_64&) { return route_pair(Route::B, Route::C, s); }},
        {{"routes-cd", "matrix element: route C = determinant", 1e-8, 1, 8},
         [](const Sample& s, std::mt19937_64&) { return route_pair(Route::C, Route::D, s); }},
        {{"kappa-null", "kappa = 1 matrix element vanishes (scaled)", 1e-8, 1, 8}, kappa_null},
        {{"kappa-poly", "degree-M polynomial in kappa, common derivative", 1e-9, 1, 8}, kappa_poly},
        {{"residue", "(sum(u - v)) K_M stable between eps and eps/2", 1e-3, 1, 8}, residue},
        {{"integral-m1", "damped position integral = determinant, M = 1", 1e-6, 1, 1}, integral},
        {{"integral-m2", "damped position integral = determinant, M = 2", 1e-2, 2, 2}, integral},
        {{"shift-identities", "shifted-set additivity and duality", 1e-10, 1, 64}, shift_identities},
        {{"appendix-a3", "resummation bookkeeping", 1e-8, 1, 8}, appendix_a3},
        {{"appendix-a4", "kernel identities under the ic shift", 1e-10, 1, 64}, appendix_a4},
    };
    return table;
}

const Entry& entry(std::string_view id) {
    for (const auto& e : entries()) {
        if (e.info.id == id) return e;
    }
    throw UnknownIdentity("unknown identity: " + std::string(id));
}

}  // namespace

std::span<const IdentityInfo> identity_registry() {
    static const std::vector<IdentityInfo> infos = [] {
        std::vector<IdentityInfo> out;
        for (const auto& e : entries()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

const IdentityInfo& identity_info(std::string_view id) { return entry(id).info; }

double identity_error(std::string_view identity_id, const Sample& s, std::mt19937_64& aux) {
    return entry(identity_id).check(s, aux);
}

}  // namespace bethe::harness

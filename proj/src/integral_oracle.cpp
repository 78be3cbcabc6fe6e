#include <bethe/oracles.hpp>
#include <bethe/quadrature.hpp>
#include <bethe/simd.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace bethe {

namespace {

// Tail cut: exp(-rate * L) = kTailCut.
constexpr double kTailCut = 1e-14;
constexpr double kQuadratureTol = 1e-12;
constexpr int kMaxDoublings = 6;

struct Orderings {
    std::vector<complex> amplitude;
    std::vector<std::vector<double>> sums;  // [p][j] = [P.u}^n_j
};

Orderings orderings(const RapiditySet& u, Coupling c, int n) {
    Orderings o;
    const std::size_t m = u.size();
    for (const auto& perm : enumerate_permutations(static_cast<int>(m))) {
        const auto ordered = apply_permutation(perm, u);
        o.amplitude.push_back(big_f(ordered, c));
        std::vector<double> re(m);
        for (std::size_t k = 0; k < m; ++k) re[k] = ordered[k].real();
        o.sums.push_back(shifted_set<double>(re, n, ShiftSide::rapidity));
    }
    return o;
}

// Sum_i |x_i| = sum_j weight_j |y_j| for x = {y]^n: y_j enters every x_i of
// its own block that it is summed into.
double damping_weight(std::size_t j, int n, std::size_t m) {
    const auto nn = static_cast<std::size_t>(n);
    return j < nn ? static_cast<double>(j + 1) : static_cast<double>(m - j);
}

void require_integral_inputs(const RapiditySet& u, const RapiditySet& v) {
    if (u.size() != v.size()) throw LengthMismatch("integral oracle: #u != #v");
    if (u.empty()) throw DomainError("integral oracle: empty sets");
    if (u.size() > 2) throw SizeLimit("integral oracle: M > 2");
    if (!u.is_real() || !v.is_real()) throw DomainError("integral oracle: real rapidities only");
}

// One-dimensional factor of the tensor rule for every (P, Q):
// int_0^inf dt w(t) conj(exp(i s a_P t)) exp(i s b_Q t) exp(-rate t), s = +1 on
// R_+ and s = -1 on R_- (after y = -t).
std::vector<complex> dimension_factors(std::span<const double> a, std::span<const double> b,
                                       double sign, double rate) {
    double max_freq = 0.0;
    for (double x : a) {
        for (double y : b) max_freq = std::max(max_freq, std::abs(x - y));
    }
    const double length = std::log(1.0 / kTailCut) / rate;
    const double panel = max_freq > 0.0 ? std::numbers::pi / max_freq : length;
    int panels = std::max(4, static_cast<int>(std::ceil(length / panel)));

    const std::size_t np = a.size();
    const std::size_t nq = b.size();
    std::vector<complex> result(np * nq);
    for (int attempt = 0; attempt <= kMaxDoublings; ++attempt, panels *= 2) {
        const auto rule = quadrature::composite_gauss_kronrod(0.0, length, panels);
        const std::size_t nodes = rule.nodes.size();
        std::vector<double> wk(nodes), wg(nodes);
        double l1 = 0.0;
        for (std::size_t k = 0; k < nodes; ++k) {
            const double damp = std::exp(-rate * rule.nodes[k]);
            wk[k] = rule.kronrod_weights[k] * damp;
            wg[k] = rule.gauss_weights[k] * damp;
            l1 += wk[k];
        }
        auto table = [&](double freq) {
            std::vector<complex> t(nodes);
            for (std::size_t k = 0; k < nodes; ++k) t[k] = std::polar(1.0, sign * freq * rule.nodes[k]);
            return t;
        };
        std::vector<std::vector<complex>> ta, tb;
        for (double x : a) ta.push_back(table(x));
        for (double y : b) tb.push_back(table(y));

        bool converged = true;
        for (std::size_t p = 0; p < np && converged; ++p) {
            for (std::size_t q = 0; q < nq; ++q) {
                const complex k = simd::weighted_conj_dot(wk, ta[p], tb[q]);
                const complex g = simd::weighted_conj_dot(wg, ta[p], tb[q]);
                if (std::abs(k - g) > kQuadratureTol * l1) {
                    converged = false;
                    break;
                }
                result[p * nq + q] = k;
            }
        }
        if (converged) return result;
    }
    throw QuadratureFailure("integral oracle: Gauss-Kronrod estimate did not converge");
}

}  // namespace

std::vector<double> default_damping_schedule() { return {0.2, 0.1, 0.05}; }

std::vector<double> fine_damping_schedule() { return {0.2, 0.1, 0.05, 0.025, 0.0125, 0.00625}; }

double damping_frequency_floor(const RapiditySet& u, const RapiditySet& v) {
    require_integral_inputs(u, v);
    const Coupling unit(1.0);
    const int m = static_cast<int>(u.size());
    const double scale = std::max({1.0, u.max_abs(), v.max_abs()});
    double floor = std::numeric_limits<double>::infinity();
    for (int n = 0; n <= m; ++n) {
        const auto ou = orderings(u, unit, n);
        const auto ov = orderings(v, unit, n);
        for (const auto& a : ou.sums) {
            for (const auto& b : ov.sums) {
                for (std::size_t j = 0; j < a.size(); ++j) {
                    const double gap = std::abs(a[j] - b[j]);
                    if (!(gap >= kPermutationSumGuard * scale)) {
                        throw SingularArgument("integral oracle: a partial-sum frequency vanishes");
                    }
                    floor = std::min(floor, gap / damping_weight(j, n, u.size()));
                }
            }
        }
    }
    return floor;
}

complex mepno_damped_integral(const RapiditySet& u, const RapiditySet& v, Coupling c,
                              Kappa kappa, double eta) {
    require_integral_inputs(u, v);
    if (!(eta > 0.0) || !std::isfinite(eta)) throw DomainError("integral oracle: eta must be positive");
    const std::size_t m = u.size();
    const int mi = static_cast<int>(m);

    complex total{};
    complex kappa_n{1.0, 0.0};
    for (int n = 0; n <= mi; ++n) {
        const auto ou = orderings(u, c, n);
        const auto ov = orderings(v, c, n);
        const std::size_t np = ou.amplitude.size();

        // factor[p * np + q] accumulates the product over dimensions.
        std::vector<complex> factor(np * np, complex{1.0, 0.0});
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<double> a(np), b(np);
            for (std::size_t p = 0; p < np; ++p) {
                a[p] = ou.sums[p][j];
                b[p] = ov.sums[p][j];
            }
            const double sign = j < static_cast<std::size_t>(n) ? -1.0 : 1.0;
            const auto d = dimension_factors(a, b, sign, eta * damping_weight(j, n, m));
            for (std::size_t k = 0; k < factor.size(); ++k) factor[k] *= d[k];
        }

        complex sector{};
        for (std::size_t p = 0; p < np; ++p) {
            for (std::size_t q = 0; q < np; ++q) {
                sector += std::conj(ou.amplitude[p]) * ov.amplitude[q] * factor[p * np + q];
            }
        }
        total += kappa_n * sector;
        kappa_n *= kappa.value();
    }
    return std::pow(c.value(), static_cast<double>(m)) * total;
}

MepnoValue mepno_integral_oracle(const RapiditySet& u, const RapiditySet& v, Coupling c,
                                 Kappa kappa, std::span<const double> damping_schedule) {
    require_integral_inputs(u, v);
    if (damping_schedule.empty()) throw DomainError("integral oracle: empty damping schedule");
    for (double h : damping_schedule) {
        if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("integral oracle: damping rates must be positive");
    }
    const double s = damping_frequency_floor(u, v);
    std::vector<double> etas;
    std::vector<complex> values;
    for (double h : damping_schedule) {
        etas.push_back(h * s);
        values.push_back(mepno_damped_integral(u, v, c, kappa, h * s));
    }
    return {quadrature::extrapolate_to_zero(etas, values), Route::integral, u, v, c, kappa};
}

}  // namespace bethe

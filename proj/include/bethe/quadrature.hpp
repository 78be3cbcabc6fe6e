#pragma once

#include <complex>
#include <span>
#include <vector>

namespace bethe::quadrature {

/// Composite 21-point Gauss-Kronrod rule on [a, b] split into equal panels.
/// The embedded 10-point Gauss weights are zero at Kronrod-only nodes, so a
/// single sweep over `nodes` yields both estimates.
struct CompositeRule {
    std::vector<double> nodes;
    std::vector<double> kronrod_weights;
    std::vector<double> gauss_weights;
};

CompositeRule composite_gauss_kronrod(double a, double b, int panels);

/// Integrates a complex function on [a, b] with a composite Gauss-Kronrod rule,
/// doubling the panel count until the Gauss/Kronrod difference is within
/// max(abs_tol, rel_tol * |I|). Throws QuadratureFailure after `max_doublings`.
template <class F>
std::complex<double> integrate(F&& f, double a, double b, int initial_panels, double rel_tol,
                               double abs_tol, int max_doublings);

/// Polynomial (Neville) extrapolation of values(h_k) to h = 0.
std::complex<double> extrapolate_to_zero(std::span<const double> h,
                                         std::span<const std::complex<double>> values);

[[noreturn]] void throw_quadrature_failure(const char* what);

template <class F>
std::complex<double> integrate(F&& f, double a, double b, int initial_panels, double rel_tol,
                               double abs_tol, int max_doublings) {
    int panels = initial_panels;
    for (int attempt = 0; attempt <= max_doublings; ++attempt, panels *= 2) {
        const CompositeRule rule = composite_gauss_kronrod(a, b, panels);
        std::complex<double> k{}, g{};
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const std::complex<double> y = f(rule.nodes[i]);
            k += rule.kronrod_weights[i] * y;
            g += rule.gauss_weights[i] * y;
        }
        if (std::abs(k - g) <= std::max(abs_tol, rel_tol * std::abs(k))) return k;
    }
    throw_quadrature_failure("integrate: Gauss-Kronrod estimate did not converge");
}

}  // namespace bethe::quadrature

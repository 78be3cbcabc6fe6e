#include <bethe/errors.hpp>
#include <bethe/quadrature.hpp>

#include <array>

namespace bethe::quadrature {

namespace {

// QUADPACK qk21 abscissae and weights on [-1, 1]. Odd entries of xgk are the
// 10-point Gauss nodes; wg holds their Gauss weights.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525949903, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

}  // namespace

void throw_quadrature_failure(const char* what) { throw QuadratureFailure(what); }

CompositeRule composite_gauss_kronrod(double a, double b, int panels) {
    if (panels < 1) panels = 1;
    CompositeRule rule;
    rule.nodes.reserve(static_cast<std::size_t>(panels) * 21);
    rule.kronrod_weights.reserve(rule.nodes.capacity());
    rule.gauss_weights.reserve(rule.nodes.capacity());
    const double width = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * width;
        const double center = lo + 0.5 * width;
        const double half = 0.5 * width;
        auto push = [&](double x, double wk, double wg) {
            rule.nodes.push_back(x);
            rule.kronrod_weights.push_back(wk * half);
            rule.gauss_weights.push_back(wg * half);
        };
        for (std::size_t j = 0; j < 10; ++j) {
            const double wg = (j % 2 == 1) ? kWg[j / 2] : 0.0;
            push(center - half * kXgk[j], kWgk[j], wg);
            push(center + half * kXgk[j], kWgk[j], wg);
        }
        push(center, kWgk[10], 0.0);
    }
    return rule;
}

std::complex<double> extrapolate_to_zero(std::span<const double> h,
                                         std::span<const std::complex<double>> values) {
    if (h.empty() || h.size() != values.size()) {
        throw DomainError("extrapolate_to_zero: need matching, non-empty samples");
    }
    std::vector<std::complex<double>> p(values.begin(), values.end());
    const std::size_t n = p.size();
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i) {
            // Neville step evaluated at h = 0.
            p[i] = (h[i + level] * p[i] - h[i] * p[i + 1]) / (h[i + level] - h[i]);
        }
    }
    return p[0];
}

}  // namespace bethe::quadrature

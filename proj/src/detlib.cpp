#include <bethe/detlib.hpp>
#include <bethe/simd.hpp>

#include "double_double.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace bethe {

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n), a_(n * n) {}

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<complex> row_major)
    : n_(n), a_(std::move(row_major)) {
    if (a_.size() != n * n) throw LengthMismatch("ComplexMatrix: entry count != n*n");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<complex>> rows)
    : n_(rows.size()) {
    a_.reserve(n_ * n_);
    for (const auto& r : rows) {
        if (r.size() != n_) throw LengthMismatch("ComplexMatrix: ragged rows");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

std::string_view route_name(Route r) noexcept {
    switch (r) {
        case Route::A: return "A";
        case Route::B: return "B";
        case Route::C: return "C";
        case Route::D: return "D";
        case Route::integral: return "integral";
    }
    return "?";
}

Route parse_route(std::string_view text) {
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (s == "a") return Route::A;
    if (s == "b") return Route::B;
    if (s == "c") return Route::C;
    if (s == "d") return Route::D;
    if (s == "integral") return Route::integral;
    throw DomainError("unknown route '" + std::string(text) + "'");
}

complex det_complex(ComplexMatrix m) {
    const std::size_t n = m.size();
    complex det{1.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(m(k, k));
        for (std::size_t r = k + 1; r < n; ++r) {
            const double mag = std::abs(m(r, k));
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best == 0.0) return {0.0, 0.0};
        if (pivot != k) {
            std::swap_ranges(m.row(k).begin(), m.row(k).end(), m.row(pivot).begin());
            det = -det;
        }
        const complex diag = m(k, k);
        det = det * diag;
        const auto pivot_tail = m.row(k).subspan(k + 1);
        for (std::size_t r = k + 1; r < n; ++r) {
            const complex factor = m(r, k) / diag;
            if (factor == complex{}) continue;
            simd::caxpy(-factor, pivot_tail, m.row(r).subspan(k + 1));
        }
    }
    return det;
}

void require_separated(std::span<const complex> a, Coupling c, const char* what) {
    double scale = std::max(1.0, std::abs(c.value()));
    for (const auto& z : a) scale = std::max(scale, std::abs(z));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (std::abs(a[i] - a[j]) < kKernelGuard * scale) {
                throw SingularArgument(std::string(what) + ": coincident parameters");
            }
        }
    }
}

namespace {

void require_square(const RapiditySet& u, const RapiditySet& v, const char* what) {
    if (u.size() != v.size()) throw LengthMismatch(std::string(what) + ": #u != #v");
    if (u.size() > kMaxDeterminantSize) throw SizeLimit(std::string(what) + ": n > 64");
}

// The structured determinants are built and eliminated in double-double.
// Their entries sit close to a low-rank matrix: rounding the entries of
// [1/h(u_i, v_j)] to double already moves the n = 8 determinant by up to 1e-8,
// and long double still leaves a tail above 1e-9.
using xcomplex = dd::complex;

xcomplex widen(complex z) { return xcomplex(z); }

complex narrow(const xcomplex& z) { return z.to_double(); }

struct XMatrix {
    std::size_t n;
    std::vector<xcomplex> a;
    explicit XMatrix(std::size_t size) : n(size), a(size * size) {}
    xcomplex& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
};

xcomplex det_extended(XMatrix m) {
    const std::size_t n = m.n;
    xcomplex det(dd::real(1.0));
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = dd::approx_abs(m(k, k));
        for (std::size_t r = k + 1; r < n; ++r) {
            const double mag = dd::approx_abs(m(r, k));
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best == 0.0) return {};
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            det = -det;
        }
        const xcomplex diag = m(k, k);
        det = det * diag;
        for (std::size_t r = k + 1; r < n; ++r) {
            const xcomplex factor = m(r, k) / diag;
            if (dd::is_zero(factor)) continue;
            for (std::size_t j = k + 1; j < n; ++j) m(r, j) = m(r, j) - factor * m(k, j);
        }
    }
    return det;
}

double matrix_scale(const RapiditySet& u, const RapiditySet& v, Coupling c) {
    return std::max({1.0, std::abs(c.value()), u.max_abs(), v.max_abs()});
}

XMatrix inverse_h_matrix(const RapiditySet& u, const RapiditySet& v, Coupling c) {
    const std::size_t n = u.size();
    const double scale = matrix_scale(u, v, c);
    const xcomplex ic = widen(c.ic());
    XMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const xcomplex d = widen(u[i]) - widen(v[j]) + ic;
            if (dd::approx_abs(d) < kKernelGuard * scale) {
                throw SingularArgument("1/h(u,v) at u-v=-ic");
            }
            m(i, j) = ic / d;
        }
    }
    return m;
}

// t(a, b) = g(a, b) / h(a, b) with the guards of the scalar kernel.
xcomplex t_extended(complex a, complex b, Coupling c, double scale) {
    const xcomplex ic = widen(c.ic());
    const xcomplex d = widen(a) - widen(b);
    if (dd::approx_abs(d) < kKernelGuard * scale) throw SingularArgument("t(u,v) at u=v");
    if (dd::approx_abs(d + ic) < kKernelGuard * scale) throw SingularArgument("t(u,v) at u-v=-ic");
    return ic * ic / (d * (d + ic));
}

XMatrix t_matrix(const RapiditySet& u, const RapiditySet& v, Coupling c) {
    const std::size_t n = u.size();
    const double scale = matrix_scale(u, v, c);
    XMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = t_extended(u[i], v[j], c, scale);
    }
    return m;
}

}  // namespace

complex cauchy_det(const RapiditySet& u, const RapiditySet& v, Coupling c) {
    require_square(u, v, "cauchy_det");
    return narrow(det_extended(inverse_h_matrix(u, v, c)));
}

complex cauchy_det_factorized(const RapiditySet& u, const RapiditySet& v, Coupling c) {
    require_square(u, v, "cauchy_det_factorized");
    // h(u,v) vanishing is the same pole the matrix form guards against.
    inverse_h_matrix(u, v, c);
    const complex prefactor = set_product(KernelKind::g, u, u, PairOrder::less, c) *
                              set_product(KernelKind::g, v, v, PairOrder::greater, c) *
                              set_product(KernelKind::h, u, v, PairOrder::all, c);
    return 1.0 / prefactor;
}

complex ik_det(const RapiditySet& u, const RapiditySet& v, Coupling c) {
    require_square(u, v, "ik_det");
    if (u.empty()) return {1.0, 0.0};
    require_separated(u, c, "ik_det(u)");
    require_separated(v, c, "ik_det(v)");
    return narrow(det_extended(t_matrix(u, v, c)) / det_extended(inverse_h_matrix(u, v, c)));
}

complex ik_det_factorized(const RapiditySet& u, const RapiditySet& v, Coupling c) {
    require_square(u, v, "ik_det_factorized");
    if (u.empty()) return {1.0, 0.0};
    const complex prefactor = set_product(KernelKind::g, u, u, PairOrder::less, c) *
                              set_product(KernelKind::g, v, v, PairOrder::greater, c) *
                              set_product(KernelKind::h, u, v, PairOrder::all, c);
    return prefactor * narrow(det_extended(t_matrix(u, v, c)));
}

MepnoValue mepno_det(const RapiditySet& u, const RapiditySet& v, Coupling c, Kappa kappa) {
    require_square(u, v, "mepno_det");
    require_separated(u, c, "mepno_det(u)");
    require_separated(v, c, "mepno_det(v)");
    const std::size_t m = u.size();
    if (m == 0) return {complex{1.0, 0.0}, Route::D, u, v, c, kappa};
    const double scale = matrix_scale(u, v, c);
    const xcomplex ic = widen(c.ic());
    const xcomplex k = widen(kappa.value());

    // h(a,b)/h(b,a) = (a-b+ic)/(b-a+ic); the denominator vanishes only for
    // complex arguments.
    auto h_ratio = [&](complex a, complex b) {
        const xcomplex d = widen(a) - widen(b);
        if (dd::approx_abs(ic - d) < kKernelGuard * scale) throw SingularArgument("mepno_det: h pole");
        return (d + ic) / (ic - d);
    };

    XMatrix mat(m);
    for (std::size_t i = 0; i < m; ++i) {
        xcomplex dressing(dd::real(1.0));
        for (std::size_t j = 0; j < m; ++j) dressing = dressing * h_ratio(v[i], u[j]) / h_ratio(v[i], v[j]);
        for (std::size_t j = 0; j < m; ++j) {
            mat(i, j) = t_extended(v[i], u[j], c, scale) * dressing + k * t_extended(u[j], v[i], c, scale);
        }
    }
    const complex value = narrow(det_extended(std::move(mat)) / det_extended(inverse_h_matrix(u, v, c)));
    return {value, Route::D, u, v, c, kappa};
}

}  // namespace bethe

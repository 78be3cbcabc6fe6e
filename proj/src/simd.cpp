#include <bethe/errors.hpp>
#include <bethe/simd.hpp>

#include "double_double.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace bethe::simd {

namespace scalar {

ReciprocalSum reciprocal_product_sum(std::span<const double> shift, const double* rows,
                                     std::size_t stride, std::span<const double> w_re,
                                     std::span<const double> w_im) {
    const std::size_t count = w_re.size();
    dd::real acc_re, acc_im;
    double min_abs = std::numeric_limits<double>::infinity();
    for (std::size_t q = 0; q < count; ++q) {
        dd::real prod(1.0);
        for (std::size_t i = 0; i < shift.size(); ++i) {
            const dd::real d = dd::two_sum(shift[i], -rows[i * stride + q]);
            prod = prod * d;
            min_abs = std::min(min_abs, std::abs(d.hi));
        }
        const dd::real inv = dd::real(1.0) / prod;
        acc_re = acc_re + inv * dd::real(w_re[q]);
        acc_im = acc_im + inv * dd::real(w_im[q]);
    }
    return {{acc_re.hi, acc_im.hi}, {acc_re.lo, acc_im.lo}, min_abs};
}

void caxpy(std::complex<double> alpha, std::span<const std::complex<double>> x,
           std::span<std::complex<double>> y) {
    for (std::size_t k = 0; k < x.size(); ++k) y[k] += alpha * x[k];
}

std::complex<double> weighted_conj_dot(std::span<const double> w,
                                       std::span<const std::complex<double>> a,
                                       std::span<const std::complex<double>> b) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        const double ar = a[k].real(), ai = a[k].imag();
        const double br = b[k].real(), bi = b[k].imag();
        re += w[k] * (ar * br + ai * bi);
        im += w[k] * (ar * bi - ai * br);
    }
    return {re, im};
}

}  // namespace scalar

namespace {

bool cpu_has_avx2() noexcept {
#if defined(BETHE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend initial_backend() noexcept {
    if (const char* env = std::getenv("BETHE_SIMD"); env && std::string(env) == "scalar") {
        return Backend::scalar;
    }
    return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& backend_slot() noexcept {
    static std::atomic<Backend> slot{initial_backend()};
    return slot;
}

}  // namespace

bool backend_supported(Backend b) noexcept {
    return b == Backend::scalar || cpu_has_avx2();
}

Backend active_backend() noexcept { return backend_slot().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    if (!backend_supported(b)) {
        throw DomainError("simd: backend not supported on this CPU");
    }
    backend_slot().store(b, std::memory_order_relaxed);
}

std::string_view backend_name(Backend b) noexcept {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

ReciprocalSum reciprocal_product_sum(std::span<const double> shift, const double* rows,
                                     std::size_t stride, std::span<const double> w_re,
                                     std::span<const double> w_im) {
#if defined(BETHE_HAVE_AVX2)
    if (active_backend() == Backend::avx2) {
        return avx2::reciprocal_product_sum(shift, rows, stride, w_re, w_im);
    }
#endif
    return scalar::reciprocal_product_sum(shift, rows, stride, w_re, w_im);
}

void caxpy(std::complex<double> alpha, std::span<const std::complex<double>> x,
           std::span<std::complex<double>> y) {
#if defined(BETHE_HAVE_AVX2)
    if (active_backend() == Backend::avx2) {
        avx2::caxpy(alpha, x, y);
        return;
    }
#endif
    scalar::caxpy(alpha, x, y);
}

std::complex<double> weighted_conj_dot(std::span<const double> w,
                                       std::span<const std::complex<double>> a,
                                       std::span<const std::complex<double>> b) {
#if defined(BETHE_HAVE_AVX2)
    if (active_backend() == Backend::avx2) {
        return avx2::weighted_conj_dot(w, a, b);
    }
#endif
    return scalar::weighted_conj_dot(w, a, b);
}

}  // namespace bethe::simd

#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference in
// bethe::simd::scalar and, on x86-64 builds, an AVX2+FMA variant in
// bethe::simd::avx2. The unqualified entry points dispatch at runtime.
//
// Setting BETHE_SIMD=scalar in the environment pins the scalar path.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace bethe::simd {

enum class Backend { scalar, avx2 };

bool backend_supported(Backend b) noexcept;
Backend active_backend() noexcept;
/// Throws bethe::DomainError if the CPU cannot run `b`.
void set_backend(Backend b);
std::string_view backend_name(Backend b) noexcept;

struct ReciprocalSum {
    /// The sum is carried as sum + sum_lo, about 106 significant bits: the
    /// permutation sums cancel by up to ten decimal orders.
    std::complex<double> sum;
    std::complex<double> sum_lo;
    /// Smallest |shift_i - row_i[q]| seen, for singularity guards.
    double min_abs_factor;
};

// Kernels:
//   reciprocal_product_sum: sum_q (w_re[q] + i w_im[q]) / prod_i (shift[i] - rows[i*stride + q]),
//                           differences, products and the sum in double-double
//   caxpy:                  y[k] += alpha * x[k]
//   weighted_conj_dot:      sum_k w[k] * conj(a[k]) * b[k]

ReciprocalSum reciprocal_product_sum(std::span<const double> shift, const double* rows,
                                     std::size_t stride, std::span<const double> w_re,
                                     std::span<const double> w_im);
void caxpy(std::complex<double> alpha, std::span<const std::complex<double>> x,
           std::span<std::complex<double>> y);
std::complex<double> weighted_conj_dot(std::span<const double> w,
                                       std::span<const std::complex<double>> a,
                                       std::span<const std::complex<double>> b);

namespace scalar {
ReciprocalSum reciprocal_product_sum(std::span<const double> shift, const double* rows,
                                     std::size_t stride, std::span<const double> w_re,
                                     std::span<const double> w_im);
void caxpy(std::complex<double> alpha, std::span<const std::complex<double>> x,
           std::span<std::complex<double>> y);
std::complex<double> weighted_conj_dot(std::span<const double> w,
                                       std::span<const std::complex<double>> a,
                                       std::span<const std::complex<double>> b);
}  // namespace scalar

#if defined(BETHE_HAVE_AVX2)
namespace avx2 {
ReciprocalSum reciprocal_product_sum(std::span<const double> shift, const double* rows,
                                     std::size_t stride, std::span<const double> w_re,
                                     std::span<const double> w_im);
void caxpy(std::complex<double> alpha, std::span<const std::complex<double>> x,
           std::span<std::complex<double>> y);
std::complex<double> weighted_conj_dot(std::span<const double> w,
                                       std::span<const std::complex<double>> a,
                                       std::span<const std::complex<double>> b);
}  // namespace avx2
#endif

}  // namespace bethe::simd

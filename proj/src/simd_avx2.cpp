// Compiled with -mavx2 -mfma; only reached through the runtime dispatch in
// simd.cpp after a CPU feature check.

#include <bethe/simd.hpp>

#include "double_double.hpp"

#include <immintrin.h>

#include <cmath>
#include <limits>

namespace bethe::simd::avx2 {

namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline double hmin(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d m = _mm_min_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_min_sd(m, _mm_unpackhi_pd(m, m)));
}

// Four lanes of double-double, same operation sequence as bethe::dd.
struct vdd {
    __m256d hi;
    __m256d lo;
};

inline vdd two_sum(__m256d a, __m256d b) {
    const __m256d s = _mm256_add_pd(a, b);
    const __m256d bb = _mm256_sub_pd(s, a);
    const __m256d e = _mm256_add_pd(_mm256_sub_pd(a, _mm256_sub_pd(s, bb)), _mm256_sub_pd(b, bb));
    return {s, e};
}

inline vdd quick_two_sum(__m256d a, __m256d b) {
    const __m256d s = _mm256_add_pd(a, b);
    return {s, _mm256_sub_pd(b, _mm256_sub_pd(s, a))};
}

inline vdd add(vdd a, vdd b) {
    vdd s = two_sum(a.hi, b.hi);
    const vdd t = two_sum(a.lo, b.lo);
    s.lo = _mm256_add_pd(s.lo, t.hi);
    s = quick_two_sum(s.hi, s.lo);
    s.lo = _mm256_add_pd(s.lo, t.lo);
    return quick_two_sum(s.hi, s.lo);
}

inline vdd sub(vdd a, vdd b) {
    const __m256d sign = _mm256_set1_pd(-0.0);
    return add(a, {_mm256_xor_pd(b.hi, sign), _mm256_xor_pd(b.lo, sign)});
}

inline vdd mul(vdd a, vdd b) {
    const __m256d p = _mm256_mul_pd(a.hi, b.hi);
    __m256d e = _mm256_fmsub_pd(a.hi, b.hi, p);
    e = _mm256_add_pd(e, _mm256_add_pd(_mm256_mul_pd(a.hi, b.lo), _mm256_mul_pd(a.lo, b.hi)));
    return quick_two_sum(p, e);
}

inline vdd reciprocal(vdd b) {
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d q1 = _mm256_div_pd(one, b.hi);
    vdd r = sub({one, zero}, mul(b, {q1, zero}));
    const __m256d q2 = _mm256_div_pd(r.hi, b.hi);
    r = sub(r, mul(b, {q2, zero}));
    const __m256d q3 = _mm256_div_pd(r.hi, b.hi);
    return add(quick_two_sum(q1, q2), {q3, zero});
}

dd::real lane_sum(vdd v) {
    alignas(32) double hi[4], lo[4];
    _mm256_store_pd(hi, v.hi);
    _mm256_store_pd(lo, v.lo);
    dd::real s;
    for (int k = 0; k < 4; ++k) s = s + dd::real(hi[k], lo[k]);
    return s;
}

}  // namespace

ReciprocalSum reciprocal_product_sum(std::span<const double> shift, const double* rows,
                                     std::size_t stride, std::span<const double> w_re,
                                     std::span<const double> w_im) {
    const std::size_t count = w_re.size();
    const std::size_t m = shift.size();
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    const __m256d zero = _mm256_setzero_pd();
    vdd acc_re{zero, zero};
    vdd acc_im{zero, zero};
    __m256d min_abs = _mm256_set1_pd(std::numeric_limits<double>::infinity());

    std::size_t q = 0;
    for (; q + 4 <= count; q += 4) {
        vdd prod{_mm256_set1_pd(1.0), zero};
        for (std::size_t i = 0; i < m; ++i) {
            const vdd d = two_sum(_mm256_set1_pd(shift[i]),
                                  _mm256_xor_pd(_mm256_loadu_pd(rows + i * stride + q), sign_mask));
            prod = mul(prod, d);
            min_abs = _mm256_min_pd(min_abs, _mm256_andnot_pd(sign_mask, d.hi));
        }
        const vdd inv = reciprocal(prod);
        acc_re = add(acc_re, mul(inv, {_mm256_loadu_pd(w_re.data() + q), zero}));
        acc_im = add(acc_im, mul(inv, {_mm256_loadu_pd(w_im.data() + q), zero}));
    }

    dd::real re = lane_sum(acc_re);
    dd::real im = lane_sum(acc_im);
    double mn = hmin(min_abs);
    for (; q < count; ++q) {
        dd::real prod(1.0);
        for (std::size_t i = 0; i < m; ++i) {
            const dd::real d = dd::two_sum(shift[i], -rows[i * stride + q]);
            prod = prod * d;
            mn = std::min(mn, std::abs(d.hi));
        }
        const dd::real inv = dd::real(1.0) / prod;
        re = re + inv * dd::real(w_re[q]);
        im = im + inv * dd::real(w_im[q]);
    }
    return {{re.hi, im.hi}, {re.lo, im.lo}, mn};
}

void caxpy(std::complex<double> alpha, std::span<const std::complex<double>> x,
           std::span<std::complex<double>> y) {
    const std::size_t n = x.size();
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    const double* xp = reinterpret_cast<const double*>(x.data());
    double* yp = reinterpret_cast<double*>(y.data());

    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m256d xv = _mm256_loadu_pd(xp + 2 * k);
        const __m256d xs = _mm256_permute_pd(xv, 0b0101);  // (im, re) pairs
        // even lanes: ar*xr - ai*xi, odd lanes: ar*xi + ai*xr
        const __m256d prod = _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, xs));
        _mm256_storeu_pd(yp + 2 * k, _mm256_add_pd(_mm256_loadu_pd(yp + 2 * k), prod));
    }
    for (; k < n; ++k) y[k] += alpha * x[k];
}

std::complex<double> weighted_conj_dot(std::span<const double> w,
                                       std::span<const std::complex<double>> a,
                                       std::span<const std::complex<double>> b) {
    const std::size_t n = w.size();
    const double* ap = reinterpret_cast<const double*>(a.data());
    const double* bp = reinterpret_cast<const double*>(b.data());
    __m256d acc_direct = _mm256_setzero_pd();   // w*(ar*br, ai*bi)
    __m256d acc_crossed = _mm256_setzero_pd();  // w*(ar*bi, ai*br)

    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m256d wv = _mm256_set_pd(w[k + 1], w[k + 1], w[k], w[k]);
        const __m256d av = _mm256_mul_pd(wv, _mm256_loadu_pd(ap + 2 * k));
        const __m256d bv = _mm256_loadu_pd(bp + 2 * k);
        acc_direct = _mm256_fmadd_pd(av, bv, acc_direct);
        acc_crossed = _mm256_fmadd_pd(av, _mm256_permute_pd(bv, 0b0101), acc_crossed);
    }

    alignas(32) double crossed[4];
    _mm256_store_pd(crossed, acc_crossed);
    double re = hsum(acc_direct);
    double im = (crossed[0] - crossed[1]) + (crossed[2] - crossed[3]);
    for (; k < n; ++k) {
        const double ar = a[k].real(), ai = a[k].imag();
        const double br = b[k].real(), bi = b[k].imag();
        re += w[k] * (ar * br + ai * bi);
        im += w[k] * (ar * bi - ai * br);
    }
    return {re, im};
}

}  // namespace bethe::simd::avx2

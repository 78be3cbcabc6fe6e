#pragma once

// Unevaluated sums hi + lo of two doubles, about 106 significant bits.
// Only the operations the structured determinants need.

#include <cmath>
#include <complex>

namespace bethe::dd {

struct real {
    double hi = 0.0;
    double lo = 0.0;

    real() = default;
    real(double x) : hi(x) {}
    real(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

inline real two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline real quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline real two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline real operator+(real a, real b) {
    real s = two_sum(a.hi, b.hi);
    const real t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline real operator-(real a) { return {-a.hi, -a.lo}; }
inline real operator-(real a, real b) { return a + (-b); }

inline real operator*(real a, real b) {
    real p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline real operator/(real a, real b) {
    const double q1 = a.hi / b.hi;
    real r = a - b * real(q1);
    const double q2 = r.hi / b.hi;
    r = r - b * real(q2);
    const double q3 = r.hi / b.hi;
    return quick_two_sum(q1, q2) + real(q3);
}

inline bool is_zero(real a) { return a.hi == 0.0; }

struct complex {
    real re;
    real im;

    complex() = default;
    complex(real r, real i = real()) : re(r), im(i) {}
    explicit complex(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    std::complex<double> to_double() const { return {static_cast<double>(re), static_cast<double>(im)}; }
};

inline complex operator+(const complex& a, const complex& b) { return {a.re + b.re, a.im + b.im}; }
inline complex operator-(const complex& a, const complex& b) { return {a.re - b.re, a.im - b.im}; }
inline complex operator-(const complex& a) { return {-a.re, -a.im}; }

inline complex operator*(const complex& a, const complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// Rescaled by the larger component first, so |b|^2 cannot overflow.
inline complex operator/(const complex& a, const complex& b) {
    const double s = std::max(std::abs(b.re.hi), std::abs(b.im.hi));
    const real inv_s(1.0 / s);
    const complex bs{b.re * inv_s, b.im * inv_s};
    const real den = bs.re * bs.re + bs.im * bs.im;
    const complex num = a * complex{bs.re, -bs.im};
    return {num.re / den * inv_s, num.im / den * inv_s};
}

// Leading-order modulus, enough for choosing pivots and applying guards.
inline double approx_abs(const complex& z) { return std::hypot(z.re.hi, z.im.hi); }

inline bool is_zero(const complex& z) { return is_zero(z.re) && is_zero(z.im); }

}  // namespace bethe::dd

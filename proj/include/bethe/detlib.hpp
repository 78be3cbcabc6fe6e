#pragma once

// Dense complex determinants and the structured determinants built on the
// rational kernels: Cauchy, Izergin-Korepin, and the Slavnov-form matrix
// element of the particle number operator.

#include <bethe/kernels.hpp>

#include <cstddef>
#include <initializer_list>
#include <string_view>
#include <vector>

namespace bethe {

inline constexpr std::size_t kMaxDeterminantSize = 64;

/// Square complex matrix, row-major.
class ComplexMatrix {
public:
    explicit ComplexMatrix(std::size_t n);
    ComplexMatrix(std::size_t n, std::vector<complex> row_major);
    ComplexMatrix(std::initializer_list<std::initializer_list<complex>> rows);

    std::size_t size() const noexcept { return n_; }
    complex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const complex& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    std::span<complex> row(std::size_t i) { return {a_.data() + i * n_, n_}; }
    std::span<const complex> row(std::size_t i) const { return {a_.data() + i * n_, n_}; }

private:
    std::size_t n_;
    std::vector<complex> a_;
};

/// Twist / counting parameter kappa of O_kappa.
class Kappa {
public:
    constexpr Kappa() = default;
    constexpr explicit Kappa(complex k) : k_(k) {}
    constexpr complex value() const noexcept { return k_; }

private:
    complex k_{1.0, 0.0};
};

enum class Route { A, B, C, D, integral };

std::string_view route_name(Route r) noexcept;
/// Parses "A".."D" or "integral" (case-insensitive); throws DomainError otherwise.
Route parse_route(std::string_view text);

/// A matrix element <psi(u)| O_kappa |psi(v)> with the route that produced it.
struct MepnoValue {
    complex value;
    Route route;
    RapiditySet u;
    RapiditySet v;
    Coupling c;
    Kappa kappa;
};

/// Determinant by LU elimination with partial pivoting on modulus. A
/// singular matrix gives 0. The 0x0 determinant is 1.
complex det_complex(ComplexMatrix m);

/// det[1/h(u_i, v_j)] by elimination.
complex cauchy_det(const RapiditySet& u, const RapiditySet& v, Coupling c);
/// Same determinant from the product formula 1 / (g^<(u,u) g^>(v,v) h(u,v)).
complex cauchy_det_factorized(const RapiditySet& u, const RapiditySet& v, Coupling c);

/// K_n(u|v) = det[t(u_i,v_j)] / det[1/h(u_i,v_j)]. Empty sets give 1.
complex ik_det(const RapiditySet& u, const RapiditySet& v, Coupling c);
/// K_n(u|v) = g^<(u,u) g^>(v,v) h(u,v) det[t(u_i,v_j)].
complex ik_det_factorized(const RapiditySet& u, const RapiditySet& v, Coupling c);

/// Slavnov-form determinant for the particle-number matrix element:
///   det^{-1}[1/h(u_i,v_j)] *
///   det[ t(v_i,u_j) h(v_i,u)/h(u,v_i) h(v,v_i)/h(v_i,v) + kappa t(u_j,v_i) ].
MepnoValue mepno_det(const RapiditySet& u, const RapiditySet& v, Coupling c, Kappa kappa);

/// Throws SingularArgument if two elements of `a` are closer than the kernel guard.
void require_separated(std::span<const complex> a, Coupling c, const char* what);

}  // namespace bethe

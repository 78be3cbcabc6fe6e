#pragma once

// Independent evaluators for the summed identities behind the determinant
// formulas: permutation double sums (Gaudin's lemma), the bipartition
// resummation lemma, three pre-determinant routes to the particle-number
// matrix element, and a damped position-space quadrature of the same
// matrix element.
//
// Route conventions for S(u|v) = <psi(u)| O_kappa |psi(v)>:
//   A  sum_n kappa^n (-1)^{M-n} sum_{P,Q} (ic)^M conj(F(P.u)) F(Q.v) / prod_i [P.u - Q.v}^n_i
//   B  sum over bipartitions of both sets of
//        kappa^{#I} f(v_I,v_II) K(u_I|v_I) K(v_II|u_II) f(u_II,u_I)
//   C  sum over bipartitions of v of
//        (-kappa)^{#I} f(v_I,v_II) f(u,v_I) K_M({v_I - ic, v_II}|u)
//   D  mepno_det (detlib)

#include <bethe/detlib.hpp>

#include <span>
#include <vector>

namespace bethe {

/// Relative threshold on partial sums [P.u - Q.v}^n_i in permutation sums.
inline constexpr double kPermutationSumGuard = 1e-8;

inline constexpr std::size_t kMaxGaudinSize = 6;
inline constexpr std::size_t kMaxRouteASize = 5;
inline constexpr std::size_t kMaxRouteBSize = 8;
inline constexpr std::size_t kMaxRouteCSize = 10;
inline constexpr std::size_t kMaxLemma2Size = 6;

/// sum_{P,Q} conj(F(P.u)) F(Q.v) (ic)^M / prod_{i=1}^M [P.u - Q.v}^M_i. Real sets only.
complex gaudin_sum(const RapiditySet& u, const RapiditySet& v, Coupling c);

/// sum_{P,Q} conj(F(P.u)) F(Q.v) / prod_i [P.u - Q.v}^n_i, without the (ic)^M factor.
/// Real sets, #u == #v <= 6; empty sets give 1.
complex shifted_permutation_sum(const RapiditySet& u, const RapiditySet& v, Coupling c, int n);

struct Lemma2Sides {
    complex lhs;
    complex rhs;
};

/// lhs = sum over gamma => {gamma_I, gamma_II}, #gamma_I = #alpha, of
///       K(gamma_I|alpha) K(beta|gamma_II) f(gamma_II, gamma_I)
/// rhs = (-1)^{#alpha} f(gamma, alpha) K({alpha - ic, beta}|gamma)
Lemma2Sides lemma2_sides(const RapiditySet& gamma, const RapiditySet& alpha,
                         const RapiditySet& beta, Coupling c);

MepnoValue mepno_route_a(const RapiditySet& u, const RapiditySet& v, Coupling c, Kappa kappa);
MepnoValue mepno_route_b(const RapiditySet& u, const RapiditySet& v, Coupling c, Kappa kappa);
MepnoValue mepno_route_c(const RapiditySet& u, const RapiditySet& v, Coupling c, Kappa kappa);

/// Route A with (P, Q) pairs grouped by the bipartitions they induce: each
/// group factorizes into a product of two smaller permutation sums, one with
/// prefix partial sums and one with suffix partial sums.
complex mepno_route_a_resummed(const RapiditySet& u, const RapiditySet& v, Coupling c,
                               Kappa kappa);

/// Evaluate any route by tag. Route::integral uses fine_damping_schedule().
MepnoValue mepno_route(Route route, const RapiditySet& u, const RapiditySet& v, Coupling c,
                       Kappa kappa);

// -- damped position-space quadrature --------------------------------------

/// Relative damping rates, in units of the smallest decay frequency.
std::vector<double> default_damping_schedule();

/// Six halvings from 0.2. Three points leave errors of a few 1e-2 at M = 2,
/// where large (P, Q) terms cancel; six bring both M = 1 and M = 2 below 1e-6.
std::vector<double> fine_damping_schedule();

/// Smallest |[P.u}^n_j - [Q.v}^n_j| / w_j over all n, P, Q, j, where w_j is
/// the damping weight y_j picks up from sum|x_i|: the radius of analyticity
/// of the damped integral in eta.
double damping_frequency_floor(const RapiditySet& u, const RapiditySet& v);

/// c^M sum_n kappa^n int_{R_-^n x R_+^{M-n}} dy conj(psi_u(x)) psi_v(x) exp(-eta sum|x_j|),
/// x = {y]^n, evaluated by tensor Gauss-Kronrod quadrature at an absolute damping rate eta.
/// The plane-wave factors make the tensor sum separable, so it is accumulated one
/// dimension at a time per (P, Q) pair.
complex mepno_damped_integral(const RapiditySet& u, const RapiditySet& v, Coupling c,
                              Kappa kappa, double eta);

/// The damped integral at eta_k = schedule_k * damping_frequency_floor, extrapolated
/// to eta -> 0. M in {1, 2}.
MepnoValue mepno_integral_oracle(const RapiditySet& u, const RapiditySet& v, Coupling c,
                                 Kappa kappa, std::span<const double> damping_schedule);

// -- scalar-product pole --------------------------------------------------

struct ResidueProbe {
    complex at_eps;
    complex at_half_eps;
};

/// (sum(u - v)) K_M(u|v) with v = v0 + s e_1 and s chosen so sum(u - v) is
/// eps, then eps/2.
ResidueProbe residue_probe(const RapiditySet& u, const RapiditySet& v0, double eps, Coupling c);

}  // namespace bethe

#pragma once

// Coordinate Bethe ansatz eigenfunctions of the delta-Bose gas
//
//   -sum_j d^2/dx_j^2 psi + 2c sum_{i<j} delta(x_i - x_j) psi = E psi
//
// On the ordered sector x_1 < ... < x_M the eigenfunction is the plane-wave
// superposition sum_P F(P.u) exp(i (x, P.u)); elsewhere it follows from
// bosonic symmetry.

#include <bethe/kernels.hpp>

#include <vector>

namespace bethe {

inline constexpr std::size_t kMaxWavefunctionSize = 7;

class BetheState {
public:
    BetheState(RapiditySet rapidities, Coupling c);

    const RapiditySet& rapidities() const noexcept { return rapidities_; }
    Coupling coupling() const noexcept { return c_; }
    std::size_t size() const noexcept { return rapidities_.size(); }

    /// Global prefactor c^{M/2} of the state. Not applied by psi_*; the
    /// matrix-element code uses its square c^M.
    complex normalization() const;

    /// Orderings P.u of S_M in lexicographic order of P, with amplitudes
    /// F(P.u). Throws SizeLimit for M > 7.
    const std::vector<Permutation>& permutations() const;
    std::span<const complex> amplitudes() const;
    /// Element k of P.u for the p-th permutation: ordered_rapidities()[p * M + k].
    std::span<const complex> ordered_rapidities() const;

private:
    void require_tables() const;

    RapiditySet rapidities_;
    Coupling c_;
    std::vector<Permutation> perms_;
    std::vector<complex> amplitudes_;
    std::vector<complex> ordered_;
};

/// psi on the fundamental sector; x must be strictly increasing.
complex psi_fundamental(std::span<const double> x, const BetheState& state);

/// psi anywhere off the coincidence planes, using the sector formula
/// psi|_{D_Q}(x) = sum_P F((Q^{-1}P).u) exp(i (x, P.u)) with x in D_Q.
complex psi_symmetric(std::span<const double> x, const BetheState& state);

/// [d psi/d x_{i+1} - d psi/d x_i] - c psi at a point with x_i == x_{i+1},
/// taken as the limit from inside the ordered sector. Zero for a Bethe state.
/// `i` is 0-based.
complex cusp_residual(std::span<const double> x, const BetheState& state, std::size_t i);

/// E = sum_i u_i^2.
complex energy(const BetheState& state);

}  // namespace bethe

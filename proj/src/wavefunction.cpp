#include <bethe/wavefunction.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bethe {

BetheState::BetheState(RapiditySet rapidities, Coupling c)
    : rapidities_(std::move(rapidities)), c_(c) {
    const std::size_t m = rapidities_.size();
    if (m == 0 || m > kMaxWavefunctionSize) return;
    for (const auto& p : enumerate_permutations(static_cast<int>(m))) {
        auto ordered = apply_permutation(p, rapidities_);
        amplitudes_.push_back(big_f(ordered, c_));
        ordered_.insert(ordered_.end(), ordered.begin(), ordered.end());
        perms_.push_back(p);
    }
}

complex BetheState::normalization() const {
    return std::pow(complex(c_.value(), 0.0), 0.5 * static_cast<double>(size()));
}

void BetheState::require_tables() const {
    if (size() == 0) throw DomainError("BetheState: empty rapidity set");
    if (size() > kMaxWavefunctionSize) throw SizeLimit("BetheState: M > 7");
}

const std::vector<Permutation>& BetheState::permutations() const {
    require_tables();
    return perms_;
}

std::span<const complex> BetheState::amplitudes() const {
    require_tables();
    return amplitudes_;
}

std::span<const complex> BetheState::ordered_rapidities() const {
    require_tables();
    return ordered_;
}

namespace {

void require_length(std::span<const double> x, const BetheState& s) {
    if (x.size() != s.size()) throw LengthMismatch("psi: #x != #u");
}

complex plane_wave(std::span<const double> x, std::span<const complex> k) {
    complex phase{};
    for (std::size_t j = 0; j < x.size(); ++j) phase += x[j] * k[j];
    return std::exp(complex(0.0, 1.0) * phase);
}

}  // namespace

complex psi_fundamental(std::span<const double> x, const BetheState& state) {
    require_length(x, state);
    if (!std::is_sorted(x.begin(), x.end()) ||
        std::adjacent_find(x.begin(), x.end()) != x.end()) {
        throw DomainError("psi_fundamental: x must be strictly increasing");
    }
    const auto amp = state.amplitudes();
    const auto ordered = state.ordered_rapidities();
    const std::size_t m = state.size();
    complex acc{};
    for (std::size_t p = 0; p < amp.size(); ++p) {
        acc += amp[p] * plane_wave(x, ordered.subspan(p * m, m));
    }
    return acc;
}

complex psi_symmetric(std::span<const double> x, const BetheState& state) {
    require_length(x, state);
    const std::size_t m = state.size();
    // Q(i) is the index of the i-th smallest coordinate, so x lies in D_Q.
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return x[a] < x[b]; });
    for (std::size_t i = 0; i + 1 < m; ++i) {
        if (x[order[i]] == x[order[i + 1]]) throw DomainError("psi_symmetric: coincident coordinates");
    }
    const Permutation q_inv = Permutation(order).inverse();
    const Coupling c = state.coupling();
    complex acc{};
    for (const auto& p : state.permutations()) {
        const auto pu = apply_permutation(p, state.rapidities());
        const auto qpu = apply_permutation(q_inv * p, state.rapidities());
        acc += big_f(qpu, c) * plane_wave(x, pu);
    }
    return acc;
}

complex cusp_residual(std::span<const double> x, const BetheState& state, std::size_t i) {
    require_length(x, state);
    const std::size_t m = state.size();
    if (i + 1 >= m) throw DomainError("cusp_residual: pair index out of range");
    for (std::size_t j = 0; j + 1 < m; ++j) {
        const bool ok = (j == i) ? x[j] == x[j + 1] : x[j] < x[j + 1];
        if (!ok) throw DomainError("cusp_residual: need x_i == x_{i+1} and strict order elsewhere");
    }
    const auto amp = state.amplitudes();
    const auto ordered = state.ordered_rapidities();
    const double c = state.coupling().value();
    complex acc{};
    for (std::size_t p = 0; p < amp.size(); ++p) {
        const auto k = ordered.subspan(p * m, m);
        // d/dx_j of exp(i (x, k)) is i k_j exp(i (x, k)).
        const complex jump = complex(0.0, 1.0) * (k[i + 1] - k[i]) - c;
        acc += amp[p] * jump * plane_wave(x, k);
    }
    return acc;
}

complex energy(const BetheState& state) {
    complex e{};
    for (const auto& u : state.rapidities()) e += u * u;
    return e;
}

}  // namespace bethe

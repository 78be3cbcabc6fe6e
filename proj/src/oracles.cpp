#include <bethe/oracles.hpp>
#include <bethe/simd.hpp>

#include "double_double.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bethe {

namespace {

void require_real_pair(const RapiditySet& u, const RapiditySet& v, const char* what) {
    if (u.size() != v.size()) throw LengthMismatch(std::string(what) + ": #u != #v");
    if (!u.is_real() || !v.is_real()) {
        throw DomainError(std::string(what) + ": conjugated amplitudes need real rapidities");
    }
}

double set_scale(const RapiditySet& u, const RapiditySet& v, Coupling c) {
    return std::max({1.0, std::abs(c.value()), u.max_abs(), v.max_abs()});
}

complex ipow(complex z, std::size_t n) {
    complex r{1.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) r *= z;
    return r;
}

// Per-ordering data for one rapidity set: amplitude and [P.u}^n, laid out
// so that the Q side forms the row-major SoA block the SIMD kernel expects.
struct OrderingTable {
    std::vector<complex> amplitude;  // F(P.u) per permutation
    std::vector<double> shifted;     // row i holds [P.u}^n_i for all P
    std::size_t count = 0;
};

OrderingTable ordering_table(const RapiditySet& u, Coupling c, int n) {
    const std::size_t m = u.size();
    OrderingTable t;
    t.count = factorial(static_cast<int>(m));
    t.shifted.resize(m * t.count);
    std::size_t p = 0;
    for (const auto& perm : enumerate_permutations(static_cast<int>(m))) {
        const auto ordered = apply_permutation(perm, u);
        t.amplitude.push_back(big_f(ordered, c));
        std::vector<double> re(m);
        for (std::size_t k = 0; k < m; ++k) re[k] = ordered[k].real();
        const auto partial = shifted_set<double>(re, n, ShiftSide::rapidity);
        for (std::size_t i = 0; i < m; ++i) t.shifted[i * t.count + p] = partial[i];
        ++p;
    }
    return t;
}

// The sum in double-double. Single terms can exceed the total by six orders
// and their absolute values add up to 1e10 times it, so every term and the
// running total keep about 106 bits.
dd::complex permutation_sum(const RapiditySet& u, const RapiditySet& v, Coupling c, int n) {
    const std::size_t m = u.size();
    if (m == 0) return dd::complex(dd::real(1.0));

    // [P.u - Q.v}^n = [P.u}^n - [Q.v}^n by linearity of the shift.
    const OrderingTable left = ordering_table(u, c, n);
    const OrderingTable right = ordering_table(v, c, n);
    std::vector<double> w_re(right.count), w_im(right.count);
    for (std::size_t q = 0; q < right.count; ++q) {
        w_re[q] = right.amplitude[q].real();
        w_im[q] = right.amplitude[q].imag();
    }

    const double threshold = kPermutationSumGuard * set_scale(u, v, c);
    std::vector<double> shift(m);
    dd::complex total;
    for (std::size_t p = 0; p < left.count; ++p) {
        for (std::size_t i = 0; i < m; ++i) shift[i] = left.shifted[i * left.count + p];
        const auto r = simd::reciprocal_product_sum(shift, right.shifted.data(), right.count, w_re, w_im);
        if (!(r.min_abs_factor >= threshold)) {
            throw SingularArgument("permutation sum: vanishing partial sum [P.u - Q.v}");
        }
        const dd::complex inner{dd::real(r.sum.real(), r.sum_lo.real()), dd::real(r.sum.imag(), r.sum_lo.imag())};
        total = total + dd::complex(std::conj(left.amplitude[p])) * inner;
    }
    return total;
}

}  // namespace

complex shifted_permutation_sum(const RapiditySet& u, const RapiditySet& v, Coupling c, int n) {
    require_real_pair(u, v, "shifted_permutation_sum");
    if (u.size() > kMaxGaudinSize) throw SizeLimit("shifted_permutation_sum: M > 6");
    return permutation_sum(u, v, c, n).to_double();
}

complex gaudin_sum(const RapiditySet& u, const RapiditySet& v, Coupling c) {
    require_real_pair(u, v, "gaudin_sum");
    if (u.size() > kMaxGaudinSize) throw SizeLimit("gaudin_sum: M > 6");
    const int m = static_cast<int>(u.size());
    return ipow(c.ic(), u.size()) * shifted_permutation_sum(u, v, c, m);
}

Lemma2Sides lemma2_sides(const RapiditySet& gamma, const RapiditySet& alpha,
                         const RapiditySet& beta, Coupling c) {
    const std::size_t m1 = alpha.size();
    const std::size_t m2 = beta.size();
    if (gamma.size() != m1 + m2) throw LengthMismatch("lemma2_sides: #gamma != #alpha + #beta");
    if (gamma.size() > kMaxLemma2Size) throw SizeLimit("lemma2_sides: m1 + m2 > 6");

    complex lhs{};
    for (const auto& bp : enumerate_bipartitions(static_cast<int>(gamma.size()), static_cast<int>(m1))) {
        const RapiditySet g1 = gamma.subset(bp.part_one);
        const RapiditySet g2 = gamma.subset(bp.part_two);
        lhs += ik_det(g1, alpha, c) * ik_det(beta, g2, c) *
               set_product(KernelKind::f, g2.values(), g1.values(), PairOrder::all, c);
    }

    std::vector<complex> shifted;
    shifted.reserve(m1 + m2);
    for (const auto& a : alpha) shifted.push_back(a - c.ic());
    shifted.insert(shifted.end(), beta.begin(), beta.end());
    const double sign = (m1 % 2 == 0) ? 1.0 : -1.0;
    const complex rhs = sign * set_product(KernelKind::f, gamma.values(), alpha.values(), PairOrder::all, c) *
                        ik_det(RapiditySet(std::move(shifted)), gamma, c);
    return {lhs, rhs};
}

MepnoValue mepno_route_a(const RapiditySet& u, const RapiditySet& v, Coupling c, Kappa kappa) {
    require_real_pair(u, v, "mepno_route_a");
    const std::size_t m = u.size();
    if (m > kMaxRouteASize) throw SizeLimit("mepno_route_a: M > 5");
    // The levels cancel against each other as well, so they are combined in
    // double-double too.
    const dd::complex k(kappa.value());
    dd::complex total;
    dd::complex kappa_n(dd::real(1.0));
    for (std::size_t n = 0; n <= m; ++n) {
        const dd::complex level = permutation_sum(u, v, c, static_cast<int>(n));
        total = (m - n) % 2 == 0 ? total + kappa_n * level : total - kappa_n * level;
        kappa_n = kappa_n * k;
    }
    return {ipow(c.ic(), m) * total.to_double(), Route::A, u, v, c, kappa};
}

complex mepno_route_a_resummed(const RapiditySet& u, const RapiditySet& v, Coupling c,
                               Kappa kappa) {
    require_real_pair(u, v, "mepno_route_a_resummed");
    const std::size_t m = u.size();
    if (m > kMaxRouteASize) throw SizeLimit("mepno_route_a_resummed: M > 5");
    const int mi = static_cast<int>(m);
    complex total{};
    complex kappa_n{1.0, 0.0};
    for (int n = 0; n <= mi; ++n) {
        const double sign = ((mi - n) % 2 == 0) ? 1.0 : -1.0;
        complex level{};
        for (const auto& bu : enumerate_bipartitions(mi, n)) {
            const RapiditySet u1 = u.subset(bu.part_one);
            const RapiditySet u2 = u.subset(bu.part_two);
            const complex fu = std::conj(set_product(KernelKind::f, u1.values(), u2.values(), PairOrder::all, c));
            for (const auto& bv : enumerate_bipartitions(mi, n)) {
                const RapiditySet v1 = v.subset(bv.part_one);
                const RapiditySet v2 = v.subset(bv.part_two);
                const complex fv = set_product(KernelKind::f, v1.values(), v2.values(), PairOrder::all, c);
                // Block I keeps prefix partial sums, block II only suffix sums.
                level += fu * fv * shifted_permutation_sum(u1, v1, c, n) *
                         shifted_permutation_sum(u2, v2, c, 0);
            }
        }
        total += kappa_n * sign * level;
        kappa_n *= kappa.value();
    }
    return ipow(c.ic(), m) * total;
}

MepnoValue mepno_route_b(const RapiditySet& u, const RapiditySet& v, Coupling c, Kappa kappa) {
    if (u.size() != v.size()) throw LengthMismatch("mepno_route_b: #u != #v");
    const std::size_t m = u.size();
    if (m > kMaxRouteBSize) throw SizeLimit("mepno_route_b: M > 8");
    const int mi = static_cast<int>(m);

    struct Block {
        RapiditySet one, two;
        complex cross;
    };
    complex total{};
    complex kappa_n{1.0, 0.0};
    for (int n = 0; n <= mi; ++n) {
        std::vector<Block> ublocks, vblocks;
        for (const auto& bp : enumerate_bipartitions(mi, n)) {
            Block bu{u.subset(bp.part_one), u.subset(bp.part_two), {}};
            bu.cross = set_product(KernelKind::f, bu.two.values(), bu.one.values(), PairOrder::all, c);
            ublocks.push_back(std::move(bu));
            Block bv{v.subset(bp.part_one), v.subset(bp.part_two), {}};
            bv.cross = set_product(KernelKind::f, bv.one.values(), bv.two.values(), PairOrder::all, c);
            vblocks.push_back(std::move(bv));
        }
        complex level{};
        for (const auto& bv : vblocks) {
            for (const auto& bu : ublocks) {
                level += bv.cross * ik_det(bu.one, bv.one, c) * ik_det(bv.two, bu.two, c) * bu.cross;
            }
        }
        total += kappa_n * level;
        kappa_n *= kappa.value();
    }
    return {total, Route::B, u, v, c, kappa};
}

MepnoValue mepno_route_c(const RapiditySet& u, const RapiditySet& v, Coupling c, Kappa kappa) {
    if (u.size() != v.size()) throw LengthMismatch("mepno_route_c: #u != #v");
    const std::size_t m = u.size();
    if (m > kMaxRouteCSize) throw SizeLimit("mepno_route_c: M > 10");
    const int mi = static_cast<int>(m);
    complex total{};
    complex minus_kappa_n{1.0, 0.0};
    for (int n = 0; n <= mi; ++n) {
        complex level{};
        for (const auto& bp : enumerate_bipartitions(mi, n)) {
            const RapiditySet v1 = v.subset(bp.part_one);
            const RapiditySet v2 = v.subset(bp.part_two);
            // Shift operator D^{-1} on block I, realized by substitution v -> v - ic.
            std::vector<complex> shifted(v.begin(), v.end());
            for (int i : bp.part_one) shifted[static_cast<std::size_t>(i)] -= c.ic();
            level += set_product(KernelKind::f, v1.values(), v2.values(), PairOrder::all, c) *
                     set_product(KernelKind::f, u.values(), v1.values(), PairOrder::all, c) *
                     ik_det(RapiditySet(std::move(shifted)), u, c);
        }
        total += minus_kappa_n * level;
        minus_kappa_n *= -kappa.value();
    }
    return {total, Route::C, u, v, c, kappa};
}

MepnoValue mepno_route(Route route, const RapiditySet& u, const RapiditySet& v, Coupling c,
                       Kappa kappa) {
    switch (route) {
        case Route::A: return mepno_route_a(u, v, c, kappa);
        case Route::B: return mepno_route_b(u, v, c, kappa);
        case Route::C: return mepno_route_c(u, v, c, kappa);
        case Route::D: return mepno_det(u, v, c, kappa);
        case Route::integral: {
            const auto schedule = fine_damping_schedule();
            return mepno_integral_oracle(u, v, c, kappa, schedule);
        }
    }
    throw DomainError("mepno_route: unknown route");
}

ResidueProbe residue_probe(const RapiditySet& u, const RapiditySet& v0, double eps, Coupling c) {
    if (u.size() != v0.size()) throw LengthMismatch("residue_probe: #u != #v0");
    if (u.empty()) throw DomainError("residue_probe: empty sets");
    if (!(eps > 0.0)) throw DomainError("residue_probe: eps must be positive");
    auto product_at = [&](double target) {
        std::vector<complex> v(v0.begin(), v0.end());
        // sum(u - v) = target after moving v_1 alone.
        v[0] += (u.sum() - v0.sum()) - target;
        const RapiditySet shifted(std::move(v));
        return (u.sum() - shifted.sum()) * ik_det(u, shifted, c);
    };
    return {product_at(eps), product_at(0.5 * eps)};
}

}  // namespace bethe

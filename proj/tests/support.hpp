#pragma once

#include <bethe/kernels.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace support {

using bethe::complex;

inline double rel(complex a, complex b) {
    const double d = std::abs(a - b);
    return d == 0.0 ? 0.0 : d / std::max({std::abs(a), std::abs(b), 1e-300});
}

// n reals in [lo, hi] with pairwise gaps at least `gap`.
inline std::vector<double> spread_reals(std::mt19937_64& rng, std::size_t n, double lo = -2.0,
                                        double hi = 2.0, double gap = 0.1) {
    std::uniform_real_distribution<double> d(lo, hi);
    for (;;) {
        std::vector<double> x(n);
        for (auto& xi : x) xi = d(rng);
        auto s = x;
        std::sort(s.begin(), s.end());
        bool ok = true;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) ok = ok && s[i + 1] - s[i] >= gap;
        if (ok) return x;
    }
}

// Two disjoint, well separated real sets of size n.
inline std::pair<bethe::RapiditySet, bethe::RapiditySet> real_pair(std::mt19937_64& rng, std::size_t n,
                                                                    double lo = -2.0, double hi = 2.0) {
    const auto all = spread_reals(rng, 2 * n, lo, hi, 0.1);
    const std::span<const double> view(all);
    return {bethe::RapiditySet::from_real(view.first(n)), bethe::RapiditySet::from_real(view.subspan(n))};
}

// Laplace expansion along the first row.
inline complex cofactor_det(const std::vector<std::vector<complex>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1.0;
    if (n == 1) return a[0][0];
    complex total{};
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<complex>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<complex> row;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j) row.push_back(a[i][k]);
            }
            minor.push_back(row);
        }
        total += (j % 2 ? -1.0 : 1.0) * a[0][j] * cofactor_det(minor);
    }
    return total;
}

}  // namespace support

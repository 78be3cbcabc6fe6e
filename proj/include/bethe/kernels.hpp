#pragma once

// Rational kernels f, g, h, t of the rational (XXX-type) R-matrix family,
// set products over them, shifted sets, and the permutation / bipartition
// combinatorics that every summed identity in the library runs over.

#include <bethe/errors.hpp>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace bethe {

using complex = std::complex<double>;

/// Relative threshold below which a kernel denominator is treated as a pole.
inline constexpr double kKernelGuard = 1e-10;

/// Interaction strength c of the delta-Bose gas. Nonzero and finite.
class Coupling {
public:
    explicit Coupling(double c);

    double value() const noexcept { return c_; }
    /// The combination i*c that every kernel is built from.
    complex ic() const noexcept { return {0.0, c_}; }

private:
    double c_;
};

/// Ordered list of rapidities. Elements are pairwise distinct; an empty set
/// is allowed so that partition blocks can be represented.
class RapiditySet {
public:
    RapiditySet() = default;
    explicit RapiditySet(std::vector<complex> values);
    RapiditySet(std::initializer_list<complex> values);

    static RapiditySet from_real(std::span<const double> values);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    const complex& operator[](std::size_t i) const { return values_[i]; }
    std::span<const complex> values() const noexcept { return values_; }
    operator std::span<const complex>() const noexcept { return values_; }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    bool is_real() const noexcept;
    double max_abs() const noexcept;
    complex sum() const noexcept;

    /// Elements at the given (increasing) indices, keeping parent order.
    RapiditySet subset(std::span<const int> indices) const;

    friend bool operator==(const RapiditySet&, const RapiditySet&) = default;

private:
    std::vector<complex> values_;
};

/// Real coordinates x_1..x_M of M particles.
class PositionSet {
public:
    PositionSet() = default;
    explicit PositionSet(std::vector<double> values);
    PositionSet(std::initializer_list<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }
    operator std::span<const double>() const noexcept { return values_; }

    bool strictly_increasing() const noexcept;

private:
    std::vector<double> values_;
};

/// Element of S_n stored as its 0-based image list: i -> images()[i].
///
/// Acting on an ordered set, P moves the element at position i to position
/// P(i), so element i of P.a is a[P^{-1}(i)]. With this action
/// Q.(P.a) == (Q*P).a where (Q*P)(i) = Q(P(i)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(std::size_t n);
    /// Reversal i -> n-1-i.
    static Permutation mirror(std::size_t n);
    /// Exchange of adjacent positions j and j+1.
    static Permutation adjacent_transposition(std::size_t n, std::size_t j);
    /// From a 1-based image list such as {2, 3, 1}.
    static Permutation from_one_based(std::initializer_list<int> images);

    std::size_t size() const noexcept { return images_.size(); }
    int operator()(std::size_t i) const { return images_[i]; }
    std::span<const int> images() const noexcept { return images_; }

    Permutation inverse() const;

    friend Permutation operator*(const Permutation& q, const Permutation& p);
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

template <class T>
std::vector<T> apply_permutation(const Permutation& p, std::span<const T> a) {
    if (p.size() != a.size()) {
        throw LengthMismatch("apply_permutation: permutation and set sizes differ");
    }
    std::vector<T> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[static_cast<std::size_t>(p(i))] = a[i];
    }
    return out;
}

inline std::vector<complex> apply_permutation(const Permutation& p, const RapiditySet& a) {
    return apply_permutation<complex>(p, a.values());
}

/// Split of {0..M-1} into two strictly increasing index lists. The
/// increasing order is the normal ordering of each block.
struct Bipartition {
    std::vector<int> part_one;
    std::vector<int> part_two;
    int total = 0;
};

enum class KernelKind { f, g, h, t };
enum class PairOrder { all, less, greater };
enum class ShiftSide { position, rapidity };

/// f = 1 + ic/(u-v), g = ic/(u-v), h = (u-v+ic)/ic, t = g/h.
complex kernel(KernelKind kind, complex u, complex v, Coupling c);

/// Product of kernel(kind, a_i, b_j) over all pairs, or over i<j / i>j.
complex set_product(KernelKind kind, std::span<const complex> a, std::span<const complex> b,
                    PairOrder order, Coupling c);

/// F(u) = prod_{i<j} f(u_i, u_j), the Bethe amplitude of the ordering u.
complex big_f(std::span<const complex> u, Coupling c);

complex set_inner(std::span<const complex> x, std::span<const complex> u);
double set_inner(std::span<const double> x, std::span<const double> u);

/// Position side {x]^n: element i is sum_{j=i}^{n} x_j for i <= n, sum_{j=n+1}^{i} x_j
/// otherwise. Rapidity side [u}^n: element i is sum_{j<=i} u_j for i <= n,
/// sum_{j>=i} u_j otherwise (1-based in the formulas, 0-based in storage).
template <class T>
std::vector<T> shifted_set(std::span<const T> values, int n, ShiftSide side) {
    const int m = static_cast<int>(values.size());
    if (n < 0 || n > m) {
        throw IndexError("shifted_set: n outside [0, length]");
    }
    std::vector<T> out(values.size(), T{});
    if (side == ShiftSide::position) {
        T acc{};
        for (int i = n - 1; i >= 0; --i) {
            acc += values[i];
            out[i] = acc;
        }
        acc = T{};
        for (int i = n; i < m; ++i) {
            acc += values[i];
            out[i] = acc;
        }
    } else {
        T acc{};
        for (int i = 0; i < n; ++i) {
            acc += values[i];
            out[i] = acc;
        }
        acc = T{};
        for (int i = m - 1; i >= n; --i) {
            acc += values[i];
            out[i] = acc;
        }
    }
    return out;
}

/// Lexicographic enumeration of S_n by image list.
class PermutationStream {
public:
    struct sentinel {};

    class iterator {
    public:
        using value_type = Permutation;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(std::size_t n);

        const Permutation& operator*() const noexcept { return current_; }
        const Permutation* operator->() const noexcept { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& it, sentinel) noexcept { return it.done_; }

    private:
        std::vector<int> images_;
        Permutation current_;
        bool done_ = true;
    };

    explicit PermutationStream(int n);

    iterator begin() const { return iterator(n_); }
    sentinel end() const noexcept { return {}; }
    std::uint64_t count() const noexcept;

private:
    std::size_t n_;
};

/// Size-k subsets of {0..M-1} in lexicographic order, with complements.
class BipartitionStream {
public:
    struct sentinel {};

    class iterator {
    public:
        using value_type = Bipartition;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(int total, int k);

        const Bipartition& operator*() const noexcept { return current_; }
        const Bipartition* operator->() const noexcept { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& it, sentinel) noexcept { return it.done_; }

    private:
        void fill();

        std::vector<int> chosen_;
        Bipartition current_;
        int total_ = 0;
        bool done_ = true;
    };

    BipartitionStream(int total, int k);

    iterator begin() const { return iterator(total_, k_); }
    sentinel end() const noexcept { return {}; }
    std::uint64_t count() const noexcept;

private:
    int total_;
    int k_;
};

inline constexpr int kMaxEnumeratedPermutationSize = 10;

/// All of S_n; n > 10 raises SizeLimit. S_0 holds the single empty permutation.
PermutationStream enumerate_permutations(int n);
BipartitionStream enumerate_bipartitions(int total, int k);

std::uint64_t factorial(int n);
std::uint64_t binomial(int n, int k);

}  // namespace bethe

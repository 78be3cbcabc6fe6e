#include <bethe/kernels.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace bethe {

namespace {

// Denominators are compared against kKernelGuard * max(1, |c|, |u|, |v|).
void guard(complex denominator, double scale, const char* what) {
    if (std::abs(denominator) < kKernelGuard * scale) {
        throw SingularArgument(std::string("kernel pole: ") + what);
    }
}

}  // namespace

Coupling::Coupling(double c) : c_(c) {
    if (!std::isfinite(c) || c == 0.0) {
        throw DomainError("Coupling: c must be finite and nonzero");
    }
}

RapiditySet::RapiditySet(std::vector<complex> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i].real()) || !std::isfinite(values_[i].imag())) {
            throw DomainError("RapiditySet: non-finite rapidity");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (values_[i] == values_[j]) {
                throw SingularArgument("RapiditySet: coincident rapidities");
            }
        }
    }
}

RapiditySet::RapiditySet(std::initializer_list<complex> values)
    : RapiditySet(std::vector<complex>(values)) {}

RapiditySet RapiditySet::from_real(std::span<const double> values) {
    return RapiditySet(std::vector<complex>(values.begin(), values.end()));
}

bool RapiditySet::is_real() const noexcept {
    return std::all_of(values_.begin(), values_.end(),
                       [](const complex& z) { return z.imag() == 0.0; });
}

double RapiditySet::max_abs() const noexcept {
    double m = 0.0;
    for (const auto& z : values_) m = std::max(m, std::abs(z));
    return m;
}

complex RapiditySet::sum() const noexcept {
    return std::accumulate(values_.begin(), values_.end(), complex{});
}

RapiditySet RapiditySet::subset(std::span<const int> indices) const {
    std::vector<complex> out;
    out.reserve(indices.size());
    for (int i : indices) {
        if (i < 0 || static_cast<std::size_t>(i) >= values_.size()) {
            throw IndexError("RapiditySet::subset: index out of range");
        }
        out.push_back(values_[static_cast<std::size_t>(i)]);
    }
    return RapiditySet(std::move(out));
}

PositionSet::PositionSet(std::vector<double> values) : values_(std::move(values)) {
    for (double x : values_) {
        if (!std::isfinite(x)) throw DomainError("PositionSet: non-finite coordinate");
    }
}

PositionSet::PositionSet(std::initializer_list<double> values)
    : PositionSet(std::vector<double>(values)) {}

bool PositionSet::strictly_increasing() const noexcept {
    return std::adjacent_find(values_.begin(), values_.end(),
                              [](double a, double b) { return !(a < b); }) == values_.end();
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v]) {
            throw DomainError("Permutation: image list is not a bijection");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::mirror(std::size_t n) {
    std::vector<int> im(n);
    for (std::size_t i = 0; i < n; ++i) im[i] = static_cast<int>(n - 1 - i);
    return Permutation(std::move(im));
}

Permutation Permutation::adjacent_transposition(std::size_t n, std::size_t j) {
    if (j + 1 >= n) throw IndexError("adjacent_transposition: j+1 out of range");
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 0);
    std::swap(im[j], im[j + 1]);
    return Permutation(std::move(im));
}

Permutation Permutation::from_one_based(std::initializer_list<int> images) {
    std::vector<int> im;
    im.reserve(images.size());
    for (int v : images) im.push_back(v - 1);
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& q, const Permutation& p) {
    if (q.size() != p.size()) throw LengthMismatch("permutation product: sizes differ");
    std::vector<int> im(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) im[i] = q(static_cast<std::size_t>(p(i)));
    return Permutation(std::move(im));
}

complex kernel(KernelKind kind, complex u, complex v, Coupling c) {
    const complex ic = c.ic();
    const complex d = u - v;
    const double scale = std::max({1.0, std::abs(c.value()), std::abs(u), std::abs(v)});
    switch (kind) {
        case KernelKind::f:
            guard(d, scale, "f(u,v) at u=v");
            return 1.0 + ic / d;
        case KernelKind::g:
            guard(d, scale, "g(u,v) at u=v");
            return ic / d;
        case KernelKind::h:
            return (d + ic) / ic;
        case KernelKind::t:
            guard(d, scale, "t(u,v) at u=v");
            guard(d + ic, scale, "t(u,v) at u-v=-ic");
            return (ic / d) * (ic / (d + ic));
    }
    throw DomainError("kernel: unknown kind");
}

complex set_product(KernelKind kind, std::span<const complex> a, std::span<const complex> b,
                    PairOrder order, Coupling c) {
    if (order != PairOrder::all && a.size() != b.size()) {
        throw LengthMismatch("set_product: ordered products need equal lengths");
    }
    complex prod{1.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (order == PairOrder::less && !(i < j)) continue;
            if (order == PairOrder::greater && !(i > j)) continue;
            prod *= kernel(kind, a[i], b[j], c);
        }
    }
    return prod;
}

complex big_f(std::span<const complex> u, Coupling c) {
    return set_product(KernelKind::f, u, u, PairOrder::less, c);
}

complex set_inner(std::span<const complex> x, std::span<const complex> u) {
    if (x.size() != u.size()) throw LengthMismatch("set_inner: lengths differ");
    complex acc{};
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * u[i];
    return acc;
}

double set_inner(std::span<const double> x, std::span<const double> u) {
    if (x.size() != u.size()) throw LengthMismatch("set_inner: lengths differ");
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * u[i];
    return acc;
}

PermutationStream::iterator::iterator(std::size_t n) : images_(n), done_(false) {
    std::iota(images_.begin(), images_.end(), 0);
    current_ = Permutation(images_);
}

PermutationStream::iterator& PermutationStream::iterator::operator++() {
    if (!std::next_permutation(images_.begin(), images_.end())) {
        done_ = true;
        return *this;
    }
    current_ = Permutation(images_);
    return *this;
}

PermutationStream::PermutationStream(int n) : n_(static_cast<std::size_t>(n)) {}

std::uint64_t PermutationStream::count() const noexcept {
    return factorial(static_cast<int>(n_));
}

BipartitionStream::iterator::iterator(int total, int k) : chosen_(k), total_(total), done_(false) {
    std::iota(chosen_.begin(), chosen_.end(), 0);
    fill();
}

void BipartitionStream::iterator::fill() {
    current_.total = total_;
    current_.part_one = chosen_;
    current_.part_two.clear();
    std::size_t next = 0;
    for (int i = 0; i < total_; ++i) {
        if (next < chosen_.size() && chosen_[next] == i) {
            ++next;
        } else {
            current_.part_two.push_back(i);
        }
    }
}

BipartitionStream::iterator& BipartitionStream::iterator::operator++() {
    const int k = static_cast<int>(chosen_.size());
    int i = k - 1;
    while (i >= 0 && chosen_[i] == total_ - k + i) --i;
    if (i < 0) {
        done_ = true;
        return *this;
    }
    ++chosen_[i];
    for (int j = i + 1; j < k; ++j) chosen_[j] = chosen_[j - 1] + 1;
    fill();
    return *this;
}

BipartitionStream::BipartitionStream(int total, int k) : total_(total), k_(k) {}

std::uint64_t BipartitionStream::count() const noexcept { return binomial(total_, k_); }

PermutationStream enumerate_permutations(int n) {
    if (n < 0) throw IndexError("enumerate_permutations: negative size");
    if (n > kMaxEnumeratedPermutationSize) {
        throw SizeLimit("enumerate_permutations: n > 10");
    }
    return PermutationStream(n);
}

BipartitionStream enumerate_bipartitions(int total, int k) {
    if (total < 0 || k < 0 || k > total) {
        throw IndexError("enumerate_bipartitions: need 0 <= k <= M");
    }
    return BipartitionStream(total, k);
}

std::uint64_t factorial(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

}  // namespace bethe

#include "support.hpp"

#include <bethe/kernels.hpp>

#include <doctest.h>

#include <set>

using namespace bethe;
using support::rel;

namespace {
const complex I{0.0, 1.0};
}

TEST_CASE("kernel hand values") {
    const Coupling c(1.0);
    CHECK(rel(kernel(KernelKind::g, I, 0.0, c), 1.0) < 1e-15);
    CHECK(rel(kernel(KernelKind::h, 0.7, 0.7, c), 1.0) < 1e-15);
    CHECK(rel(kernel(KernelKind::t, 1.0, 0.0, c), complex(-0.5, 0.5)) < 1e-15);
    CHECK(rel(kernel(KernelKind::f, 1.0, 0.0, c), complex(1.0, 1.0)) < 1e-15);
}

TEST_CASE("kernel algebra at random points") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> d(-3.0, 3.0), dc(0.2, 3.0);
    for (int k = 0; k < 1000; ++k) {
        const Coupling c(dc(rng));
        const complex u{d(rng), 0.3 * d(rng)}, v{d(rng), 0.3 * d(rng)};
        const complex f = kernel(KernelKind::f, u, v, c), g = kernel(KernelKind::g, u, v, c);
        const complex h = kernel(KernelKind::h, u, v, c), t = kernel(KernelKind::t, u, v, c);
        CHECK(rel(f, g * h) < 1e-14);
        CHECK(rel(t, g / h) < 1e-14);
        CHECK(rel(g, -kernel(KernelKind::g, v, u, c)) < 1e-14);
    }
}

TEST_CASE("kernel poles raise SingularArgument") {
    const Coupling c(1.0);
    CHECK_THROWS_AS(kernel(KernelKind::g, 0.5, 0.5, c), SingularArgument);
    CHECK_THROWS_AS(kernel(KernelKind::f, 0.5, 0.5 + 1e-13, c), SingularArgument);
    CHECK_THROWS_AS(kernel(KernelKind::t, 0.5 - I, 0.5, c), SingularArgument);
    CHECK_THROWS_AS(Coupling(0.0), DomainError);
}

TEST_CASE("set_product") {
    const Coupling c(1.0);
    const std::vector<complex> empty;
    const std::vector<complex> a{0.3, -0.4};
    CHECK(set_product(KernelKind::f, empty, a, PairOrder::all, c) == complex(1.0));
    const std::vector<complex> u{1.0, 0.0};
    CHECK(rel(set_product(KernelKind::g, u, u, PairOrder::less, c), I) < 1e-15);
    CHECK_THROWS_AS(set_product(KernelKind::g, u, std::vector<complex>{1.0}, PairOrder::less, c), LengthMismatch);

    const std::vector<complex> v{0.9, -1.1};
    complex termwise = 1.0;
    for (auto x : u) {
        for (auto y : v) termwise *= (x - y + I) / I;
    }
    CHECK(rel(set_product(KernelKind::h, u, v, PairOrder::all, c), termwise) < 1e-14);
}

TEST_CASE("big_f") {
    const Coupling c(1.0);
    CHECK(big_f(std::vector<complex>{0.4}, c) == complex(1.0));
    CHECK(rel(big_f(std::vector<complex>{1.0, 0.0}, c), complex(1.0, 1.0)) < 1e-15);
    CHECK_THROWS_AS(RapiditySet({0.5, 0.5}), SingularArgument);

    std::mt19937_64 rng(3);
    for (std::size_t m = 1; m <= 6; ++m) {
        const auto u = RapiditySet::from_real(support::spread_reals(rng, m));
        const auto tu = apply_permutation(Permutation::mirror(m), u);
        CHECK(rel(std::conj(big_f(u, Coupling(1.3))), big_f(tu, Coupling(1.3))) < 1e-13);
    }
}

TEST_CASE("exchange relation of amplitudes") {
    std::mt19937_64 rng(11);
    const Coupling c(0.8);
    const complex ic = c.ic();
    for (std::size_t m = 2; m <= 5; ++m) {
        const auto u = RapiditySet::from_real(support::spread_reals(rng, m));
        for (const auto& p : enumerate_permutations(static_cast<int>(m))) {
            const auto pinv = p.inverse();
            for (std::size_t j = 0; j + 1 < m; ++j) {
                const complex a = u[static_cast<std::size_t>(pinv(j))];
                const complex b = u[static_cast<std::size_t>(pinv(j + 1))];
                const auto lhs = big_f(apply_permutation(Permutation::adjacent_transposition(m, j) * p, u), c);
                const auto rhs = (a - b - ic) / (a - b + ic) * big_f(apply_permutation(p, u), c);
                CHECK(rel(lhs, rhs) < 1e-13);
            }
        }
    }
}

TEST_CASE("shifted sets") {
    const std::vector<double> x{1.0, 2.0, 4.0};
    CHECK(shifted_set<double>(x, 2, ShiftSide::position) == std::vector<double>{3.0, 2.0, 4.0});
    CHECK(shifted_set<double>(x, 2, ShiftSide::rapidity) == std::vector<double>{1.0, 3.0, 4.0});
    CHECK(shifted_set<double>(x, 0, ShiftSide::rapidity) == std::vector<double>{7.0, 6.0, 4.0});
    CHECK(shifted_set<double>(x, 3, ShiftSide::position) == std::vector<double>{7.0, 6.0, 4.0});
    CHECK_THROWS_AS(shifted_set<double>(x, 4, ShiftSide::position), IndexError);
    CHECK_THROWS_AS(shifted_set<double>(x, -1, ShiftSide::rapidity), IndexError);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t m = 1 + static_cast<std::size_t>(trial % 6);
        std::vector<double> y(m), u(m), w(m), uw(m);
        for (std::size_t i = 0; i < m; ++i) {
            y[i] = d(rng);
            u[i] = d(rng);
            w[i] = d(rng);
            uw[i] = u[i] + w[i];
        }
        for (int n = 0; n <= static_cast<int>(m); ++n) {
            const auto sy = shifted_set<double>(y, n, ShiftSide::position);
            const auto su = shifted_set<double>(u, n, ShiftSide::rapidity);
            CHECK(std::abs(set_inner(sy, u) - set_inner(std::span<const double>(y), su)) < 1e-12);
            const auto sw = shifted_set<double>(w, n, ShiftSide::rapidity);
            const auto suw = shifted_set<double>(uw, n, ShiftSide::rapidity);
            for (std::size_t i = 0; i < m; ++i) CHECK(std::abs(su[i] + sw[i] - suw[i]) < 1e-12);
        }
    }
}

TEST_CASE("set_inner") {
    CHECK(set_inner(std::vector<double>{1, 2}, std::vector<double>{3, 4}) == 11.0);
    CHECK(set_inner(std::vector<double>{}, std::vector<double>{}) == 0.0);
    CHECK_THROWS_AS(set_inner(std::vector<double>{1}, std::vector<double>{1, 2}), LengthMismatch);
    const std::vector<double> x{0.3, -1.0, 2.5}, u{1.5, 0.25, -0.75};
    const auto p = Permutation::from_one_based({3, 1, 2});
    CHECK(std::abs(set_inner(apply_permutation<double>(p, x), apply_permutation<double>(p, u)) -
                   set_inner(std::span<const double>(x), u)) < 1e-15);
}

TEST_CASE("permutation action follows the cycle example") {
    const std::vector<char> abc{'a', 'b', 'c'};
    const auto p = Permutation::from_one_based({2, 3, 1});
    CHECK(apply_permutation<char>(p, abc) == std::vector<char>{'c', 'a', 'b'});
    CHECK(apply_permutation<char>(p * p, abc) == std::vector<char>{'b', 'c', 'a'});
    CHECK(apply_permutation<char>(Permutation::identity(3), abc) == abc);
    CHECK_THROWS_AS(apply_permutation<char>(Permutation::identity(2), abc), LengthMismatch);

    std::mt19937_64 rng(9);
    const std::vector<int> a{10, 20, 30, 40, 50};
    for (const auto& q : enumerate_permutations(5)) {
        std::vector<int> img{0, 1, 2, 3, 4};
        std::shuffle(img.begin(), img.end(), rng);
        const Permutation r(img);
        CHECK(apply_permutation<int>(q, apply_permutation<int>(r, a)) == apply_permutation<int>(q * r, a));
        CHECK(r * r.inverse() == Permutation::identity(5));
    }
}

TEST_CASE("permutation enumeration") {
    CHECK(enumerate_permutations(1).count() == 1);
    CHECK(enumerate_permutations(0).count() == 1);
    for (int n : {1, 3, 5}) {
        std::set<std::vector<int>> seen;
        std::vector<int> previous;
        for (const auto& p : enumerate_permutations(n)) {
            const std::vector<int> img(p.images().begin(), p.images().end());
            CHECK(img > previous);
            previous = img;
            seen.insert(img);
        }
        CHECK(seen.size() == factorial(n));
    }
    CHECK(factorial(5) == 120);
    CHECK_THROWS_AS(enumerate_permutations(11), SizeLimit);
    CHECK_THROWS_AS(enumerate_permutations(-1), IndexError);
}

TEST_CASE("bipartition enumeration") {
    auto count = [](int m, int k) {
        std::size_t n = 0;
        for (const auto& b : enumerate_bipartitions(m, k)) {
            CHECK(b.part_one.size() == static_cast<std::size_t>(k));
            CHECK(std::is_sorted(b.part_one.begin(), b.part_one.end()));
            CHECK(std::is_sorted(b.part_two.begin(), b.part_two.end()));
            std::vector<int> all = b.part_one;
            all.insert(all.end(), b.part_two.begin(), b.part_two.end());
            std::sort(all.begin(), all.end());
            for (int i = 0; i < m; ++i) CHECK(all[static_cast<std::size_t>(i)] == i);
            ++n;
        }
        return n;
    };
    CHECK(count(4, 2) == 6);
    CHECK(count(3, 0) == 1);
    CHECK(count(3, 3) == 1);
    CHECK(count(6, 3) == binomial(6, 3));
    CHECK(enumerate_bipartitions(3, 0).begin()->part_one.empty());
    CHECK(enumerate_bipartitions(3, 3).begin()->part_two.empty());
    CHECK_THROWS_AS(enumerate_bipartitions(3, 4), IndexError);
    CHECK_THROWS_AS(enumerate_bipartitions(3, -1), IndexError);
}

TEST_CASE("kernel identities under the ic shift") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> d(-2.0, 2.0), dc(0.5, 2.0);
    for (int k = 0; k < 200; ++k) {
        const Coupling c(dc(rng));
        const complex x = d(rng), y = d(rng), ic = c.ic();
        CHECK(rel(kernel(KernelKind::g, x, y - ic, c), 1.0 / kernel(KernelKind::h, x, y, c)) < 1e-13);
        CHECK(rel(kernel(KernelKind::g, x - ic, y, c), -1.0 / kernel(KernelKind::h, y, x, c)) < 1e-13);
        CHECK(rel(kernel(KernelKind::h, x - ic, y, c), 1.0 / kernel(KernelKind::g, x, y, c)) < 1e-13);
    }
}

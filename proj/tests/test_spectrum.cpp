#include "treebound/families.hpp"
#include "treebound/kirchhoff.hpp"
#include "treebound/laplacian.hpp"
#include "treebound/spectrum.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

using namespace treebound;

namespace {

void check_close(const std::vector<double>& got, const std::vector<double>& want, double tol) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        INFO("index " << i);
        CHECK(std::abs(got[i] - want[i]) <= tol);
    }
}

}  // namespace

TEST_CASE("eigenvalues of a diagonal matrix are its diagonal") {
    const Spectrum s = symmetric_eigenvalues({{3, 0, 0}, {0, 1, 0}, {0, 0, 2}}, 1e-12);
    check_close(s.values, {1, 2, 3}, 1e-12);
}

TEST_CASE("small laplacian spectra") {
    check_close(laplacian_spectrum(complete_graph(2)).values, {0, 2}, 1e-10);
    check_close(laplacian_spectrum(path_graph(3)).values, {0, 1, 3}, 1e-10);
    check_close(laplacian_spectrum(complete_graph(3)).values, {0, 3, 3}, 1e-10);
    check_close(laplacian_spectrum(cycle_graph(4)).values, {0, 2, 2, 4}, 1e-10);

    Multigraph d2(2);
    d2.add_edge(0, 1, 2);
    check_close(laplacian_spectrum(d2).values, {0, 4}, 1e-10);
}

TEST_CASE("path and cycle spectra match trigonometric closed forms") {
    using std::numbers::pi;
    for (int n = 2; n <= 12; ++n) {
        std::vector<double> want;
        for (int k = 0; k < n; ++k) {
            const double s = std::sin(static_cast<double>(k) * pi / (2.0 * n));
            want.push_back(4.0 * s * s);
        }
        std::sort(want.begin(), want.end());
        check_close(laplacian_spectrum(path_graph(n)).values, want, 1e-9 * n);
    }
    for (int n = 3; n <= 12; ++n) {
        std::vector<double> want;
        for (int k = 0; k < n; ++k)
            want.push_back(2.0 - 2.0 * std::cos(2.0 * pi * k / n));
        std::sort(want.begin(), want.end());
        check_close(laplacian_spectrum(cycle_graph(n)).values, want, 1e-9 * n);
    }
}

TEST_CASE("complete graph spectrum is zero plus n repeated") {
    for (int n = 2; n <= 10; ++n) {
        const Spectrum s = laplacian_spectrum(complete_graph(n));
        CHECK(s.values[0] == 0.0);
        for (int k = 1; k < n; ++k) CHECK(std::abs(s.values[static_cast<std::size_t>(k)] - n) <= 1e-9 * n);
    }
}

TEST_CASE("spectrum invariants on random multigraphs") {
    Rng rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(7));
        const Multigraph g = random_multigraph(n, 3, rng);
        const Spectrum s = laplacian_spectrum(g);
        const double shift =
            g.has_edges() ? static_cast<double>(n) * static_cast<double>(max_multiplicity(g)) : 0.0;

        CHECK(s.values[0] == 0.0);  // clamped
        double sum = 0.0;
        for (int k = 0; k < n; ++k) {
            const double v = s.values[static_cast<std::size_t>(k)];
            sum += v;
            CHECK(v >= -s.tol);
            CHECK(v <= shift + s.tol);
            if (k > 0) CHECK(v >= s.values[static_cast<std::size_t>(k - 1)] - s.tol);
        }
        std::int64_t trace = 0;
        for (int v = 0; v < n; ++v) trace += g.degree(v);
        CHECK(std::abs(sum - static_cast<double>(trace)) <= n * std::max(s.tol, 1e-12));
    }
}

TEST_CASE("eigensolver rejects bad input") {
    CHECK_THROWS_AS(symmetric_eigenvalues({{0, 1}, {2, 0}}, 1e-12), std::invalid_argument);
    CHECK_THROWS_AS(symmetric_eigenvalues({{0, 1}}, 1e-12), std::invalid_argument);
    CHECK_THROWS_AS(symmetric_eigenvalues({{1}}, -1.0), std::invalid_argument);
}

TEST_CASE("eigenvalue product over n recovers the tree count") {
    CHECK(std::abs(tau_spectral(complete_graph(3)) - 3.0) <= 1e-9);
    CHECK(std::abs(tau_spectral(cycle_graph(4)) - 4.0) <= 1e-9);

    Multigraph split(3);
    split.add_edge(0, 1);
    CHECK(std::abs(tau_spectral(split)) <= 1e-9);

    Rng rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(9));
        const Multigraph g = random_multigraph(n, 3, rng);
        const double exact = tau_exact(g).convert_to<double>();
        CHECK(std::abs(tau_spectral(g) - exact) <= 1e-8 * std::max(1.0, exact));
    }
}

TEST_CASE("complement spectrum is the reflected spectrum") {
    Rng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(7));
        const bool simple = trial % 2 == 0;
        Multigraph g = simple ? random_simple_graph(n, rng) : random_multigraph(n, 3, rng);
        if (!g.has_edges()) continue;
        const std::int64_t delta = max_multiplicity(g);
        const double shift = static_cast<double>(n) * static_cast<double>(delta);

        const Spectrum mu = laplacian_spectrum(g);
        std::vector<double> want{0.0};
        for (int k = n - 1; k >= 1; --k) want.push_back(shift - mu.values[static_cast<std::size_t>(k)]);
        std::sort(want.begin(), want.end());

        check_close(laplacian_spectrum(complement(g, delta)).values, want, 1e-8 * shift);
    }
}

TEST_CASE("product spectrum is the multiset of pairwise sums") {
    const Spectrum k2 = laplacian_spectrum(complete_graph(2));
    check_close(product_spectrum(k2, k2).values, {0, 2, 2, 4}, 1e-10);

    const Spectrum one = laplacian_spectrum(Multigraph(1));
    const Spectrum c4 = laplacian_spectrum(cycle_graph(4));
    check_close(product_spectrum(c4, one).values, c4.values, 1e-12);

    // cross-checked against the spectrum of the product graph itself below
    const Spectrum p3 = laplacian_spectrum(path_graph(3));
    check_close(product_spectrum(k2, p3).values, {0, 1, 2, 3, 3, 5}, 1e-9);

    Rng rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        const int m = 2 + static_cast<int>(rng.below(3));
        const int n = 2 + static_cast<int>(rng.below(3));
        const Multigraph g = random_simple_graph(m, rng);
        const Multigraph h = random_simple_graph(n, rng);
        const Spectrum combined = product_spectrum(laplacian_spectrum(g), laplacian_spectrum(h));
        const Spectrum direct = laplacian_spectrum(cartesian_product(g, h));
        check_close(combined.values, direct.values, 1e-8 * (m + n));
    }
}

TEST_CASE("join spectrum formula recovers exact counts") {
    CHECK(std::abs(join_spectrum_tau({Multigraph(2), Multigraph(2)}) - 4.0) <= 1e-9);
    CHECK(std::abs(join_spectrum_tau({Multigraph(1), Multigraph(1)}) - 1.0) <= 1e-9);
    CHECK(std::abs(join_spectrum_tau({Multigraph(1), Multigraph(1), Multigraph(1)}) - 3.0) <= 1e-9);

    Rng rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        const int k = 2 + static_cast<int>(rng.below(3));
        std::vector<Multigraph> parts;
        for (int i = 0; i < k; ++i)
            parts.push_back(random_multigraph(1 + static_cast<int>(rng.below(4)), 2, rng));
        const double exact = tau_exact(join(parts)).convert_to<double>();
        CHECK(std::abs(join_spectrum_tau(parts) - exact) <= 1e-8 * std::max(1.0, exact));
    }
}

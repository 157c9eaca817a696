#pragma once

#include "treebound/multigraph.hpp"
#include "treebound/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace treebound {

/// Outcome of a majorization check x > y: per-prefix gaps sum(x_1..x_k) -
/// sum(y_1..y_k), the total gap, and the first violated prefix if any.
struct MajorizationWitness {
    bool holds = false;
    std::vector<double> prefix_gaps;
    double total_gap = 0.0;
    std::optional<int> first_violation;
    bool resorted = false;  // inputs arrived unsorted and were sorted here
};

/// Checks whether x majorizes y: every prefix sum of the nonincreasing sort
/// of x dominates that of y, and the totals agree. tol = 0 gives the exact
/// check for integer-valued input.
inline MajorizationWitness majorizes(std::vector<double> x, std::vector<double> y, double tol) {
    if (x.size() != y.size()) throw std::invalid_argument("majorizes: sequences must have equal length");
    MajorizationWitness w;
    if (x.empty()) {
        w.holds = true;
        return w;
    }
    const bool x_sorted = std::is_sorted(x.begin(), x.end(), std::greater<>());
    const bool y_sorted = std::is_sorted(y.begin(), y.end(), std::greater<>());
    w.resorted = !(x_sorted && y_sorted);
    std::sort(x.begin(), x.end(), std::greater<>());
    std::sort(y.begin(), y.end(), std::greater<>());

    w.prefix_gaps.resize(x.size());
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        sx += x[k];
        sy += y[k];
        w.prefix_gaps[k] = sx - sy;
    }
    w.total_gap = w.prefix_gaps.back();
    w.holds = true;
    for (std::size_t k = 0; k < w.prefix_gaps.size(); ++k) {
        if (w.prefix_gaps[k] < -tol) {
            w.holds = false;
            w.first_violation = static_cast<int>(k);
            break;
        }
    }
    if (w.holds && std::abs(w.total_gap) > tol) {
        w.holds = false;
        w.first_violation = static_cast<int>(w.prefix_gaps.size()) - 1;
    }
    return w;
}

/// Karamata's inequality in product form: if x and y are positive and
/// x majorizes y, then prod(x) <= prod(y). Instance check only; callers use
/// it to exercise the inequality, not to prove it.
inline bool karamata_product_check(const std::vector<double>& x, const std::vector<double>& y, double tol) {
    for (double v : x)
        if (v <= 0.0) throw std::invalid_argument("karamata_product_check: sequences must be positive");
    for (double v : y)
        if (v <= 0.0) throw std::invalid_argument("karamata_product_check: sequences must be positive");
    if (!majorizes(x, y, tol).holds)
        throw std::invalid_argument("karamata_product_check: x does not majorize y");
    double px = 1.0;
    double py = 1.0;
    for (double v : x) px *= v;
    for (double v : y) py *= v;
    return px <= py + tol * std::max(1.0, std::abs(py));
}

/// Schur's inequality: the eigenvalues of a symmetric matrix majorize its
/// diagonal.
inline MajorizationWitness verify_schur(const std::vector<std::vector<double>>& m, double tol) {
    double norm = 0.0;
    for (const auto& row : m)
        for (double v : row) norm = std::max(norm, std::abs(v));
    const Spectrum spec = symmetric_eigenvalues(m, 1e-12 * std::max(1.0, norm));
    std::vector<double> eigen(spec.values.rbegin(), spec.values.rend());
    std::vector<double> diagonal;
    diagonal.reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) diagonal.push_back(m[i][i]);
    return majorizes(eigen, diagonal, tol);
}

/// The majorization at the heart of the degree bound: with delta the
/// maximal edge multiplicity, (n*delta, mu_n, ..., mu_2) majorizes
/// (delta + d_n, ..., delta + d_1).
inline MajorizationWitness verify_main_majorization(const Multigraph& g, double tol) {
    const std::int64_t delta = max_multiplicity(g);  // rejects edgeless graphs
    const int n = g.order();
    const Spectrum spec = laplacian_spectrum(g);

    std::vector<double> x;
    x.reserve(static_cast<std::size_t>(n));
    x.push_back(static_cast<double>(n) * static_cast<double>(delta));
    for (int k = n - 1; k >= 1; --k) x.push_back(spec.values[static_cast<std::size_t>(k)]);

    const auto degrees = degree_sequence(g);
    std::vector<double> y;
    y.reserve(static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 0; --k)
        y.push_back(static_cast<double>(delta) + static_cast<double>(degrees[static_cast<std::size_t>(k)]));

    return majorizes(std::move(x), std::move(y), tol);
}

}  // namespace treebound

#pragma once

#include "treebound/laplacian.hpp"
#include "treebound/multigraph.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace treebound {

/// Eigenvalues sorted nondecreasing, together with the comparison tolerance
/// they were computed at.
struct Spectrum {
    std::vector<double> values;
    double tol = 0.0;

    int size() const { return static_cast<int>(values.size()); }
};

/// Default spectral tolerance, scaled by the eigenvalue range [0, n*delta].
inline double default_spectral_tol(const Multigraph& g) {
    std::int64_t delta = 0;
    if (g.has_edges()) delta = max_multiplicity(g);
    return 1e-10 * std::max(1.0, static_cast<double>(g.order()) * static_cast<double>(delta));
}

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
/// sweeping until every off-diagonal magnitude drops below tol. Throws if
/// the input is asymmetric beyond tol or the sweep cap is hit (a too-small
/// tol is reported, never silently accepted).
inline Spectrum symmetric_eigenvalues(const std::vector<std::vector<double>>& m, double tol) {
    const int n = static_cast<int>(m.size());
    if (tol < 0.0) throw std::invalid_argument("symmetric_eigenvalues: tolerance must be nonnegative");
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("symmetric_eigenvalues: matrix must be square");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                         m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) > tol)
                throw std::invalid_argument("symmetric_eigenvalues: matrix is not symmetric within tolerance");

    std::vector<double> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] =
                0.5 * (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                       m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);

    auto at = [&](int i, int j) -> double& {
        return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
    };
    auto max_off_diagonal = [&]() {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(at(p, q)));
        return off;
    };

    constexpr int max_sweeps = 100;
    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (max_off_diagonal() <= tol) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0) ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                                                : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = at(p, k) = c * akp - s * akq;
                    at(k, q) = at(q, k) = s * akp + c * akq;
                }
                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = at(q, p) = 0.0;
            }
        }
    }
    if (!converged && max_off_diagonal() > tol)
        throw std::runtime_error("symmetric_eigenvalues: Jacobi iteration did not reach tolerance");

    Spectrum spec;
    spec.tol = tol;
    spec.values.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) spec.values[static_cast<std::size_t>(i)] = at(i, i);
    std::sort(spec.values.begin(), spec.values.end());
    return spec;
}

/// Laplacian spectrum 0 = mu_1 <= ... <= mu_n. Eigenvalues within tol of
/// zero are clamped to exactly 0, so multiplicity-of-zero questions (e.g.
/// connectivity) are decidable on the returned values.
inline Spectrum laplacian_spectrum(const Multigraph& g, double tol) {
    Spectrum spec = symmetric_eigenvalues(to_double_matrix(laplacian(g)), tol);
    for (double& v : spec.values)
        if (std::abs(v) <= tol) v = 0.0;
    std::sort(spec.values.begin(), spec.values.end());
    return spec;
}

inline Spectrum laplacian_spectrum(const Multigraph& g) {
    return laplacian_spectrum(g, default_spectral_tol(g));
}

/// tau(G) = mu_2 * ... * mu_n / n. Advisory floating-point value; exact
/// verdicts always come from the integer path.
inline double tau_spectral(const Multigraph& g, double tol) {
    const Spectrum spec = laplacian_spectrum(g, tol);
    double product = 1.0;
    for (std::size_t i = 1; i < spec.values.size(); ++i) product *= spec.values[i];
    return product / static_cast<double>(g.order());
}

inline double tau_spectral(const Multigraph& g) {
    return tau_spectral(g, default_spectral_tol(g));
}

/// Spanning tree count of a join evaluated purely from the parts' spectra:
/// tau = v^(k-2) * prod_i prod_{j>=2} (v - v_i + mu^i_j) with v the total
/// vertex count over the k parts.
inline double join_spectrum_tau(const std::vector<Multigraph>& parts, double tol) {
    if (parts.size() < 2) throw std::invalid_argument("join_spectrum_tau: need at least two parts");
    int v = 0;
    for (const Multigraph& p : parts) v += p.order();
    double result = std::pow(static_cast<double>(v), static_cast<double>(parts.size()) - 2.0);
    for (const Multigraph& p : parts) {
        const Spectrum spec = laplacian_spectrum(p, tol);
        for (std::size_t j = 1; j < spec.values.size(); ++j)
            result *= static_cast<double>(v - p.order()) + spec.values[j];
    }
    return result;
}

inline double join_spectrum_tau(const std::vector<Multigraph>& parts) {
    double tol = 0.0;
    for (const Multigraph& p : parts) tol = std::max(tol, default_spectral_tol(p));
    return join_spectrum_tau(parts, tol);
}

/// Spectrum of a Cartesian product: the sorted multiset of pairwise sums.
inline Spectrum product_spectrum(const Spectrum& a, const Spectrum& b) {
    Spectrum out;
    out.tol = a.tol + b.tol;
    out.values.reserve(a.values.size() * b.values.size());
    for (double x : a.values)
        for (double y : b.values) out.values.push_back(x + y);
    std::sort(out.values.begin(), out.values.end());
    return out;
}

}  // namespace treebound

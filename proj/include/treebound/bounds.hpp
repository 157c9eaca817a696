#pragma once

#include "treebound/kirchhoff.hpp"
#include "treebound/multigraph.hpp"
#include "treebound/numbers.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace treebound {

/// Verdict of one tau-versus-bound comparison. holds and equality are exact
/// integer comparisons; precondition flags report whether the hypotheses the
/// bound relies on are met (the inequality is evaluated either way, and a
/// false flag means the verdict carries a caveat rather than an error).
struct BoundReport {
    BigInt tau;
    Rational bound;
    bool bound_finite = true;  // false only for the degenerate zero-denominator case
    bool holds = false;
    bool equality = false;
    std::map<std::string, bool> preconditions;
};

/// Degree bound prod(delta + d_i) / (delta * n^2), exact.
inline Rational degree_bound(const Multigraph& g) {
    const std::int64_t delta = max_multiplicity(g);  // rejects edgeless graphs
    const int n = g.order();
    BigInt numerator = 1;
    for (int u = 0; u < n; ++u) numerator *= BigInt(delta) + g.degree(u);
    const BigInt denominator = BigInt(delta) * n * n;
    return Rational(numerator, denominator);
}

/// True iff every vertex pair carries the same positive multiplicity: the
/// unique equality case of the degree bound.
inline bool is_uniform_complete(const Multigraph& g) {
    const int n = g.order();
    if (n < 2 || !g.has_edges()) return false;
    const std::int64_t delta = max_multiplicity(g);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.multiplicity(i, j) != delta) return false;
    return true;
}

/// tau(G) <= prod(delta + d_i) / (delta * n^2), compared cross-multiplied
/// so the verdict is an integer comparison.
inline BoundReport check_degree_bound(const Multigraph& g) {
    const std::int64_t delta = max_multiplicity(g);
    const int n = g.order();
    BoundReport report;
    report.tau = tau_exact(g);
    BigInt rhs = 1;
    for (int u = 0; u < n; ++u) rhs *= BigInt(delta) + g.degree(u);
    const BigInt lhs = BigInt(delta) * n * n * report.tau;
    report.bound = Rational(rhs, BigInt(delta) * n * n);
    report.holds = lhs <= rhs;
    report.equality = lhs == rhs;
    report.preconditions["connected"] = is_connected(g);
    return report;
}

/// Join bound: tau(G_1 v ... v G_k) <= v^(k-2) * prod(d_G(u)) / prod(v - v_i).
inline BoundReport join_bound(const std::vector<Multigraph>& parts) {
    const Multigraph g = join(parts);  // rejects fewer than two parts
    const int v = g.order();
    BoundReport report;
    report.tau = tau_exact(g);
    BigInt numerator = boost::multiprecision::pow(BigInt(v), static_cast<unsigned>(parts.size() - 2));
    for (int u = 0; u < v; ++u) numerator *= BigInt(g.degree(u));
    BigInt denominator = 1;
    for (const Multigraph& p : parts) denominator *= BigInt(v - p.order());
    report.bound = Rational(numerator, denominator);
    report.holds = report.tau * denominator <= numerator;
    report.equality = report.tau * denominator == numerator;
    report.preconditions["connected"] = is_connected(g);
    return report;
}

/// Cartesian product bound:
/// tau(GxH) <= tau(H) * prod(d_G(u) + d_H(v)) / (m * prod(d_H(v))).
/// The verdict is only meaningful when G is connected and H has no isolated
/// vertices; both are reported as flags. With an isolated vertex in H the
/// rational bound degenerates (zero denominator) and the cross-multiplied
/// comparison is vacuously true.
inline BoundReport cartesian_bound(const Multigraph& g, const Multigraph& h) {
    if (!g.is_simple() || !h.is_simple())
        throw std::invalid_argument("cartesian_bound: inputs must be simple graphs");
    const Multigraph product = cartesian_product(g, h);
    BoundReport report;
    report.tau = tau_exact(product);

    BigInt numerator = tau_exact(h);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) numerator *= BigInt(g.degree(u)) + h.degree(v);
    BigInt denominator = g.order();
    bool isolated = false;
    for (int v = 0; v < h.order(); ++v) {
        const std::int64_t d = h.degree(v);
        if (d == 0) isolated = true;
        denominator *= BigInt(d);
    }

    report.holds = report.tau * denominator <= numerator;
    if (denominator != 0) {
        report.bound = Rational(numerator, denominator);
        report.equality = report.tau * denominator == numerator;
    } else {
        report.bound = 0;
        report.bound_finite = false;
        report.equality = false;
    }
    report.preconditions["connected"] = is_connected(g);
    report.preconditions["no-isolated-vertices"] = !isolated;
    return report;
}

}  // namespace treebound

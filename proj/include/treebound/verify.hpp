#pragma once

#include "treebound/bounds.hpp"
#include "treebound/kirchhoff.hpp"
#include "treebound/majorization.hpp"
#include "treebound/multigraph.hpp"
#include "treebound/numbers.hpp"
#include "treebound/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace treebound {

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::skip;
    std::string detail;
};

namespace detail {

inline CheckResult check_cofactor_invariance(const Multigraph& g) {
    CheckResult r{"cofactor-invariance", CheckStatus::pass, ""};
    const int n = g.order();
    const LaplacianMatrix l = laplacian(g);
    const BigInt tau = tau_exact(g);
    std::vector<std::pair<int, int>> spots;
    if (n == 1) {
        spots = {{0, 0}};
    } else {
        spots = {{0, 0}, {n - 1, n - 1}, {0, n - 1}};
    }
    for (auto [i, j] : spots) {
        const BigInt c = laplacian_cofactor(l, i, j);
        if (c != tau) {
            std::ostringstream os;
            os << "cofactor (" << i + 1 << "," << j + 1 << ") gives " << c << ", expected " << tau;
            return {r.name, CheckStatus::fail, os.str()};
        }
    }
    std::ostringstream os;
    os << "tau=" << tau << " agrees across " << spots.size() << " cofactors";
    r.detail = os.str();
    return r;
}

inline CheckResult check_oracle_equivalence(const Multigraph& g, std::int64_t max_instances) {
    CheckResult r{"oracle-equivalence", CheckStatus::pass, ""};
    if (g.edge_instances() > max_instances) {
        std::ostringstream os;
        os << "size limit: " << g.edge_instances() << " edge instances exceeds " << max_instances;
        return {r.name, CheckStatus::skip, os.str()};
    }
    const BigInt fast = tau_exact(g);
    const BigInt slow = tau_brute_force(g, max_instances);
    if (fast != slow) {
        std::ostringstream os;
        os << "determinant gives " << fast << ", enumeration gives " << slow;
        return {r.name, CheckStatus::fail, os.str()};
    }
    std::ostringstream os;
    os << "tau=" << fast << " by both routes";
    r.detail = os.str();
    return r;
}

inline CheckResult check_complement_spectrum(const Multigraph& g, double tol) {
    CheckResult r{"complement-spectrum", CheckStatus::pass, ""};
    if (!g.has_edges()) return {r.name, CheckStatus::skip, "graph has no edges"};
    const int n = g.order();
    const std::int64_t delta = max_multiplicity(g);
    const double shift = static_cast<double>(n) * static_cast<double>(delta);

    const Spectrum mu = laplacian_spectrum(g);
    const Spectrum co = laplacian_spectrum(complement(g, delta));

    std::vector<double> expected;
    expected.reserve(static_cast<std::size_t>(n));
    expected.push_back(0.0);
    for (int k = n - 1; k >= 1; --k) expected.push_back(shift - mu.values[static_cast<std::size_t>(k)]);
    std::sort(expected.begin(), expected.end());

    double worst = 0.0;
    for (int k = 0; k < n; ++k)
        worst = std::max(worst, std::abs(co.values[static_cast<std::size_t>(k)] - expected[static_cast<std::size_t>(k)]));
    if (worst > tol) {
        std::ostringstream os;
        os << "eigenvalue mismatch " << decimal_string(worst, 6) << " exceeds " << decimal_string(tol, 6);
        return {r.name, CheckStatus::fail, os.str()};
    }
    std::ostringstream os;
    os << "max eigenvalue deviation " << decimal_string(worst, 6);
    r.detail = os.str();
    return r;
}

inline CheckResult check_schur(const Multigraph& g, double tol) {
    CheckResult r{"schur", CheckStatus::pass, ""};
    MajorizationWitness w = verify_schur(to_double_matrix(laplacian(g)), tol);
    if (!w.holds) {
        std::ostringstream os;
        os << "spectrum fails to majorize diagonal, worst prefix gap " << decimal_string(w.total_gap, 6);
        return {r.name, CheckStatus::fail, os.str()};
    }
    if (g.has_edges()) {
        const Multigraph co = complement(g, max_multiplicity(g));
        MajorizationWitness wc = verify_schur(to_double_matrix(laplacian(co)), tol);
        if (!wc.holds) return {r.name, CheckStatus::fail, "complement spectrum fails to majorize its diagonal"};
        r.detail = "holds for the graph and its complement";
    } else {
        r.detail = "holds (edgeless, complement not formed)";
    }
    return r;
}

inline CheckResult check_majorization_chain(const Multigraph& g, double tol) {
    CheckResult r{"majorization-chain", CheckStatus::pass, ""};
    if (!g.has_edges()) return {r.name, CheckStatus::skip, "graph has no edges"};
    MajorizationWitness w = verify_main_majorization(g, tol);
    if (!w.holds) {
        std::ostringstream os;
        os << "violated at prefix " << (w.first_violation ? *w.first_violation + 1 : -1);
        return {r.name, CheckStatus::fail, os.str()};
    }
    std::ostringstream os;
    os << "total slack " << decimal_string(w.total_gap, 6);
    r.detail = os.str();
    return r;
}

inline CheckResult check_spectral_tau(const Multigraph& g, double rel_tol) {
    CheckResult r{"spectral-tau", CheckStatus::pass, ""};
    const BigInt tau = tau_exact(g);
    const double exact = tau.convert_to<double>();
    const double approx = tau_spectral(g);
    const double err = std::abs(approx - exact) / std::max(1.0, std::abs(exact));
    if (err > rel_tol) {
        std::ostringstream os;
        os << "eigenvalue product " << decimal_string(approx, 12) << " vs exact " << decimal_string(exact, 12)
           << " (relative error " << decimal_string(err, 6) << ")";
        return {r.name, CheckStatus::fail, os.str()};
    }
    std::ostringstream os;
    os << "relative error " << decimal_string(err, 6);
    r.detail = os.str();
    return r;
}

}  // namespace detail

/// Cross-checks every independent route through the library on one graph.
/// Numeric comparisons use 1e-8 scaled by n*Delta; exact routes must agree
/// bit for bit.
inline std::vector<CheckResult> run_verification(const Multigraph& g,
                                                 std::int64_t brute_force_limit = 24) {
    const double scale =
        g.has_edges() ? static_cast<double>(g.order()) * static_cast<double>(max_multiplicity(g)) : 1.0;
    const double tol = 1e-8 * std::max(1.0, scale);

    std::vector<CheckResult> results;
    results.push_back(detail::check_cofactor_invariance(g));
    results.push_back(detail::check_oracle_equivalence(g, brute_force_limit));
    results.push_back(detail::check_complement_spectrum(g, tol));
    results.push_back(detail::check_schur(g, tol));
    results.push_back(detail::check_majorization_chain(g, tol));
    results.push_back(detail::check_spectral_tau(g, 1e-8));
    return results;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
    return std::none_of(results.begin(), results.end(),
                        [](const CheckResult& r) { return r.status == CheckStatus::fail; });
}

}  // namespace treebound

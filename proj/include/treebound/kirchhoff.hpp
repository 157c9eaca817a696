#pragma once

#include "treebound/laplacian.hpp"
#include "treebound/multigraph.hpp"
#include "treebound/numbers.hpp"

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace treebound {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Exact determinant by Bareiss fraction-free elimination with row
/// pivoting. Every intermediate division is exact, so the result is
/// bit-exact for any integer matrix. The empty matrix has determinant 1.
inline BigInt determinant_exact(IntMatrix m) {
    const int k = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != k) throw std::invalid_argument("determinant_exact: matrix must be square");
    if (k == 0) return 1;

    int sign = 1;
    BigInt prev = 1;
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int r = col; r < k; ++r) {
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(col)]);
            sign = -sign;
        }
        auto& lead = m[static_cast<std::size_t>(col)];
        for (int r = col + 1; r < k; ++r) {
            auto& row = m[static_cast<std::size_t>(r)];
            for (int c = col + 1; c < k; ++c) {
                row[static_cast<std::size_t>(c)] =
                    (row[static_cast<std::size_t>(c)] * lead[static_cast<std::size_t>(col)] -
                     row[static_cast<std::size_t>(col)] * lead[static_cast<std::size_t>(c)]) /
                    prev;
            }
            row[static_cast<std::size_t>(col)] = 0;
        }
        prev = lead[static_cast<std::size_t>(col)];
    }
    BigInt det = m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k - 1)];
    return sign < 0 ? BigInt(-det) : det;
}

/// Signed cofactor (-1)^(i+j) * det(L with row i and column j removed).
/// For a Laplacian all cofactors coincide and equal the spanning tree count.
inline BigInt laplacian_cofactor(const LaplacianMatrix& l, int i, int j) {
    if (i < 0 || i >= l.n || j < 0 || j >= l.n) throw std::out_of_range("laplacian_cofactor: index out of range");
    IntMatrix minor;
    minor.reserve(static_cast<std::size_t>(l.n) - 1);
    for (int r = 0; r < l.n; ++r) {
        if (r == i) continue;
        std::vector<BigInt> row;
        row.reserve(static_cast<std::size_t>(l.n) - 1);
        for (int c = 0; c < l.n; ++c) {
            if (c == j) continue;
            row.push_back(l.at(r, c));
        }
        minor.push_back(std::move(row));
    }
    BigInt det = determinant_exact(std::move(minor));
    return ((i + j) % 2 == 0) ? det : BigInt(-det);
}

/// Spanning tree count via the matrix-tree theorem: the (1,1) minor of the
/// Laplacian. Parallel edges yield distinct spanning trees.
inline BigInt tau_exact(const Multigraph& g) {
    if (g.order() == 1) return 1;
    return laplacian_cofactor(laplacian(g), 0, 0);
}

/// Independent oracle: expands multi-edges into distinct parallel instances
/// and counts the (n-1)-subsets of instances that are acyclic. Kept free of
/// any linear algebra so it can cross-check tau_exact.
inline BigInt tau_brute_force(const Multigraph& g, std::int64_t max_instances = 24) {
    if (g.edge_instances() > max_instances)
        throw std::domain_error("tau_brute_force: edge instance count exceeds limit of " +
                                std::to_string(max_instances));
    const int n = g.order();
    if (n == 1) return 1;

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (std::int64_t t = 0; t < g.multiplicity(i, j); ++t) edges.emplace_back(i, j);

    const int need = n - 1;
    if (static_cast<int>(edges.size()) < need) return 0;

    std::vector<int> parent(static_cast<std::size_t>(n));
    std::vector<int> size(static_cast<std::size_t>(n), 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    };

    std::uint64_t count = 0;
    // A forest with n-1 edges is a spanning tree, so acyclicity is the only
    // thing to check while choosing combinations.
    auto recurse = [&](auto&& self, int idx, int chosen) -> void {
        if (chosen == need) {
            ++count;
            return;
        }
        if (static_cast<int>(edges.size()) - idx < need - chosen) return;
        const auto [u, v] = edges[static_cast<std::size_t>(idx)];
        int ru = find(u);
        int rv = find(v);
        if (ru != rv) {
            if (size[static_cast<std::size_t>(ru)] < size[static_cast<std::size_t>(rv)]) std::swap(ru, rv);
            parent[static_cast<std::size_t>(rv)] = ru;
            size[static_cast<std::size_t>(ru)] += size[static_cast<std::size_t>(rv)];
            self(self, idx + 1, chosen + 1);
            size[static_cast<std::size_t>(ru)] -= size[static_cast<std::size_t>(rv)];
            parent[static_cast<std::size_t>(rv)] = rv;
        }
        self(self, idx + 1, chosen);
    };
    recurse(recurse, 0, 0);
    return count;
}

}  // namespace treebound

#pragma once

#include "treebound/multigraph.hpp"
#include "treebound/numbers.hpp"

#include <cstddef>
#include <vector>

namespace treebound {

/// Combinatorial Laplacian L = D - A with multiplicity-weighted adjacency:
/// diagonal entries are vertex degrees, off-diagonal entries are the
/// negated edge multiplicities. Symmetric, rows sum to zero.
struct LaplacianMatrix {
    int n = 0;
    std::vector<BigInt> entries;  // row-major n*n

    const BigInt& at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
    }
};

inline LaplacianMatrix laplacian(const Multigraph& g) {
    const int n = g.order();
    LaplacianMatrix l;
    l.n = n;
    l.entries.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            auto& e = l.entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
            e = (i == j) ? BigInt(g.degree(i)) : BigInt(-g.multiplicity(i, j));
        }
    }
    return l;
}

inline std::vector<std::vector<double>> to_double_matrix(const LaplacianMatrix& l) {
    std::vector<std::vector<double>> m(static_cast<std::size_t>(l.n),
                                       std::vector<double>(static_cast<std::size_t>(l.n), 0.0));
    for (int i = 0; i < l.n; ++i)
        for (int j = 0; j < l.n; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = l.at(i, j).convert_to<double>();
    return m;
}

}  // namespace treebound

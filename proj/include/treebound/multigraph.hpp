#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace treebound {

/// Loop-free undirected multigraph on vertices 0..n-1, stored as a dense
/// symmetric matrix of edge multiplicities. Graphs are built once and then
/// treated as immutable; all operations below are pure functions.
class Multigraph {
public:
    explicit Multigraph(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("Multigraph: vertex count must be at least 1");
        mult_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    }

    int order() const { return n_; }

    std::int64_t multiplicity(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return mult_[index(u, v)];
    }

    void set_multiplicity(int u, int v, std::int64_t m) {
        check_vertex(u);
        check_vertex(v);
        if (m < 0) throw std::invalid_argument("Multigraph: negative multiplicity");
        if (u == v) {
            if (m != 0) throw std::invalid_argument("Multigraph: loops are not allowed");
            return;
        }
        mult_[index(u, v)] = m;
        mult_[index(v, u)] = m;
    }

    void add_edge(int u, int v, std::int64_t m = 1) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Multigraph: loops are not allowed");
        if (m < 1) throw std::invalid_argument("Multigraph: edge multiplicity must be at least 1");
        mult_[index(u, v)] += m;
        mult_[index(v, u)] += m;
    }

    std::int64_t degree(int u) const {
        check_vertex(u);
        std::int64_t d = 0;
        for (int v = 0; v < n_; ++v) d += mult_[index(u, v)];
        return d;
    }

    /// Total edge multiplicity, i.e. the number of parallel-edge instances.
    std::int64_t edge_instances() const {
        std::int64_t total = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) total += mult_[index(i, j)];
        return total;
    }

    bool has_edges() const {
        for (std::int64_t m : mult_)
            if (m != 0) return true;
        return false;
    }

    bool is_simple() const {
        for (std::int64_t m : mult_)
            if (m > 1) return false;
        return true;
    }

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    std::size_t index(int u, int v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    void check_vertex(int u) const {
        if (u < 0 || u >= n_)
            throw std::out_of_range("Multigraph: vertex index " + std::to_string(u) + " out of range");
    }

    int n_;
    std::vector<std::int64_t> mult_;
};

/// Vertex degrees sorted nondecreasing.
inline std::vector<std::int64_t> degree_sequence(const Multigraph& g) {
    std::vector<std::int64_t> d(static_cast<std::size_t>(g.order()));
    for (int u = 0; u < g.order(); ++u) d[static_cast<std::size_t>(u)] = g.degree(u);
    std::sort(d.begin(), d.end());
    return d;
}

/// Largest edge multiplicity. Undefined on edgeless graphs, which are
/// rejected rather than defaulted.
inline std::int64_t max_multiplicity(const Multigraph& g) {
    std::int64_t best = 0;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j) best = std::max(best, g.multiplicity(i, j));
    if (best == 0) throw std::domain_error("max_multiplicity: graph has no edges");
    return best;
}

/// Connectivity of the underlying simple graph. A single vertex counts as
/// connected.
inline bool is_connected(const Multigraph& g) {
    const int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
            if (!seen[static_cast<std::size_t>(v)] && g.multiplicity(u, v) > 0) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

/// Multiplicity complement relative to delta: every off-diagonal entry m
/// becomes delta - m. With delta = 1 this is the ordinary simple-graph
/// complement.
inline Multigraph complement(const Multigraph& g, std::int64_t delta) {
    if (delta < 1) throw std::domain_error("complement: delta must be at least 1");
    Multigraph out(g.order());
    for (int i = 0; i < g.order(); ++i) {
        for (int j = i + 1; j < g.order(); ++j) {
            const std::int64_t m = g.multiplicity(i, j);
            if (m > delta)
                throw std::domain_error("complement: delta is smaller than an edge multiplicity");
            out.set_multiplicity(i, j, delta - m);
        }
    }
    return out;
}

/// Join of two or more graphs: disjoint union plus a single edge between
/// every cross-part vertex pair. Parts keep their internal multiplicities
/// and are laid out in input order.
inline Multigraph join(const std::vector<Multigraph>& parts) {
    if (parts.size() < 2) throw std::invalid_argument("join: need at least two parts");
    int total = 0;
    for (const Multigraph& p : parts) total += p.order();
    Multigraph out(total);
    int offset = 0;
    std::vector<int> offsets;
    for (const Multigraph& p : parts) {
        offsets.push_back(offset);
        for (int i = 0; i < p.order(); ++i)
            for (int j = i + 1; j < p.order(); ++j)
                if (p.multiplicity(i, j) > 0) out.set_multiplicity(offset + i, offset + j, p.multiplicity(i, j));
        offset += p.order();
    }
    for (std::size_t a = 0; a < parts.size(); ++a) {
        for (std::size_t b = a + 1; b < parts.size(); ++b) {
            for (int i = 0; i < parts[a].order(); ++i)
                for (int j = 0; j < parts[b].order(); ++j)
                    out.set_multiplicity(offsets[a] + i, offsets[b] + j, 1);
        }
    }
    return out;
}

/// Cartesian product of two simple graphs. Vertex (i, j) maps to linear
/// index i * order(h) + j; edges move along exactly one coordinate.
inline Multigraph cartesian_product(const Multigraph& g, const Multigraph& h) {
    if (!g.is_simple() || !h.is_simple())
        throw std::invalid_argument("cartesian_product: inputs must be simple graphs");
    const int m = g.order();
    const int n = h.order();
    Multigraph out(m * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (h.multiplicity(j, k) > 0) out.set_multiplicity(i * n + j, i * n + k, 1);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (g.multiplicity(i, j) > 0) out.set_multiplicity(i * n + k, j * n + k, 1);
    return out;
}

}  // namespace treebound

#pragma once

#include "treebound/multigraph.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>

namespace treebound {

inline Multigraph edgeless_graph(int n) { return Multigraph(n); }

inline Multigraph complete_graph(int n) {
    Multigraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.set_multiplicity(i, j, 1);
    return g;
}

inline Multigraph path_graph(int n) {
    Multigraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.set_multiplicity(i, i + 1, 1);
    return g;
}

inline Multigraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    Multigraph g(n);
    for (int i = 0; i < n; ++i) g.set_multiplicity(i, (i + 1) % n, 1);
    return g;
}

inline Multigraph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: parts must be nonempty");
    Multigraph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.set_multiplicity(i, a + j, 1);
    return g;
}

/// Every vertex pair joined by exactly delta parallel edges.
inline Multigraph uniform_complete_multigraph(int n, std::int64_t delta) {
    if (delta < 1) throw std::invalid_argument("uniform_complete_multigraph: delta must be at least 1");
    Multigraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.set_multiplicity(i, j, delta);
    return g;
}

/// Seeded generator with a pinned cross-platform sequence: raw mt19937_64
/// output mapped by plain arithmetic. The standard fixes the engine's
/// output stream; std::*_distribution would not be reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, k). Modulo mapping; the bias is ~2^-60 for the small
    /// ranges used here.
    std::uint64_t below(std::uint64_t k) {
        if (k == 0) throw std::invalid_argument("Rng::below: k must be positive");
        return next() % k;
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool coin() { return (next() & 1u) != 0; }

private:
    std::mt19937_64 engine_;
};

/// Each vertex pair present independently with probability 1/2, one engine
/// draw per pair in row-major (i, j) order.
inline Multigraph random_simple_graph(int n, Rng& rng) {
    Multigraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.coin()) g.set_multiplicity(i, j, 1);
    return g;
}

/// Each vertex pair gets a multiplicity uniform in [0, max_mult], one draw
/// per pair in row-major order.
inline Multigraph random_multigraph(int n, std::int64_t max_mult, Rng& rng) {
    if (max_mult < 1) throw std::invalid_argument("random_multigraph: max_mult must be at least 1");
    Multigraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.set_multiplicity(i, j, static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_mult) + 1)));
    return g;
}

}  // namespace treebound

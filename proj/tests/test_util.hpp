#pragma once

#include <cstdint>
#include <vector>

#include "fvslab/graph.hpp"

namespace fvslab::testutil {

// Deterministic small PRNG so expected values stay frozen.
struct Lcg {
    std::uint64_t state;
    explicit Lcg(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 17;
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

inline Graph random_graph(Lcg& rng, int n, int percent) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.below(100) < percent) es.emplace_back(i, j);
    return Graph::on(n, es);
}

inline Graph random_connected_graph(Lcg& rng, int n, int percent) {
    while (true) {
        Graph g = random_graph(rng, n, percent);
        if (g.is_connected()) return g;
    }
}

// Relabel g by a random permutation of its own vertex ids.
inline Graph shuffled(Lcg& rng, const Graph& g) {
    std::vector<Vertex> perm = g.vertices();
    for (int i = static_cast<int>(perm.size()) - 1; i > 0; --i)
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(rng.below(i + 1))]);
    std::vector<Vertex> pos = g.vertices();
    auto mapped = [&](Vertex v) {
        for (std::size_t k = 0; k < pos.size(); ++k)
            if (pos[k] == v) return perm[k];
        return v;
    };
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) es.emplace_back(mapped(e.u), mapped(e.v));
    return Graph(perm, es);
}

}  // namespace fvslab::testutil

#pragma once

#include <optional>
#include <vector>

#include "fvslab/graph.hpp"

namespace fvslab {

// Length of the shortest cycle; nullopt for acyclic graphs.
// A loop is a 1-cycle, a parallel pair a 2-cycle.
std::optional<int> girth(const Graph& g);

inline bool girth_at_least(const Graph& g, int k) {
    auto gi = girth(g);
    return !gi || *gi >= k;
}

struct BlockDecomposition {
    std::vector<std::vector<Vertex>> blocks;  // vertex sets, each sorted
    std::vector<Vertex> cut_vertices;         // sorted
    std::vector<bool> nontrivial;             // per block: not K1/K2

    bool is_cut_vertex(Vertex v) const;
};

// Maximal connected subgraphs without a cut-vertex.  Input must be
// connected and loop-free (parallel edges are fine).
BlockDecomposition block_decomposition(const Graph& g);

// Blocks of g containing at most one cut vertex, as indices into d.blocks.
std::vector<std::size_t> end_blocks(const Graph& g, const BlockDecomposition& d);

bool is_two_connected(const Graph& g);
std::vector<Edge> cut_edges(const Graph& g);

struct EdgeCut {
    std::vector<Vertex> side_a;  // sorted; contains the least vertex of g
    std::vector<Vertex> side_b;  // sorted
    std::vector<Edge> crossing;  // sorted
    int order() const { return static_cast<int>(crossing.size()); }
};

// Every partition [A,B] of V(g) with at most two crossing edges, one per
// unordered partition, sorted by (order, |A|, A).  g must be connected.
std::vector<EdgeCut> edge_cuts_up_to_order2(const Graph& g);

// 2-edge-connected, and every order-2 cut isolates a single vertex.
bool is_internally_3ec(const Graph& g);

// Vertex sets inducing cycles of length < 5 (loops, parallel pairs,
// triangles, 4-cycles), deduplicated, in deterministic order.
std::vector<std::vector<Vertex>> short_cycles(const Graph& g);

bool has_short_cycle(const Graph& g);

// A pair of vertex-disjoint cycles of length < 5, if one exists.
std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>>
two_disjoint_short_cycles(const Graph& g);

// Max number of internally disjoint paths between distinct s and t,
// capped at `cap` (vertex-capacity max-flow).
int internally_disjoint_paths(const Graph& g, Vertex s, Vertex t, int cap);

}  // namespace fvslab

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace fvslab {

using Vertex = int;

// Unordered vertex pair, stored with u <= v.  A loop has u == v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool is_loop() const { return u == v; }
    Vertex other(Vertex w) const { return w == u ? v : u; }
    bool touches(Vertex w) const { return u == w || v == w; }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable undirected multigraph on small integer vertex ids.
// Edges form a multiset (parallel edges repeat, loops allowed); every
// mutation-flavoured operation returns a fresh Graph.
class Graph {
  public:
    Graph() = default;
    Graph(std::vector<Vertex> vertices, std::vector<Edge> edges);

    // Vertices 0..n-1.
    static Graph on(int n, const std::vector<std::pair<int, int>>& edges = {});

    int vertex_count() const { return static_cast<int>(verts_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return verts_.empty(); }

    const std::vector<Vertex>& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge_at(std::size_t i) const { return edges_[i]; }

    bool has_vertex(Vertex v) const;
    bool has_edge(Vertex a, Vertex b) const { return multiplicity(a, b) > 0; }
    int multiplicity(Vertex a, Vertex b) const;
    int loops_at(Vertex v) const { return multiplicity(v, v); }

    // Loops count twice.
    int degree(Vertex v) const;
    int max_degree() const;
    bool is_subcubic() const { return max_degree() <= 3; }

    // Distinct neighbours, sorted; v itself listed when a loop is present.
    std::vector<Vertex> neighbors(Vertex v) const;

    bool is_simple() const { return simple_; }
    bool is_connected() const;
    std::vector<std::vector<Vertex>> components() const;

    // ---- derived graphs (all keep original vertex ids) ----
    Graph induced(const std::vector<Vertex>& keep) const;
    Graph minus_vertex(Vertex v) const;
    Graph minus_vertices(const std::vector<Vertex>& drop) const;
    Graph minus_edge_at(std::size_t idx) const;
    Graph minus_edge(Vertex a, Vertex b) const;  // one copy; throws if absent
    Graph plus_edge(Vertex a, Vertex b) const;
    Graph plus_vertex(Vertex v) const;

    // Replace edge idx by a length-2 path through a fresh vertex.
    // Subdividing a loop yields a parallel pair.
    Graph subdivide_edge_at(std::size_t idx, Vertex* fresh = nullptr) const;
    std::size_t edge_index(Vertex a, Vertex b) const;  // first copy; throws if absent

    // The family operation: subdivide e1 and e2 once each (twice when
    // e1 == e2) and attach a fresh vertex to both subdivision vertices and
    // to a, which must have degree exactly two.
    Graph circ(std::size_t e1, std::size_t e2, Vertex a) const;

    // Remove a degree-2 vertex and join its two neighbours directly.
    // The neighbours must be distinct and non-adjacent (result stays simple).
    Graph suppress(Vertex v) const;

    Vertex fresh_vertex() const { return verts_.empty() ? 0 : verts_.back() + 1; }

    // Same graph on vertices 0..n-1 (order-preserving relabel).
    Graph compacted(std::vector<Vertex>* new_to_old = nullptr) const;

    // "n m" header plus one "u v" line per edge copy ("u u" = loop).
    std::string to_adjacency_text() const;

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    std::vector<Vertex> verts_;  // sorted, unique
    std::vector<Edge> edges_;    // sorted multiset
    std::vector<int> degrees_;   // parallel to verts_
    bool simple_ = true;

    int vertex_pos(Vertex v) const;  // -1 if absent
    void finish();                   // sort, derive degrees_/simple_, validate
};

}  // namespace fvslab

#include "fvslab/graph.hpp"

#include <algorithm>
#include <sstream>

#include "fvslab/errors.hpp"

namespace fvslab {

Graph::Graph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : verts_(std::move(vertices)), edges_(std::move(edges)) {
    finish();
}

Graph Graph::on(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Vertex> vs(n);
    for (int i = 0; i < n; ++i) vs[i] = i;
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (auto [a, b] : edges) es.emplace_back(a, b);
    return Graph(std::move(vs), std::move(es));
}

void Graph::finish() {
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    std::sort(edges_.begin(), edges_.end());

    degrees_.assign(verts_.size(), 0);
    simple_ = true;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        int pu = vertex_pos(e.u), pv = vertex_pos(e.v);
        if (pu < 0 || pv < 0)
            throw DomainError("edge endpoint is not a vertex of the graph");
        if (e.is_loop()) {
            degrees_[pu] += 2;
            simple_ = false;
        } else {
            degrees_[pu] += 1;
            degrees_[pv] += 1;
        }
        if (i > 0 && edges_[i] == edges_[i - 1]) simple_ = false;
    }
}

int Graph::vertex_pos(Vertex v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v) return -1;
    return static_cast<int>(it - verts_.begin());
}

bool Graph::has_vertex(Vertex v) const { return vertex_pos(v) >= 0; }

int Graph::multiplicity(Vertex a, Vertex b) const {
    Edge e(a, b);
    auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), e);
    return static_cast<int>(hi - lo);
}

int Graph::degree(Vertex v) const {
    int p = vertex_pos(v);
    if (p < 0) throw DomainError("degree of a vertex not in the graph");
    return degrees_[p];
}

int Graph::max_degree() const {
    int d = 0;
    for (int x : degrees_) d = std::max(d, x);
    return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (const Edge& e : edges_) {
        if (e.u == v || e.v == v) out.push_back(e.is_loop() ? v : e.other(v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Graph::is_connected() const {
    if (verts_.empty()) return false;
    return components().size() == 1;
}

std::vector<std::vector<Vertex>> Graph::components() const {
    const int n = vertex_count();
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : edges_) {
        if (e.is_loop()) continue;
        int pu = vertex_pos(e.u), pv = vertex_pos(e.v);
        adj[pu].push_back(pv);
        adj[pv].push_back(pu);
    }
    std::vector<int> comp(n, -1);
    std::vector<std::vector<Vertex>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = static_cast<int>(out.size());
        out.emplace_back();
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            out.back().push_back(verts_[x]);
            for (int y : adj[x]) {
                if (comp[y] < 0) {
                    comp[y] = comp[x];
                    stack.push_back(y);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

Graph Graph::induced(const std::vector<Vertex>& keep) const {
    std::vector<Vertex> vs = keep;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (Vertex v : vs) {
        if (!has_vertex(v)) throw DomainError("induced: vertex not in graph");
    }
    std::vector<Edge> es;
    for (const Edge& e : edges_) {
        bool ku = std::binary_search(vs.begin(), vs.end(), e.u);
        bool kv = std::binary_search(vs.begin(), vs.end(), e.v);
        if (ku && kv) es.push_back(e);
    }
    return Graph(std::move(vs), std::move(es));
}

Graph Graph::minus_vertex(Vertex v) const { return minus_vertices({v}); }

Graph Graph::minus_vertices(const std::vector<Vertex>& drop) const {
    std::vector<Vertex> ds = drop;
    std::sort(ds.begin(), ds.end());
    std::vector<Vertex> vs;
    for (Vertex v : verts_)
        if (!std::binary_search(ds.begin(), ds.end(), v)) vs.push_back(v);
    return induced(vs);
}

Graph Graph::minus_edge_at(std::size_t idx) const {
    if (idx >= edges_.size()) throw DomainError("minus_edge_at: index out of range");
    std::vector<Edge> es = edges_;
    es.erase(es.begin() + static_cast<std::ptrdiff_t>(idx));
    return Graph(verts_, std::move(es));
}

std::size_t Graph::edge_index(Vertex a, Vertex b) const {
    Edge e(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) throw DomainError("edge not present in graph");
    return static_cast<std::size_t>(it - edges_.begin());
}

Graph Graph::minus_edge(Vertex a, Vertex b) const { return minus_edge_at(edge_index(a, b)); }

Graph Graph::plus_edge(Vertex a, Vertex b) const {
    std::vector<Edge> es = edges_;
    es.emplace_back(a, b);
    return Graph(verts_, std::move(es));
}

Graph Graph::plus_vertex(Vertex v) const {
    std::vector<Vertex> vs = verts_;
    vs.push_back(v);
    return Graph(std::move(vs), edges_);
}

Graph Graph::subdivide_edge_at(std::size_t idx, Vertex* fresh) const {
    if (idx >= edges_.size()) throw DomainError("subdivide: edge index out of range");
    Edge e = edges_[idx];
    Vertex w = fresh_vertex();
    if (fresh) *fresh = w;
    std::vector<Vertex> vs = verts_;
    vs.push_back(w);
    std::vector<Edge> es = edges_;
    es.erase(es.begin() + static_cast<std::ptrdiff_t>(idx));
    es.emplace_back(e.u, w);
    es.emplace_back(w, e.v);
    return Graph(std::move(vs), std::move(es));
}

Graph Graph::circ(std::size_t e1, std::size_t e2, Vertex a) const {
    if (e1 >= edges_.size() || e2 >= edges_.size())
        throw DomainError("circ: edge index out of range");
    if (!has_vertex(a) || degree(a) != 2)
        throw DomainError("circ: attachment vertex must have degree exactly two");

    Vertex w1 = fresh_vertex();
    Vertex w2 = w1 + 1;
    Vertex c = w1 + 2;
    std::vector<Vertex> vs = verts_;
    vs.insert(vs.end(), {w1, w2, c});
    std::vector<Edge> es = edges_;

    if (e1 == e2) {
        // One edge subdivided twice: u - w1 - w2 - v.
        Edge e = edges_[e1];
        es.erase(es.begin() + static_cast<std::ptrdiff_t>(e1));
        es.emplace_back(e.u, w1);
        es.emplace_back(w1, w2);
        es.emplace_back(w2, e.v);
    } else {
        Edge f1 = edges_[e1], f2 = edges_[e2];
        std::size_t hi = std::max(e1, e2), lo = std::min(e1, e2);
        es.erase(es.begin() + static_cast<std::ptrdiff_t>(hi));
        es.erase(es.begin() + static_cast<std::ptrdiff_t>(lo));
        es.emplace_back(f1.u, w1);
        es.emplace_back(w1, f1.v);
        es.emplace_back(f2.u, w2);
        es.emplace_back(w2, f2.v);
    }
    es.emplace_back(c, a);
    es.emplace_back(c, w1);
    es.emplace_back(c, w2);
    return Graph(std::move(vs), std::move(es));
}

Graph Graph::suppress(Vertex v) const {
    if (!has_vertex(v) || degree(v) != 2 || loops_at(v) > 0)
        throw DomainError("suppress: vertex must have two distinct incident edges");
    std::vector<Vertex> nb;
    for (const Edge& e : edges_)
        if (e.touches(v)) nb.push_back(e.other(v));
    if (nb[0] == nb[1] || has_edge(nb[0], nb[1]))
        throw DomainError("suppress: neighbours must be distinct and non-adjacent");
    std::vector<Vertex> vs;
    for (Vertex x : verts_)
        if (x != v) vs.push_back(x);
    std::vector<Edge> es;
    for (const Edge& e : edges_)
        if (!e.touches(v)) es.push_back(e);
    es.emplace_back(nb[0], nb[1]);
    return Graph(std::move(vs), std::move(es));
}

Graph Graph::compacted(std::vector<Vertex>* new_to_old) const {
    if (new_to_old) *new_to_old = verts_;
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (const Edge& e : edges_)
        es.emplace_back(vertex_pos(e.u), vertex_pos(e.v));
    std::vector<Vertex> vs(verts_.size());
    for (std::size_t i = 0; i < vs.size(); ++i) vs[i] = static_cast<Vertex>(i);
    return Graph(std::move(vs), std::move(es));
}

std::string Graph::to_adjacency_text() const {
    Graph c = compacted();
    std::ostringstream os;
    os << c.vertex_count() << ' ' << c.edge_count() << '\n';
    for (const Edge& e : c.edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

}  // namespace fvslab

#include "fvslab/structure.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <set>

#include "fvslab/errors.hpp"

namespace fvslab {

namespace {

// Compact adjacency as (neighbor position, edge index) pairs; loops excluded.
struct Adj {
    std::vector<Vertex> verts;
    std::vector<std::vector<std::pair<int, int>>> nbr;

    explicit Adj(const Graph& g) : verts(g.vertices()), nbr(g.vertices().size()) {
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
            const Edge& e = g.edge_at(i);
            if (e.is_loop()) continue;
            int pu = pos(e.u), pv = pos(e.v);
            nbr[pu].emplace_back(pv, static_cast<int>(i));
            nbr[pv].emplace_back(pu, static_cast<int>(i));
        }
    }
    int pos(Vertex v) const {
        return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    }
};

}  // namespace

std::optional<int> girth(const Graph& g) {
    if (g.empty()) throw DomainError("girth: empty graph");
    for (const Edge& e : g.edges())
        if (e.is_loop()) return 1;
    for (std::size_t i = 0; i + 1 < g.edges().size(); ++i)
        if (g.edge_at(i) == g.edge_at(i + 1)) return 2;

    // Simple graph: shortest cycle through edge e = 1 + dist(u,v) in g - e.
    Adj adj(g);
    const int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
        const Edge& e = g.edge_at(ei);
        int src = adj.pos(e.u), dst = adj.pos(e.v);
        std::vector<int> dist(n, -1);
        dist[src] = 0;
        std::queue<int> q;
        q.push(src);
        while (!q.empty() && dist[dst] < 0) {
            int x = q.front();
            q.pop();
            if (1 + dist[x] >= best) break;  // cannot improve
            for (auto [y, idx] : adj.nbr[x]) {
                if (idx == static_cast<int>(ei) || dist[y] >= 0) continue;
                dist[y] = dist[x] + 1;
                q.push(y);
            }
        }
        if (dist[dst] >= 0) best = std::min(best, dist[dst] + 1);
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

bool BlockDecomposition::is_cut_vertex(Vertex v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

BlockDecomposition block_decomposition(const Graph& g) {
    if (!g.is_connected()) throw DomainError("block_decomposition: graph must be connected");
    for (const Edge& e : g.edges())
        if (e.is_loop()) throw DomainError("block_decomposition: loops are not supported");

    const int n = g.vertex_count();
    BlockDecomposition out;
    if (n == 1) {
        out.blocks.push_back({g.vertices()[0]});
        out.nontrivial.push_back(false);
        return out;
    }

    Adj adj(g);
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> estack;  // edges as (pos,pos)
    std::set<Vertex> cuts;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent_edge) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (auto [v, idx] : adj.nbr[u]) {
            if (idx == parent_edge) continue;
            if (disc[v] < 0) {
                ++children;
                estack.emplace_back(u, v);
                dfs(v, idx);
                low[u] = std::min(low[u], low[v]);
                if ((parent_edge >= 0 && low[v] >= disc[u]) || (parent_edge < 0 && children > 1))
                    cuts.insert(adj.verts[u]);
                if (low[v] >= disc[u]) {
                    std::set<Vertex> blk;
                    while (true) {
                        auto [a, b] = estack.back();
                        estack.pop_back();
                        blk.insert(adj.verts[a]);
                        blk.insert(adj.verts[b]);
                        if (a == u && b == v) break;
                    }
                    out.blocks.emplace_back(blk.begin(), blk.end());
                }
            } else if (disc[v] < disc[u]) {
                estack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };
    dfs(0, -1);

    out.cut_vertices.assign(cuts.begin(), cuts.end());
    std::sort(out.blocks.begin(), out.blocks.end());
    for (const auto& blk : out.blocks) {
        bool nt = blk.size() >= 3 ||
                  (blk.size() == 2 && g.multiplicity(blk[0], blk[1]) >= 2);
        out.nontrivial.push_back(nt);
    }
    return out;
}

std::vector<std::size_t> end_blocks(const Graph& g, const BlockDecomposition& d) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        int cuts = 0;
        for (Vertex v : d.blocks[i])
            if (d.is_cut_vertex(v)) ++cuts;
        if (cuts <= 1) out.push_back(i);
    }
    (void)g;
    return out;
}

bool is_two_connected(const Graph& g) {
    if (g.vertex_count() < 3 || !g.is_connected()) return false;
    return block_decomposition(g).cut_vertices.empty();
}

std::vector<Edge> cut_edges(const Graph& g) {
    Adj adj(g);
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> out;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int u, int parent_edge) {
        disc[u] = low[u] = timer++;
        for (auto [v, idx] : adj.nbr[u]) {
            if (idx == parent_edge) continue;
            if (disc[v] < 0) {
                dfs(v, idx);
                low[u] = std::min(low[u], low[v]);
                if (low[v] > disc[u]) out.push_back(g.edge_at(static_cast<std::size_t>(idx)));
            } else {
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };
    for (int s = 0; s < n; ++s)
        if (disc[s] < 0) dfs(s, -1);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<std::vector<Vertex>> components_minus_edges(const Graph& g,
                                                        const std::vector<std::size_t>& skip) {
    Adj adj(g);
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<Vertex>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            out.back().push_back(adj.verts[x]);
            for (auto [y, idx] : adj.nbr[x]) {
                if (std::find(skip.begin(), skip.end(), static_cast<std::size_t>(idx)) !=
                    skip.end())
                    continue;
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

}  // namespace

std::vector<EdgeCut> edge_cuts_up_to_order2(const Graph& g) {
    if (!g.is_connected()) throw DomainError("edge_cuts_up_to_order2: graph must be connected");
    const Vertex least = g.vertices().front();
    std::map<std::vector<Vertex>, EdgeCut> seen;  // keyed by canonical side_a

    auto consider = [&](const std::vector<Vertex>& part) {
        // part is one side; canonical side_a holds the least vertex.
        std::vector<Vertex> a = part, b;
        for (Vertex v : g.vertices())
            if (!std::binary_search(a.begin(), a.end(), v)) b.push_back(v);
        if (a.empty() || b.empty()) return;
        if (!std::binary_search(a.begin(), a.end(), least)) std::swap(a, b);
        std::vector<Edge> cross;
        for (const Edge& e : g.edges()) {
            if (e.is_loop()) continue;
            bool ua = std::binary_search(a.begin(), a.end(), e.u);
            bool va = std::binary_search(a.begin(), a.end(), e.v);
            if (ua != va) cross.push_back(e);
        }
        if (cross.size() > 2) return;
        seen.emplace(a, EdgeCut{a, b, cross});
    };

    const std::size_t m = g.edges().size();
    std::vector<std::size_t> nonloop;
    for (std::size_t i = 0; i < m; ++i)
        if (!g.edge_at(i).is_loop()) nonloop.push_back(i);

    for (std::size_t x = 0; x < nonloop.size(); ++x) {
        for (std::size_t y = x; y < nonloop.size(); ++y) {
            std::vector<std::size_t> skip{nonloop[x]};
            if (y != x) skip.push_back(nonloop[y]);
            auto comps = components_minus_edges(g, skip);
            if (comps.size() < 2) continue;
            // Every union of a proper nonempty subset of components is a side.
            const std::size_t k = comps.size();
            for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
                std::vector<Vertex> side;
                for (std::size_t c = 0; c < k; ++c)
                    if (mask & (std::size_t{1} << c))
                        side.insert(side.end(), comps[c].begin(), comps[c].end());
                std::sort(side.begin(), side.end());
                consider(side);
            }
        }
    }

    std::vector<EdgeCut> out;
    for (auto& [key, cut] : seen) out.push_back(std::move(cut));
    std::sort(out.begin(), out.end(), [](const EdgeCut& l, const EdgeCut& r) {
        if (l.order() != r.order()) return l.order() < r.order();
        if (l.side_a.size() != r.side_a.size()) return l.side_a.size() < r.side_a.size();
        return l.side_a < r.side_a;
    });
    return out;
}

bool is_internally_3ec(const Graph& g) {
    if (!g.is_connected()) throw DomainError("is_internally_3ec: graph must be connected");
    if (!cut_edges(g).empty()) return false;
    for (const EdgeCut& cut : edge_cuts_up_to_order2(g)) {
        if (cut.order() <= 1) return false;
        if (cut.side_a.size() > 1 && cut.side_b.size() > 1) return false;
    }
    return true;
}

std::vector<std::vector<Vertex>> short_cycles(const Graph& g) {
    std::set<std::vector<Vertex>> found;
    const auto& vs = g.vertices();
    const int n = g.vertex_count();

    for (const Edge& e : g.edges())
        if (e.is_loop()) found.insert({e.u});
    for (std::size_t i = 0; i + 1 < g.edges().size(); ++i)
        if (g.edge_at(i) == g.edge_at(i + 1) && !g.edge_at(i).is_loop())
            found.insert({g.edge_at(i).u, g.edge_at(i).v});

    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        int pu = static_cast<int>(std::lower_bound(vs.begin(), vs.end(), e.u) - vs.begin());
        int pv = static_cast<int>(std::lower_bound(vs.begin(), vs.end(), e.v) - vs.begin());
        adj[pu][pv] = adj[pv][pu] = true;
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!adj[a][b]) continue;
            for (int c = b + 1; c < n; ++c)
                if (adj[a][c] && adj[b][c]) found.insert({vs[a], vs[b], vs[c]});
        }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    bool any = (adj[a][b] && adj[b][c] && adj[c][d] && adj[d][a]) ||
                               (adj[a][b] && adj[b][d] && adj[d][c] && adj[c][a]) ||
                               (adj[a][c] && adj[c][b] && adj[b][d] && adj[d][a]);
                    if (any) found.insert({vs[a], vs[b], vs[c], vs[d]});
                }

    return {found.begin(), found.end()};
}

bool has_short_cycle(const Graph& g) { return !short_cycles(g).empty(); }

std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>>
two_disjoint_short_cycles(const Graph& g) {
    auto cycles = short_cycles(g);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        for (std::size_t j = i + 1; j < cycles.size(); ++j) {
            std::vector<Vertex> inter;
            std::set_intersection(cycles[i].begin(), cycles[i].end(), cycles[j].begin(),
                                  cycles[j].end(), std::back_inserter(inter));
            if (inter.empty()) return std::make_pair(cycles[i], cycles[j]);
        }
    }
    return std::nullopt;
}

int internally_disjoint_paths(const Graph& g, Vertex s, Vertex t, int cap) {
    if (s == t || !g.has_vertex(s) || !g.has_vertex(t))
        throw DomainError("internally_disjoint_paths: need two distinct vertices of g");
    // Vertex-split max flow: node v -> (2v rin, 2v+1 out), internal arc cap 1
    // (infinite at s and t), each edge copy cap 1 both ways.
    const auto& vs = g.vertices();
    const int n = g.vertex_count();
    auto pos = [&](Vertex v) {
        return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    struct Arc {
        int to, rev, cap;
    };
    std::vector<std::vector<Arc>> net(2 * static_cast<std::size_t>(n));
    auto add_arc = [&](int a, int b, int c) {
        net[a].push_back({b, static_cast<int>(net[b].size()), c});
        net[b].push_back({a, static_cast<int>(net[a].size()) - 1, 0});
    };
    const int big = 1000000;
    for (int i = 0; i < n; ++i) {
        bool terminal = vs[i] == s || vs[i] == t;
        add_arc(2 * i, 2 * i + 1, terminal ? big : 1);
    }
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        int pu = pos(e.u), pv = pos(e.v);
        add_arc(2 * pu + 1, 2 * pv, 1);
        add_arc(2 * pv + 1, 2 * pu, 1);
    }
    const int src = 2 * pos(s), dst = 2 * pos(t) + 1;
    int flow = 0;
    while (flow < cap) {
        std::vector<std::pair<int, int>> pred(net.size(), {-1, -1});
        std::queue<int> q;
        q.push(src);
        pred[src] = {src, 0};
        while (!q.empty() && pred[dst].first < 0) {
            int x = q.front();
            q.pop();
            for (std::size_t ai = 0; ai < net[x].size(); ++ai) {
                const Arc& a = net[x][ai];
                if (a.cap > 0 && pred[a.to].first < 0) {
                    pred[a.to] = {x, static_cast<int>(ai)};
                    q.push(a.to);
                }
            }
        }
        if (pred[dst].first < 0) break;
        for (int x = dst; x != src;) {
            auto [px, pai] = pred[x];
            Arc& a = net[px][pai];
            a.cap -= 1;
            net[x][a.rev].cap += 1;
            x = px;
        }
        ++flow;
    }
    return flow;
}

}  // namespace fvslab

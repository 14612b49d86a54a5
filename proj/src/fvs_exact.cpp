#include "fvslab/fvs_exact.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <queue>

#include "fvslab/errors.hpp"

namespace fvslab {

namespace {

long long now_ms() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(steady_clock::now().time_since_epoch()).count();
}

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        parent[static_cast<std::size_t>(rx)] = ry;
        return true;
    }
};

bool acyclic_without(const Graph& g, const std::vector<Vertex>& removed) {
    DisjointSet ds(g.vertex_count());
    const auto& vs = g.vertices();
    auto pos = [&](Vertex v) {
        return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    for (const Edge& e : g.edges()) {
        if (std::binary_search(removed.begin(), removed.end(), e.u) ||
            std::binary_search(removed.begin(), removed.end(), e.v))
            continue;
        if (e.is_loop() || !ds.unite(pos(e.u), pos(e.v))) return false;
    }
    return true;
}

}  // namespace

bool is_feedback_vertex_set(const Graph& g, const std::vector<Vertex>& s) {
    std::vector<Vertex> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v : sorted)
        if (!g.has_vertex(v)) throw DomainError("is_feedback_vertex_set: set not within V(g)");
    return acyclic_without(g, sorted);
}

FvsResult min_fvs_bruteforce(const Graph& g, int vertex_cap) {
    const int n = g.vertex_count();
    if (n > vertex_cap)
        throw ResourceError("min_fvs_bruteforce: graph exceeds the " + std::to_string(vertex_cap) +
                            "-vertex cap");
    long long t0 = now_ms();
    const auto& vs = g.vertices();
    for (int k = 0; k <= n; ++k) {
        // Lexicographic k-combinations of vertex positions.
        std::vector<int> comb(static_cast<std::size_t>(k));
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            std::vector<Vertex> pick;
            pick.reserve(static_cast<std::size_t>(k));
            for (int p : comb) pick.push_back(vs[static_cast<std::size_t>(p)]);
            if (acyclic_without(g, pick)) return {k, pick, "brute_force", now_ms() - t0};
            int i = k - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    throw IntegrityError("min_fvs_bruteforce: no feedback vertex set found");  // unreachable
}

namespace {

// Mutable multigraph state for the branch and bound.  Multiplicities are
// capped at 2: extra parallel copies force nothing new.
struct BnbState {
    int n;
    std::vector<std::uint8_t> mult;  // n*n, loops on the diagonal
    std::vector<int> deg;            // loops count twice
    std::uint64_t alive = 0, forbidden = 0;

    std::uint8_t& at(int a, int b) { return mult[static_cast<std::size_t>(a * n + b)]; }
    std::uint8_t get(int a, int b) const { return mult[static_cast<std::size_t>(a * n + b)]; }

    void add_edge(int a, int b) {
        if (a == b) {
            if (at(a, a) < 2) {
                ++at(a, a);
                deg[static_cast<std::size_t>(a)] += 2;
            }
        } else if (at(a, b) < 2) {
            ++at(a, b);
            ++at(b, a);
            ++deg[static_cast<std::size_t>(a)];
            ++deg[static_cast<std::size_t>(b)];
        }
    }

    void remove_vertex(int v) {
        for (int u = 0; u < n; ++u) {
            if (u == v || !get(v, u)) continue;
            deg[static_cast<std::size_t>(u)] -= get(v, u);
            at(u, v) = 0;
        }
        deg[static_cast<std::size_t>(v)] = 0;
        for (int u = 0; u < n; ++u) at(v, u) = 0;
        alive &= ~(std::uint64_t{1} << v);
    }

    bool is_alive(int v) const { return (alive >> v) & 1; }
    bool is_forbidden(int v) const { return (forbidden >> v) & 1; }
};

// Shortest cycle as a vertex list; empty when acyclic.  Deterministic:
// loops first, then parallel pairs, then BFS per edge in ascending order.
std::vector<int> shortest_cycle(const BnbState& s) {
    for (int v = 0; v < s.n; ++v)
        if (s.is_alive(v) && s.get(v, v)) return {v};
    for (int u = 0; u < s.n; ++u)
        for (int v = u + 1; v < s.n; ++v)
            if (s.is_alive(u) && s.is_alive(v) && s.get(u, v) >= 2) return {u, v};

    std::vector<int> best;
    for (int u = 0; u < s.n && (best.empty() || best.size() > 3); ++u) {
        if (!s.is_alive(u)) continue;
        for (int v = u + 1; v < s.n; ++v) {
            if (!s.is_alive(v) || !s.get(u, v)) continue;
            // Shortest u-v path avoiding the edge uv itself.
            std::vector<int> par(static_cast<std::size_t>(s.n), -2);
            par[static_cast<std::size_t>(u)] = -1;
            std::queue<int> q;
            q.push(u);
            while (!q.empty() && par[static_cast<std::size_t>(v)] == -2) {
                int x = q.front();
                q.pop();
                for (int y = 0; y < s.n; ++y) {
                    if (!s.is_alive(y) || y == x || !s.get(x, y)) continue;
                    if (x == u && y == v) continue;
                    if (par[static_cast<std::size_t>(y)] != -2) continue;
                    par[static_cast<std::size_t>(y)] = x;
                    q.push(y);
                }
            }
            if (par[static_cast<std::size_t>(v)] == -2) continue;
            std::vector<int> cyc;
            for (int w = v; w != -1; w = par[static_cast<std::size_t>(w)]) cyc.push_back(w);
            if (best.empty() || cyc.size() < best.size()) best = cyc;
            if (best.size() == 3) break;
        }
    }
    return best;
}

struct BnbDriver {
    std::vector<Vertex> labels;
    std::vector<int> best;  // positions
    bool have_best = false;
    long long deadline = -1;
    long long nodes = 0;

    void check_time() const {
        if (deadline >= 0 && now_ms() > deadline)
            throw ResourceError("min_fvs_exact: timeout; best known upper bound " +
                                std::to_string(best.size()));
    }

    // Loop vertices enter the solution, degree <= 1 vertices leave the
    // graph, degree-2 vertices are bypassed.  False when a forbidden vertex
    // acquires a loop (infeasible branch).
    static bool reduce(BnbState& s, std::vector<int>& taken, bool respect_forbidden) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < s.n; ++v) {
                if (!s.is_alive(v)) continue;
                if (s.get(v, v)) {
                    if (respect_forbidden && s.is_forbidden(v)) return false;
                    taken.push_back(v);
                    s.remove_vertex(v);
                    changed = true;
                } else if (s.deg[static_cast<std::size_t>(v)] <= 1) {
                    s.remove_vertex(v);
                    changed = true;
                } else if (s.deg[static_cast<std::size_t>(v)] == 2) {
                    int a = -1, b = -1;
                    for (int u = 0; u < s.n; ++u) {
                        if (u == v || !s.get(v, u)) continue;
                        if (a < 0) a = u;
                        b = u;
                        if (s.get(v, u) == 2) a = b = u;  // parallel pair through v
                    }
                    s.remove_vertex(v);
                    s.add_edge(a, b);
                    changed = true;
                }
            }
        }
        return true;
    }

    static int packing_lower_bound(BnbState s) {
        int count = 0;
        while (true) {
            auto cyc = shortest_cycle(s);
            if (cyc.empty()) break;
            for (int v : cyc) s.remove_vertex(v);
            ++count;
        }
        return count;
    }

    void offer(const std::vector<int>& taken) {
        if (!have_best || taken.size() < best.size()) {
            best = taken;
            have_best = true;
        }
    }

    void greedy_upper_bound(BnbState s) {
        std::vector<int> taken;
        while (true) {
            reduce(s, taken, false);
            if (!s.alive) break;
            int v = -1;
            for (int u = 0; u < s.n; ++u)
                if (s.is_alive(u) && (v < 0 || s.deg[static_cast<std::size_t>(u)] >
                                                   s.deg[static_cast<std::size_t>(v)]))
                    v = u;
            taken.push_back(v);
            s.remove_vertex(v);
        }
        offer(taken);
    }

    void search(BnbState s, std::vector<int> taken) {
        ++nodes;
        if ((nodes & 0x3ff) == 0) check_time();
        if (!reduce(s, taken, true)) return;
        if (have_best && taken.size() >= best.size()) return;
        if (!s.alive) {
            offer(taken);
            return;
        }
        int lb = packing_lower_bound(s);
        if (have_best && taken.size() + static_cast<std::size_t>(lb) >= best.size()) return;

        // Some vertex of every cycle is in any feedback vertex set; branch i
        // takes cyc[i] and forbids cyc[0..i) to avoid revisiting overlaps.
        auto cyc = shortest_cycle(s);
        if (cyc.empty()) throw IntegrityError("bnb: min degree 3 but no cycle found");
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int v = cyc[i];
            if (s.is_forbidden(v)) continue;
            BnbState next = s;
            for (std::size_t j = 0; j < i; ++j) next.forbidden |= std::uint64_t{1} << cyc[j];
            std::vector<int> ntaken = taken;
            ntaken.push_back(v);
            next.remove_vertex(v);
            search(std::move(next), std::move(ntaken));
        }
    }
};

}  // namespace

FvsResult min_fvs_exact(const Graph& g, std::optional<long long> timeout_ms) {
    if (g.vertex_count() > 64) throw ResourceError("min_fvs_exact: more than 64 vertices");
    long long t0 = now_ms();

    BnbDriver drv;
    Graph c = g.compacted(&drv.labels);
    BnbState s;
    s.n = c.vertex_count();
    s.mult.assign(static_cast<std::size_t>(s.n) * static_cast<std::size_t>(s.n), 0);
    s.deg.assign(static_cast<std::size_t>(s.n), 0);
    for (int v = 0; v < s.n; ++v) s.alive |= std::uint64_t{1} << v;
    for (const Edge& e : c.edges()) s.add_edge(e.u, e.v);

    if (timeout_ms) drv.deadline = t0 + *timeout_ms;
    drv.greedy_upper_bound(s);
    drv.search(s, {});

    std::vector<Vertex> witness;
    witness.reserve(drv.best.size());
    for (int p : drv.best) witness.push_back(drv.labels[static_cast<std::size_t>(p)]);
    std::sort(witness.begin(), witness.end());
    return {static_cast<int>(witness.size()), witness, "branch_and_bound", now_ms() - t0};
}

}  // namespace fvslab

#include "fvslab/canonical.hpp"

#include <algorithm>
#include <cstdint>

#include "fvslab/errors.hpp"

namespace fvslab {

namespace {

// Search state over a compacted graph given by its multiplicity matrix.
struct CanonSearch {
    int n;
    const std::vector<std::vector<std::uint8_t>>& mat;
    std::vector<std::uint8_t> best;      // best full adjacency string so far
    std::vector<int> best_order;
    bool have_best = false;

    using Partition = std::vector<std::vector<int>>;  // ordered cells

    CanonSearch(int n_, const std::vector<std::vector<std::uint8_t>>& m) : n(n_), mat(m) {}

    // Split cells by neighbourhood signatures until stable.  Cell order is
    // label-independent: sub-cells are ordered by signature value.
    void refine(Partition& cells) const {
        while (true) {
            std::vector<int> cell_of(static_cast<std::size_t>(n), 0);
            for (std::size_t c = 0; c < cells.size(); ++c)
                for (int v : cells[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);

            Partition next;
            next.reserve(cells.size());
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                // Signature: loops plus multiset of (cell of neighbour, multiplicity).
                std::vector<std::pair<std::vector<int>, int>> sigs;
                sigs.reserve(cell.size());
                for (int v : cell) {
                    std::vector<int> sig;
                    sig.push_back(mat[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)]);
                    std::vector<std::pair<int, int>> nb;
                    for (int u = 0; u < n; ++u) {
                        if (u == v) continue;
                        int mult = mat[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
                        if (mult > 0) nb.emplace_back(cell_of[static_cast<std::size_t>(u)], mult);
                    }
                    std::sort(nb.begin(), nb.end());
                    for (auto [c, mult] : nb) {
                        sig.push_back(c);
                        sig.push_back(mult);
                    }
                    sigs.emplace_back(std::move(sig), v);
                }
                std::sort(sigs.begin(), sigs.end());
                std::vector<int> cur{sigs[0].second};
                for (std::size_t i = 1; i < sigs.size(); ++i) {
                    if (sigs[i].first != sigs[i - 1].first) {
                        next.push_back(cur);
                        cur.clear();
                    }
                    cur.push_back(sigs[i].second);
                }
                next.push_back(cur);
            }
            if (next == cells) return;
            cells = std::move(next);
        }
    }

    // Adjacency string contribution of placing vertex v at position p given
    // prefix `order[0..p)`: loops(v), then mult(v, order[q]) for q < p.
    void append_row(std::vector<std::uint8_t>& s, const std::vector<int>& order, int v) const {
        s.push_back(mat[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)]);
        for (int q : order)
            s.push_back(mat[static_cast<std::size_t>(v)][static_cast<std::size_t>(q)]);
    }

    // -1: prefix beats best, 0: equal so far, 1: worse than best.
    int compare_prefix(const std::vector<std::uint8_t>& s) const {
        if (!have_best) return -1;
        auto mismatch = std::mismatch(s.begin(), s.end(), best.begin());
        if (mismatch.first == s.end()) return 0;
        return *mismatch.first < *mismatch.second ? -1 : 1;
    }

    // `consumed` leading cells of `cells` are singletons already reflected in
    // order/prefix.  Placed vertices stay in the partition so refinement can
    // use them as distinct colours.
    void search(const Partition& cells, std::size_t consumed, std::vector<int> order,
                std::vector<std::uint8_t> prefix) {
        std::size_t at = consumed;
        while (at < cells.size() && cells[at].size() == 1) {
            int v = cells[at][0];
            append_row(prefix, order, v);
            order.push_back(v);
            ++at;
        }
        int cmp = compare_prefix(prefix);
        if (cmp > 0) return;
        if (at == cells.size()) {
            if (!have_best || cmp < 0) {
                best = prefix;
                best_order = order;
                have_best = true;
            }
            return;
        }
        const std::vector<int>& target = cells[at];
        for (int v : target) {
            Partition next(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(at));
            next.push_back({v});
            std::vector<int> rest;
            for (int u : target)
                if (u != v) rest.push_back(u);
            next.push_back(rest);
            for (std::size_t c = at + 1; c < cells.size(); ++c) next.push_back(cells[c]);
            refine(next);
            search(next, at, order, prefix);
        }
    }
};

}  // namespace

CanonicalResult canonical_form_full(const Graph& g) {
    std::vector<Vertex> labels;
    Graph c = g.compacted(&labels);
    const int n = c.vertex_count();

    CanonicalResult out;
    out.form.push_back(static_cast<char>(n));
    if (n == 0) return out;

    std::vector<std::vector<std::uint8_t>> mat(static_cast<std::size_t>(n),
                                               std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
    for (const Edge& e : c.edges()) {
        auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
        if (e.is_loop()) {
            mat[u][u] = static_cast<std::uint8_t>(mat[u][u] + 1);
        } else {
            mat[u][v] = static_cast<std::uint8_t>(mat[u][v] + 1);
            mat[v][u] = mat[u][v];
        }
    }

    CanonSearch s(n, mat);
    CanonSearch::Partition cells{std::vector<int>(static_cast<std::size_t>(n))};
    for (int i = 0; i < n; ++i) cells[0][static_cast<std::size_t>(i)] = i;
    s.refine(cells);
    s.search(cells, 0, {}, {});

    out.form.reserve(1 + s.best.size());
    for (std::uint8_t b : s.best) out.form.push_back(static_cast<char>(b));
    out.order.reserve(static_cast<std::size_t>(n));
    for (int p : s.best_order) out.order.push_back(labels[static_cast<std::size_t>(p)]);
    return out;
}

std::string canonical_form(const Graph& g) { return canonical_form_full(g).form; }

namespace {

bool cheap_invariants_match(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    auto degs = [](const Graph& x) {
        std::vector<int> d;
        d.reserve(x.vertices().size());
        for (Vertex v : x.vertices()) d.push_back(x.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    return degs(g) == degs(h);
}

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (!cheap_invariants_match(g, h)) return false;
    return canonical_form(g) == canonical_form(h);
}

std::optional<std::map<Vertex, Vertex>> isomorphism(const Graph& g, const Graph& h) {
    if (!cheap_invariants_match(g, h)) return std::nullopt;
    CanonicalResult cg = canonical_form_full(g);
    CanonicalResult ch = canonical_form_full(h);
    if (cg.form != ch.form) return std::nullopt;
    std::map<Vertex, Vertex> phi;
    for (std::size_t p = 0; p < cg.order.size(); ++p) phi[cg.order[p]] = ch.order[p];
    return phi;
}

}  // namespace fvslab

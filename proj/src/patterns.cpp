#include "fvslab/patterns.hpp"

#include <algorithm>
#include <cstdint>

#include "fvslab/errors.hpp"

namespace fvslab {

namespace {

using Mask = std::uint64_t;

struct SubdivisionSearch {
    int gn, hn;
    std::vector<Mask> gadj;                   // host adjacency bitmasks
    std::vector<int> gdeg, hdeg;
    std::vector<Mask> hadj;
    std::vector<std::pair<int, int>> hedges;  // routed in this order; first
                                              // endpoint embedded first
    std::vector<int> phi;                     // h vertex -> g vertex or -1
    std::vector<bool> himage;                 // g vertex is a branch image
    Mask used = 0;
    std::vector<int> edge_of_route;           // h-edge index routed at step t
    std::vector<std::vector<int>> interiors;  // per h-edge

    bool adjacent(int a, int b) const { return (gadj[static_cast<std::size_t>(a)] >> b) & 1; }

    // Branch images z (z != skip) adjacent to w in g whose h-edge to y is not
    // yet routed may stay adjacent; every other used neighbour is a chord.
    bool designation_ok(int w, int y, int skip, std::size_t routed_upto) const {
        Mask nb = gadj[static_cast<std::size_t>(w)] & used;
        for (int u = 0; nb; ++u, nb >>= 1) {
            if (!(nb & 1)) continue;
            if (u == skip) continue;
            if (!himage[static_cast<std::size_t>(u)]) return false;
            int z = -1;
            for (int x = 0; x < hn; ++x)
                if (phi[static_cast<std::size_t>(x)] == u) z = x;
            if (z < 0 || !((hadj[static_cast<std::size_t>(z)] >> y) & 1)) return false;
            // The h-edge (z, y) must be un-routed (it will become the direct edge).
            for (std::size_t t = 0; t <= routed_upto; ++t) {
                auto [a, b] = hedges[t];
                if ((a == z && b == y) || (a == y && b == z)) return false;
            }
        }
        return true;
    }

    bool route(std::size_t t);

    // Extend a path for h-edge (x,y) whose current end is `tail`.
    // target = phi[y] or -1 when y is still free.
    bool extend(std::size_t t, int x, int y, int tail, int target) {
        for (int w = 0; w < gn; ++w) {
            if ((used >> w) & 1) continue;
            if (!adjacent(tail, w)) continue;
            Mask chords = gadj[static_cast<std::size_t>(w)] & used & ~(Mask{1} << tail);
            if (target >= 0) {
                bool closes = adjacent(w, target);
                if ((chords & ~(Mask{1} << target)) != 0) continue;
                if (!closes && chords != 0) continue;
                interiors[edge_of_route[t]].push_back(w);
                used |= Mask{1} << w;
                if (closes ? route(t + 1) : extend(t, x, y, w, target)) return true;
                used &= ~(Mask{1} << w);
                interiors[edge_of_route[t]].pop_back();
            } else {
                // Either w becomes phi[y], or w is an interior vertex.
                if (gdeg[static_cast<std::size_t>(w)] >= hdeg[static_cast<std::size_t>(y)] &&
                    designation_ok(w, y, tail, t)) {
                    phi[static_cast<std::size_t>(y)] = w;
                    himage[static_cast<std::size_t>(w)] = true;
                    used |= Mask{1} << w;
                    if (route(t + 1)) return true;
                    used &= ~(Mask{1} << w);
                    himage[static_cast<std::size_t>(w)] = false;
                    phi[static_cast<std::size_t>(y)] = -1;
                }
                if (chords == 0) {
                    interiors[edge_of_route[t]].push_back(w);
                    used |= Mask{1} << w;
                    if (extend(t, x, y, w, -1)) return true;
                    used &= ~(Mask{1} << w);
                    interiors[edge_of_route[t]].pop_back();
                }
            }
        }
        return false;
    }
};

bool SubdivisionSearch::route(std::size_t t) {
    if (t == hedges.size()) return true;
    auto [x, y] = hedges[t];
    int a = phi[static_cast<std::size_t>(x)];

    if (a < 0) {
        // New component of h: pick a fresh root image.
        for (int w = 0; w < gn; ++w) {
            if ((used >> w) & 1) continue;
            if (gdeg[static_cast<std::size_t>(w)] < hdeg[static_cast<std::size_t>(x)]) continue;
            if (!designation_ok(w, x, -1, t)) continue;
            phi[static_cast<std::size_t>(x)] = w;
            himage[static_cast<std::size_t>(w)] = true;
            used |= Mask{1} << w;
            if (route(t)) return true;
            used &= ~(Mask{1} << w);
            himage[static_cast<std::size_t>(w)] = false;
            phi[static_cast<std::size_t>(x)] = -1;
        }
        return false;
    }

    int b = phi[static_cast<std::size_t>(y)];
    if (b >= 0 && adjacent(a, b)) return route(t + 1);  // forced direct edge
    return extend(t, x, y, a, b);
}

}  // namespace

std::optional<std::vector<Vertex>> contains_induced_subdivision(const Graph& g, const Graph& h) {
    if (!g.is_simple() || !h.is_simple())
        throw DomainError("contains_induced_subdivision: both graphs must be simple");
    if (h.empty()) throw DomainError("contains_induced_subdivision: empty pattern");
    if (g.vertex_count() > 64) throw ResourceError("contains_induced_subdivision: host too large");
    if (h.vertex_count() > g.vertex_count()) return std::nullopt;

    std::vector<Vertex> glabels;
    Graph gc = g.compacted(&glabels);
    Graph hc = h.compacted();

    SubdivisionSearch s;
    s.gn = gc.vertex_count();
    s.hn = hc.vertex_count();
    s.gadj.assign(static_cast<std::size_t>(s.gn), 0);
    s.gdeg.assign(static_cast<std::size_t>(s.gn), 0);
    for (const Edge& e : gc.edges()) {
        s.gadj[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
        s.gadj[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
    }
    for (int v = 0; v < s.gn; ++v) s.gdeg[static_cast<std::size_t>(v)] = gc.degree(v);
    s.hadj.assign(static_cast<std::size_t>(s.hn), 0);
    s.hdeg.assign(static_cast<std::size_t>(s.hn), 0);
    for (const Edge& e : hc.edges()) {
        s.hadj[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
        s.hadj[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
    }
    for (int v = 0; v < s.hn; ++v) s.hdeg[static_cast<std::size_t>(v)] = hc.degree(v);

    // Enough host vertices of degree >= 3 for the pattern's branch vertices.
    auto count_deg3 = [](const std::vector<int>& d) {
        return std::count_if(d.begin(), d.end(), [](int x) { return x >= 3; });
    };
    if (count_deg3(s.gdeg) < count_deg3(s.hdeg)) return std::nullopt;

    // Order h's edges so each (except component roots) starts embedded.
    std::vector<bool> seen_v(static_cast<std::size_t>(s.hn), false);
    std::vector<bool> seen_e(hc.edges().size(), false);
    for (int root = 0; root < s.hn; ++root) {
        if (seen_v[static_cast<std::size_t>(root)]) continue;
        std::vector<int> frontier{root};
        seen_v[static_cast<std::size_t>(root)] = true;
        while (!frontier.empty()) {
            int x = frontier.front();
            frontier.erase(frontier.begin());
            for (std::size_t i = 0; i < hc.edges().size(); ++i) {
                if (seen_e[i] || !hc.edge_at(i).touches(x)) continue;
                seen_e[i] = true;
                int y = hc.edge_at(i).other(x);
                s.hedges.emplace_back(x, y);
                if (!seen_v[static_cast<std::size_t>(y)]) {
                    seen_v[static_cast<std::size_t>(y)] = true;
                    frontier.push_back(y);
                }
            }
        }
    }

    s.phi.assign(static_cast<std::size_t>(s.hn), -1);
    s.himage.assign(static_cast<std::size_t>(s.gn), false);
    s.interiors.assign(hc.edges().size(), {});
    s.edge_of_route.resize(s.hedges.size());
    for (std::size_t t = 0; t < s.hedges.size(); ++t) {
        auto [x, y] = s.hedges[t];
        s.edge_of_route[t] = static_cast<int>(hc.edge_index(x, y));
    }

    // Isolated pattern vertices would need images too; none of our patterns
    // have them, so reject rather than half-support the case.
    for (int v = 0; v < s.hn; ++v)
        if (s.hdeg[static_cast<std::size_t>(v)] == 0 && s.hn > 1)
            throw DomainError("contains_induced_subdivision: isolated pattern vertices unsupported");

    if (!s.route(0)) return std::nullopt;

    std::vector<Vertex> witness;
    for (int v = 0; v < s.hn; ++v)
        witness.push_back(glabels[static_cast<std::size_t>(s.phi[static_cast<std::size_t>(v)])]);
    for (const auto& path : s.interiors)
        for (int w : path) witness.push_back(glabels[static_cast<std::size_t>(w)]);
    std::sort(witness.begin(), witness.end());
    return witness;
}

}  // namespace fvslab

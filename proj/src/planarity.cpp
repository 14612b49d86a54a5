#include "fvslab/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <set>

namespace fvslab {

bool is_planar(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 4) return true;
    if (g.edge_count() > 3 * n - 6) {
        // Count only the simple skeleton against Euler's bound.
        std::set<std::pair<Vertex, Vertex>> skel;
        for (const Edge& e : g.edges())
            if (!e.is_loop()) skel.emplace(e.u, e.v);
        if (static_cast<int>(skel.size()) > 3 * n - 6) return false;
    }

    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    Graph c = g.compacted();
    BoostGraph bg(static_cast<std::size_t>(n));
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const Edge& e : c.edges()) {
        if (e.is_loop()) continue;
        if (!seen.emplace(e.u, e.v).second) continue;
        boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
    }
    return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace fvslab

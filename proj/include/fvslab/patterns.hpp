#pragma once

#include <optional>
#include <vector>

#include "fvslab/graph.hpp"

namespace fvslab {

// Searches for W subseteq V(g) such that g[W] is isomorphic to a graph
// obtained from h by repeatedly subdividing edges.  Returns the sorted
// witness W, or nullopt.  Both graphs must be simple; h must be nonempty.
//
// Branch-and-prune: h's vertices are mapped injectively while its edges are
// routed as internally disjoint induced paths; exponential in the worst
// case, fine at desk scale.
std::optional<std::vector<Vertex>> contains_induced_subdivision(const Graph& g, const Graph& h);

}  // namespace fvslab

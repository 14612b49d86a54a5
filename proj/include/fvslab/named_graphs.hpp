#pragma once

#include <map>
#include <string>

#include "fvslab/graph.hpp"

namespace fvslab {

Graph cycle_graph(int k);  // k >= 1: loop, parallel pair, C_k
Graph path_graph(int k);
Graph complete_graph(int k);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);

// K4 with one edge subdivided.
Graph k4_plus();

// The cube graph.
Graph cube_q3();

// n-cycle plus an edge between each opposite pair (n even); M8 is the
// Wagner graph V8, M6 is isomorphic to K3,3.
Graph moebius_mn(int n);

Graph petersen_graph();
Graph dodecahedron_graph();

// All graphs mentioned by name across the suites, keyed by name.
const std::map<std::string, Graph>& named_corpus();

}  // namespace fvslab

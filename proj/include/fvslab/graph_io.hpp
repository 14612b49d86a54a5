#pragma once

#include <string>

#include "fvslab/graph.hpp"

namespace fvslab {

// graph6 ASCII encoding of simple graphs (n <= 62 supported here).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

// "n m" header followed by one "u v" line per edge copy; repeated lines are
// parallel edges, "u u" is a loop.  Blank lines and "#" comments ignored.
Graph from_adjacency_text(const std::string& text);

// Parses either format: a leading digit means adjacency text.
Graph parse_graph(const std::string& text);
Graph read_graph_file(const std::string& path);

}  // namespace fvslab

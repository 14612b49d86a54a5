#pragma once

#include "fvslab/graph.hpp"

namespace fvslab {

// Planarity verdict only; no embedding is exposed.  Loops and parallel
// edges are irrelevant to planarity and are ignored.
bool is_planar(const Graph& g);

}  // namespace fvslab

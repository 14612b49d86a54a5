#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fvslab/graph.hpp"

namespace fvslab {

struct CanonicalResult {
    std::string form;            // relabel-invariant byte string
    std::vector<Vertex> order;   // order[p] = vertex of g placed at position p
};

// Minimum adjacency string over vertex orderings consistent with an
// iteratively refined, invariant-ordered partition (individualize-refine
// with prefix pruning).  Works for multigraphs.
CanonicalResult canonical_form_full(const Graph& g);

std::string canonical_form(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

// Vertex map g -> h witnessing isomorphism, if one exists.
std::optional<std::map<Vertex, Vertex>> isomorphism(const Graph& g, const Graph& h);

}  // namespace fvslab

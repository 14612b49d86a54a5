#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fvslab/graph.hpp"

namespace fvslab {

struct FvsResult {
    int size = 0;
    std::vector<Vertex> witness;  // sorted
    std::string method;           // "brute_force" or "branch_and_bound"
    long long millis = 0;
};

// s must be a subset of V(g); true iff g - s is acyclic (loops and parallel
// pairs count as cycles).
bool is_feedback_vertex_set(const Graph& g, const std::vector<Vertex>& s);

// Optimal by subset enumeration in increasing size; |V| capped.
FvsResult min_fvs_bruteforce(const Graph& g, int vertex_cap = 20);

// Optimal branch and bound: loop/degree-1/degree-2 reductions, greedy
// cycle-packing lower bound, branching over a shortest cycle.
// Throws ResourceError (carrying the best known upper bound) on timeout.
FvsResult min_fvs_exact(const Graph& g, std::optional<long long> timeout_ms = std::nullopt);

}  // namespace fvslab

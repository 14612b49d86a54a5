#pragma once

#include <optional>
#include <vector>

#include "fvslab/graph.hpp"
#include "fvslab/sevenths.hpp"

namespace fvslab {

// Default cap on i + 3j (the member order) for family generation.
inline constexpr int kDefaultFamilyCap = 16;

struct FamilySignature {
    int i = 0;
    int j = 0;

    // max{(5 - i)/7, 0}
    Sevenths epsilon() const { return Sevenths(i < 5 ? 5 - i : 0); }
    int order() const { return i + 3 * j; }    // |V|
    int size() const { return i + 5 * j; }     // |E|
    friend bool operator==(FamilySignature, FamilySignature) = default;
};

struct ReplayStep {
    enum class Kind { Subdivide, Circ };
    Kind kind;
    std::size_t e1 = 0;  // edge indices in the graph the step is applied to
    std::size_t e2 = 0;  // Circ only
    Vertex a = -1;       // Circ only
};

struct FamilyMember {
    Graph graph;
    FamilySignature signature;
    // Applying the steps to the one-vertex loop graph rebuilds `graph`.
    std::vector<ReplayStep> derivation;
};

Graph replay_derivation(const std::vector<ReplayStep>& steps);

// All isomorphism classes of F_{i,j}, each exactly once, deterministic
// order.  Requires i >= 1, 0 <= j <= i and i + 3j <= cap.
std::vector<FamilyMember> generate_family(int i, int j, int cap = kDefaultFamilyCap);

// The unique (i,j) with g isomorphic to a member of F_{i,j}, if any.
// Cycles (j = 0) are recognized at any size; otherwise the member order
// |V(g)| must be within the cap.
std::optional<FamilySignature> family_membership(const Graph& g, int cap = kDefaultFamilyCap);

// Error terms.  epsilon_of requires g 2-connected or a multigraph on at
// most two vertices; r_of requires g connected and simple (or a family
// member), and sums epsilon over blocks.
Sevenths epsilon_of(const Graph& g, int cap = kDefaultFamilyCap);
Sevenths r_of(const Graph& g, int cap = kDefaultFamilyCap);

// Members of F_{4,2} u F_{4,3} with girth >= 5, plus members of
// F_{3,2} u F_{3,3} having an edge whose removal yields girth >= 5.
// Cached after the first computation.
const std::vector<Graph>& forbidden_family();

// True iff g contains no induced subdivision of a forbidden family member.
bool forbidden_free(const Graph& g);

// Bound-certified feedback vertex sets for family members (g must be
// isomorphic to a generated member):
//   family_fvs(g):                 FVS of g,        7|S| <= 2m - n + 2 + 7 eps
//   family_fvs_minus_edge(g, e):   FVS of g - e,    7|S| <= 2m - n + 2 + 7 eps - 7
//   family_fvs_through(g, v):      FVS of g, v in S, same bound as family_fvs
std::vector<Vertex> family_fvs(const Graph& g, int cap = kDefaultFamilyCap);
std::vector<Vertex> family_fvs_minus_edge(const Graph& g, Edge deleted,
                                          int cap = kDefaultFamilyCap);
std::vector<Vertex> family_fvs_through(const Graph& g, Vertex v, int cap = kDefaultFamilyCap);

}  // namespace fvslab

#include "doctest.h"
#include "fvslab/errors.hpp"
#include "fvslab/fvs_exact.hpp"
#include "fvslab/named_graphs.hpp"
#include "test_util.hpp"

using namespace fvslab;
using testutil::Lcg;

namespace {

Graph random_multigraph(Lcg& rng, int n, int percent) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (rng.below(100) < (i == j ? percent / 3 : percent)) {
                es.emplace_back(i, j);
                if (rng.below(4) == 0) es.emplace_back(i, j);
            }
        }
    }
    std::vector<Vertex> vs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vs[static_cast<std::size_t>(i)] = i;
    return Graph(vs, es);
}

}  // namespace

TEST_CASE("is_feedback_vertex_set") {
    CHECK(is_feedback_vertex_set(cycle_graph(4), {0}));
    CHECK_FALSE(is_feedback_vertex_set(complete_graph(4), {0}));
    Graph g = petersen_graph();
    CHECK(is_feedback_vertex_set(g, g.vertices()));
    CHECK_FALSE(is_feedback_vertex_set(Graph({0}, {Edge(0, 0)}), {}));
    CHECK_THROWS_AS(is_feedback_vertex_set(cycle_graph(3), {7}), DomainError);
}

TEST_CASE("brute force examples") {
    CHECK(min_fvs_bruteforce(cycle_graph(3)).size == 1);
    CHECK(min_fvs_bruteforce(path_graph(6)).size == 0);
    CHECK(min_fvs_bruteforce(star_graph(4)).size == 0);
    CHECK(min_fvs_bruteforce(complete_graph(4)).size == 2);
    CHECK_THROWS_AS(min_fvs_bruteforce(dodecahedron_graph(), 12), ResourceError);

    SUBCASE("witness is a feedback vertex set of minimum size") {
        Lcg rng(31);
        for (int trial = 0; trial < 50; ++trial) {
            Graph g = testutil::random_graph(rng, 4 + rng.below(5), 45);
            auto r = min_fvs_bruteforce(g);
            CHECK(is_feedback_vertex_set(g, r.witness));
            CHECK(static_cast<int>(r.witness.size()) == r.size);
        }
    }
}

TEST_CASE("exact solver spec examples") {
    CHECK(min_fvs_exact(cycle_graph(5)).size == 1);
    CHECK(min_fvs_exact(dodecahedron_graph()).size == 6);
    CHECK(min_fvs_exact(petersen_graph()).size == 3);
    CHECK(min_fvs_bruteforce(petersen_graph()).size == 3);
    CHECK(min_fvs_exact(complete_bipartite(3, 3)).size == 2);
    CHECK(min_fvs_exact(moebius_mn(8)).size == 3);

    auto r = min_fvs_exact(dodecahedron_graph());
    CHECK(is_feedback_vertex_set(dodecahedron_graph(), r.witness));
    CHECK(r.method == "branch_and_bound");
}

TEST_CASE("exact agrees with brute force on random graphs") {
    Lcg rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = testutil::random_graph(rng, 4 + rng.below(7), 15 + rng.below(45));
        auto b = min_fvs_bruteforce(g);
        auto e = min_fvs_exact(g);
        CHECK(b.size == e.size);
        CHECK(is_feedback_vertex_set(g, e.witness));
    }
}

TEST_CASE("exact agrees with brute force on random multigraphs") {
    // Loops force their vertex into the set; parallel pairs are 2-cycles.
    Lcg rng(123);
    for (int trial = 0; trial < 150; ++trial) {
        Graph g = random_multigraph(rng, 3 + rng.below(6), 20 + rng.below(35));
        auto b = min_fvs_bruteforce(g);
        auto e = min_fvs_exact(g);
        CHECK(b.size == e.size);
        CHECK(is_feedback_vertex_set(g, e.witness));
    }
}

TEST_CASE("deleting an edge changes the optimum by at most one") {
    Lcg rng(9001);
    for (int trial = 0; trial < 500; ++trial) {
        Graph g = testutil::random_graph(rng, 4 + rng.below(6), 30 + rng.below(30));
        if (g.edge_count() == 0) continue;
        std::size_t e = static_cast<std::size_t>(rng.below(g.edge_count()));
        int phi = min_fvs_exact(g).size;
        int phi_minus = min_fvs_exact(g.minus_edge_at(e)).size;
        CHECK(phi_minus <= phi);
        CHECK(phi <= phi_minus + 1);
    }
}

TEST_CASE("timeout raises a resource error carrying the bound") {
    Lcg rng(4);
    Graph g = testutil::random_graph(rng, 40, 50);
    CHECK_THROWS_AS(min_fvs_exact(g, 1), ResourceError);
}

TEST_CASE("exact solver is deterministic") {
    Lcg rng(55);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = testutil::random_graph(rng, 10, 35);
        auto a = min_fvs_exact(g);
        auto b = min_fvs_exact(g);
        CHECK(a.witness == b.witness);
    }
}

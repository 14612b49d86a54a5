#include "fvslab/named_graphs.hpp"

#include <set>

#include "fvslab/errors.hpp"

namespace fvslab {

Graph cycle_graph(int k) {
    if (k < 1) throw DomainError("cycle_graph: k must be positive");
    if (k == 1) return Graph({0}, {Edge(0, 0)});
    if (k == 2) return Graph({0, 1}, {Edge(0, 1), Edge(0, 1)});
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < k; ++i) es.emplace_back(i, (i + 1) % k);
    return Graph::on(k, es);
}

Graph path_graph(int k) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < k; ++i) es.emplace_back(i, i + 1);
    return Graph::on(k, es);
}

Graph complete_graph(int k) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) es.emplace_back(i, j);
    return Graph::on(k, es);
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
    return Graph::on(a + b, es);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph::on(leaves + 1, es);
}

Graph k4_plus() {
    Graph k4 = complete_graph(4);
    return k4.subdivide_edge_at(k4.edge_index(0, 1));
}

Graph cube_q3() {
    // Two 4-cycles joined by a perfect matching.
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 4; ++i) {
        es.emplace_back(i, (i + 1) % 4);
        es.emplace_back(4 + i, 4 + (i + 1) % 4);
        es.emplace_back(i, 4 + i);
    }
    return Graph::on(8, es);
}

Graph moebius_mn(int n) {
    if (n < 6 || n % 2 != 0) throw DomainError("moebius_mn: n must be even and >= 6");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    for (int i = 0; i < n / 2; ++i) es.emplace_back(i, i + n / 2);
    return Graph::on(n, es);
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);          // outer pentagon
        es.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        es.emplace_back(i, 5 + i);                // spokes
    }
    return Graph::on(10, es);
}

Graph dodecahedron_graph() {
    // LCF notation [10,7,4,-4,-7,10,-4,7,-7,4]^2.
    static const int lcf[10] = {10, 7, 4, -4, -7, 10, -4, 7, -7, 4};
    std::set<std::pair<int, int>> es;
    for (int i = 0; i < 20; ++i) {
        es.emplace(std::min(i, (i + 1) % 20), std::max(i, (i + 1) % 20));
        int j = ((i + lcf[i % 10]) % 20 + 20) % 20;
        es.emplace(std::min(i, j), std::max(i, j));
    }
    return Graph::on(20, std::vector<std::pair<int, int>>(es.begin(), es.end()));
}

const std::map<std::string, Graph>& named_corpus() {
    static const std::map<std::string, Graph> corpus = [] {
        std::map<std::string, Graph> m;
        m.emplace("K4", complete_graph(4));
        m.emplace("K4+", k4_plus());
        m.emplace("K3,3", complete_bipartite(3, 3));
        m.emplace("Q3", cube_q3());
        m.emplace("V8", moebius_mn(8));
        m.emplace("M6", moebius_mn(6));
        m.emplace("M8", moebius_mn(8));
        m.emplace("M10", moebius_mn(10));
        m.emplace("C5", cycle_graph(5));
        m.emplace("petersen", petersen_graph());
        m.emplace("dodecahedron", dodecahedron_graph());
        return m;
    }();
    return corpus;
}

}  // namespace fvslab

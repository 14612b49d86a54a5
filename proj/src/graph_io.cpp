#include "fvslab/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "fvslab/errors.hpp"

namespace fvslab {

std::string to_graph6(const Graph& graph) {
    if (!graph.is_simple()) throw DomainError("to_graph6: graph6 encodes simple graphs only");
    Graph g = graph.compacted();
    const int n = g.vertex_count();
    if (n > 62) throw ResourceError("to_graph6: only graphs with at most 62 vertices supported");

    std::string out;
    out.push_back(static_cast<char>(63 + n));
    // Upper triangle in column order: x(0,1), x(0,2), x(1,2), x(0,3), ...
    int bits = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            bits = (bits << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + bits));
                bits = nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (bits << (6 - nbits))));
    return out;
}

Graph from_graph6(const std::string& s) {
    std::string t = s;
    if (t.rfind(">>graph6<<", 0) == 0) t = t.substr(10);
    while (!t.empty() && (t.back() == '\n' || t.back() == '\r')) t.pop_back();
    if (t.empty()) throw DomainError("from_graph6: empty string");
    std::size_t at = 0;
    if (t[at] == 126) throw ResourceError("from_graph6: >62 vertices not supported");
    int n = t[at] - 63;
    ++at;
    if (n < 0) throw DomainError("from_graph6: bad header byte");

    std::vector<std::pair<int, int>> edges;
    int bits = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                if (at >= t.size()) throw DomainError("from_graph6: truncated input");
                int c = t[at++] - 63;
                if (c < 0 || c > 63) throw DomainError("from_graph6: byte out of range");
                bits = c;
                nbits = 6;
            }
            if (bits & (1 << (nbits - 1))) edges.emplace_back(i, j);
            --nbits;
        }
    }
    return Graph::on(n, edges);
}

Graph from_adjacency_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(is, line)) {
        auto h = line.find('#');
        if (h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        long a, b;
        if (!(ls >> a)) continue;
        if (!(ls >> b)) throw DomainError("adjacency text: expected two integers per line");
        if (n < 0) {
            n = static_cast<int>(a);
            m = static_cast<int>(b);
            if (n < 0 || m < 0) throw DomainError("adjacency text: negative header");
        } else {
            edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
        }
    }
    if (n < 0) throw DomainError("adjacency text: missing header");
    if (static_cast<int>(edges.size()) != m)
        throw DomainError("adjacency text: edge count does not match header");
    std::vector<Vertex> vs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vs[static_cast<std::size_t>(i)] = i;
    return Graph(std::move(vs), std::move(edges));
}

Graph parse_graph(const std::string& text) {
    std::size_t at = 0;
    while (at < text.size() && std::isspace(static_cast<unsigned char>(text[at]))) ++at;
    if (at == text.size()) throw DomainError("parse_graph: empty input");
    if (std::isdigit(static_cast<unsigned char>(text[at]))) return from_adjacency_text(text);
    // First non-blank line is a graph6 record.
    std::istringstream is(text.substr(at));
    std::string line;
    std::getline(is, line);
    return from_graph6(line);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_graph(buf.str());
}

}  // namespace fvslab

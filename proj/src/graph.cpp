#include "flowers/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace flowers {

Graph Graph::from_edges(std::span<const Edge> pairs) {
    if (pairs.empty()) {
        throw GraphError("graph: edge list is empty");
    }
    std::set<Edge> seen;
    int max_label = -1;
    for (const auto& [a, b] : pairs) {
        if (a < 0 || b < 0) {
            throw GraphError("graph: negative vertex label");
        }
        if (a == b) {
            throw GraphError("graph: self-loop at vertex " + std::to_string(a));
        }
        const Edge key{std::min(a, b), std::max(a, b)};
        if (!seen.insert(key).second) {
            throw GraphError("graph: duplicate edge " + std::to_string(key.first) + "-" +
                             std::to_string(key.second));
        }
        max_label = std::max({max_label, a, b});
    }

    Graph g;
    g.vertex_count_ = max_label + 1;
    g.edges_.assign(seen.begin(), seen.end());
    g.adjacency_.resize(g.vertex_count_);
    for (const auto& [a, b] : g.edges_) {
        g.adjacency_[a].push_back(b);
        g.adjacency_[b].push_back(a);
    }
    for (auto& list : g.adjacency_) {
        std::sort(list.begin(), list.end());
    }
    for (Vertex v = 0; v < g.vertex_count_; ++v) {
        if (g.adjacency_[v].empty()) {
            throw GraphError("graph: label gap, vertex " + std::to_string(v) + " is unused");
        }
    }

    std::vector<bool> reached(g.vertex_count_, false);
    std::vector<Vertex> stack{0};
    reached[0] = true;
    int count = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.adjacency_[v]) {
            if (!reached[w]) {
                reached[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    if (count != g.vertex_count_) {
        throw GraphError("graph: disconnected (" + std::to_string(count) + " of " +
                         std::to_string(g.vertex_count_) + " vertices reachable from 0)");
    }
    return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b)) {
        return false;
    }
    const auto& list = adjacency_[a];
    return std::binary_search(list.begin(), list.end(), b);
}

Graph graph_from_edge_list(std::span<const Edge> pairs) { return Graph::from_edges(pairs); }

Eigen::MatrixXi laplacian(const Graph& g) {
    const int n = g.vertex_count();
    Eigen::MatrixXi lap = Eigen::MatrixXi::Zero(n, n);
    for (const auto& [a, b] : g.edges()) {
        lap(a, a) += 1;
        lap(b, b) += 1;
        lap(a, b) = -1;
        lap(b, a) = -1;
    }
    return lap;
}

GraphStats graph_stats(const Graph& g) {
    GraphStats stats;
    stats.vertex_count = g.vertex_count();
    stats.edge_count = g.edge_count();
    stats.degrees.reserve(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        stats.degrees.push_back(g.degree(v));
    }
    return stats;
}

Graph read_edge_list(std::istream& in) {
    std::vector<Edge> pairs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        long long a = -1;
        long long b = -1;
        std::string extra;
        if (!(fields >> a >> b) || (fields >> extra) || a < 0 || b < 0) {
            throw GraphError("edge list: malformed line " + std::to_string(line_no) + ": '" + line + "'");
        }
        pairs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    return Graph::from_edges(pairs);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw GraphError("edge list: cannot open '" + path + "'");
    }
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (const auto& [a, b] : g.edges()) {
        out << a << ' ' << b << '\n';
    }
}

Graph path_graph(int vertex_count) {
    if (vertex_count < 2) {
        throw GraphError("path_graph: need at least 2 vertices");
    }
    std::vector<Edge> pairs;
    for (int i = 0; i + 1 < vertex_count; ++i) {
        pairs.emplace_back(i, i + 1);
    }
    return Graph::from_edges(pairs);
}

Graph cycle_graph(int vertex_count) {
    if (vertex_count < 3) {
        throw GraphError("cycle_graph: need at least 3 vertices");
    }
    std::vector<Edge> pairs;
    for (int i = 0; i < vertex_count; ++i) {
        pairs.emplace_back(i, (i + 1) % vertex_count);
    }
    return Graph::from_edges(pairs);
}

Graph complete_graph(int vertex_count) {
    if (vertex_count < 2) {
        throw GraphError("complete_graph: need at least 2 vertices");
    }
    std::vector<Edge> pairs;
    for (int i = 0; i < vertex_count; ++i) {
        for (int j = i + 1; j < vertex_count; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    return Graph::from_edges(pairs);
}

Graph petersen_graph() {
    std::vector<Edge> pairs;
    for (int i = 0; i < 5; ++i) {
        pairs.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
        pairs.emplace_back(i, i + 5);                // spokes
        pairs.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph::from_edges(pairs);
}

}  // namespace flowers

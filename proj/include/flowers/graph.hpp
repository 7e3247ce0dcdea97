#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace flowers {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Simple undirected connected graph on the dense labels 0..vertex_count-1.
/// Immutable once built; every constructor path validates the invariants.
class Graph {
public:
    /// Throws GraphError on self-loops, duplicate edges, label gaps or a
    /// disconnected result.
    static Graph from_edges(std::span<const Edge> pairs);

    int vertex_count() const noexcept { return vertex_count_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    /// Edges with first < second, sorted lexicographically.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
    bool has_edge(Vertex a, Vertex b) const;
    bool contains(Vertex v) const noexcept { return v >= 0 && v < vertex_count_; }

private:
    Graph() = default;

    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

struct GraphStats {
    int vertex_count = 0;
    int edge_count = 0;
    std::vector<int> degrees;
};

Graph graph_from_edge_list(std::span<const Edge> pairs);

/// Degree matrix minus adjacency matrix.
Eigen::MatrixXi laplacian(const Graph& g);

GraphStats graph_stats(const Graph& g);

/// Edge-list text: one "a b" pair per line, '#' comments and blank lines
/// skipped.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// Standard small graphs.
Graph path_graph(int vertex_count);
Graph cycle_graph(int vertex_count);
Graph complete_graph(int vertex_count);
Graph petersen_graph();

}  // namespace flowers

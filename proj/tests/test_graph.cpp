#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "flowers/graph.hpp"

using namespace flowers;

namespace {
Graph from(std::vector<Edge> edges) { return graph_from_edge_list(edges); }
}  // namespace

TEST_SUITE("graph") {

TEST_CASE("triangle and path") {
    const Graph k3 = from({{0, 1}, {1, 2}, {0, 2}});
    const GraphStats s = graph_stats(k3);
    CHECK(s.vertex_count == 3);
    CHECK(s.edge_count == 3);
    CHECK(s.degrees == std::vector<int>{2, 2, 2});

    const GraphStats p = graph_stats(from({{0, 1}, {1, 2}}));
    CHECK(p.edge_count == 2);
    CHECK(p.degrees == std::vector<int>{1, 2, 1});
}

TEST_CASE("edges are normalized and sorted") {
    const Graph g = from({{2, 1}, {1, 0}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.contains(2));
    CHECK_FALSE(g.contains(3));
    CHECK_FALSE(g.contains(-1));
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(from({{0, 1}, {2, 3}}), GraphError);           // disconnected
    CHECK_THROWS_AS(from({{0, 0}, {0, 1}}), GraphError);           // self-loop
    CHECK_THROWS_AS(from({{0, 1}, {1, 0}}), GraphError);           // duplicate
    CHECK_THROWS_AS(from({{0, 1}, {1, 3}}), GraphError);           // label 2 unused
    CHECK_THROWS_AS(from({}), GraphError);
    CHECK_THROWS_AS(from({{-1, 0}}), GraphError);
}

TEST_CASE("laplacian") {
    const Eigen::MatrixXi p2 = laplacian(path_graph(2));
    CHECK(p2(0, 0) == 1);
    CHECK(p2(0, 1) == -1);
    CHECK(p2(1, 0) == -1);
    CHECK(p2(1, 1) == 1);

    const Eigen::MatrixXi k3 = laplacian(complete_graph(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(k3(i, j) == (i == j ? 2 : -1));
}

TEST_CASE("laplacian of connected graphs: zero row sums, one zero eigenvalue") {
    for (const Graph& g : {petersen_graph(), cycle_graph(7), path_graph(5), complete_graph(6)}) {
        const Eigen::MatrixXi l = laplacian(g);
        CHECK(l == l.transpose());
        CHECK(l.rowwise().sum().isZero());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(l.cast<double>());
        const auto& ev = eig.eigenvalues();
        CHECK(std::abs(ev(0)) < 1e-9);
        CHECK(ev(1) > 1e-6);
    }
}

TEST_CASE("degree sum is twice the edge count") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 15);
        std::vector<Edge> edges;
        for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng() % v), v);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() % 5 == 0 && std::find(edges.begin(), edges.end(), Edge{a, b}) == edges.end() &&
                    std::find(edges.begin(), edges.end(), Edge{b, a}) == edges.end())
                    edges.emplace_back(a, b);
        const GraphStats s = graph_stats(from(edges));
        CHECK(std::accumulate(s.degrees.begin(), s.degrees.end(), 0) == 2 * s.edge_count);
    }
}

TEST_CASE("standard graphs") {
    const Graph pet = petersen_graph();
    CHECK(pet.vertex_count() == 10);
    CHECK(pet.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(path_graph(4).edge_count() == 3);
}

TEST_CASE("edge-list text round trip") {
    std::istringstream in("# a comment\n0 1\n\n1 2\n  2 0  \n");
    const Graph g = read_edge_list(in);
    CHECK(g.edge_count() == 3);
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream again(out.str());
    CHECK(read_edge_list(again).edges() == g.edges());
}

TEST_CASE("malformed edge-list lines") {
    for (const char* text : {"0\n", "0 1 2\n", "a b\n", "0 -1\n"}) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_edge_list(in), GraphError);
    }
    CHECK_THROWS_AS(read_edge_list_file("/nonexistent/edges.txt"), GraphError);
}

}

#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "flowers/graph.hpp"

namespace flowers::testing {

/// Random spanning tree plus extra edges with probability `density`.
inline Graph random_connected_graph(std::mt19937& rng, int vertex_count, double density) {
    std::vector<int> order(vertex_count);
    for (int i = 0; i < vertex_count; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::vector<bool>> used(vertex_count, std::vector<bool>(vertex_count, false));
    std::vector<Edge> edges;
    auto add = [&](int a, int b) {
        if (a == b || used[a][b]) return;
        used[a][b] = used[b][a] = true;
        edges.emplace_back(a, b);
    };
    for (int i = 1; i < vertex_count; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        add(order[i], order[pick(rng)]);
    }
    std::bernoulli_distribution extra(density);
    for (int a = 0; a < vertex_count; ++a)
        for (int b = a + 1; b < vertex_count; ++b)
            if (extra(rng)) add(a, b);
    return graph_from_edge_list(edges);
}

}  // namespace flowers::testing

#pragma once

#include "pzf/pzf.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace pzf::testing {

/// The 6-vertex tree used throughout the worked examples: v0 with children
/// v11 and v12; v11 with pendants v21, v22; v12 with pendant v23.
inline Graph fig1_tree() {
    return Graph::from_edge_list("v0 v11\nv0 v12\nv11 v21\nv11 v22\nv12 v23");
}

inline std::vector<std::pair<int, int>> edge_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    return pairs;
}

inline std::optional<Graph> graph_from_mask(int n, std::uint64_t mask) {
    auto pairs = edge_pairs(n);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b)
        if (mask >> b & 1) edges.push_back(pairs[b]);
    try {
        return Graph::from_edges(n, edges);
    } catch (const parse_error&) {
        return std::nullopt;  // disconnected
    }
}

/// Every connected labeled graph on n vertices.
inline std::vector<Graph> all_connected_graphs(int n) {
    std::vector<Graph> graphs;
    const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < masks; ++mask)
        if (auto g = graph_from_mask(n, mask)) graphs.push_back(std::move(*g));
    return graphs;
}

inline Graph random_connected_graph(std::mt19937_64& rng, int n, double edge_prob = 0.4) {
    auto pairs = edge_pairs(n);
    std::bernoulli_distribution coin(edge_prob);
    while (true) {
        std::uint64_t mask = 0;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (coin(rng)) mask |= std::uint64_t{1} << b;
        if (auto g = graph_from_mask(n, mask)) return std::move(*g);
    }
}

inline VertexSet random_subset(std::mt19937_64& rng, int n) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (rng() & 1) s.set(v);
    return s;
}

inline VertexSet make_set(const Graph& g, std::initializer_list<const char*> labels) {
    VertexSet s(g.order());
    for (const char* name : labels) s.set(*g.index_of(name));
    return s;
}

inline VertexSet make_set_idx(int n, std::initializer_list<int> vs) {
    VertexSet s(n);
    for (int v : vs) s.set(v);
    return s;
}

}  // namespace pzf::testing

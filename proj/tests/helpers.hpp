#ifndef LEXCYCLE_TESTS_HELPERS_HPP
#define LEXCYCLE_TESTS_HELPERS_HPP

#include <initializer_list>
#include <tuple>
#include <vector>

#include "lexcycle/graph.hpp"

namespace lexcycle::test {

inline WeightedGraph graph(int n, std::initializer_list<std::tuple<Vertex, Vertex, Weight>> edges) {
    std::vector<Edge> es;
    for (auto [u, v, w] : edges)
        es.push_back({u, v, w});
    return WeightedGraph(n, std::move(es));
}

inline WeightedGraph k3() { return graph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}); }

inline WeightedGraph k4(Weight w = 1) {
    return graph(4, {{0, 1, w}, {0, 2, w}, {0, 3, w}, {1, 2, w}, {1, 3, w}, {2, 3, w}});
}

/// K2,3 with parts {0,1} and {2,3,4}.
inline WeightedGraph k23() {
    return graph(5, {{0, 2, 1}, {1, 2, 1}, {0, 3, 1}, {1, 3, 1}, {0, 4, 1}, {1, 4, 1}});
}

inline WeightedGraph c4() { return graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}}); }

inline std::vector<Vertex> vertices(std::initializer_list<Vertex> vs) { return vs; }

} // namespace lexcycle::test

#endif

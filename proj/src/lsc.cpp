#include "lexcycle/lsc.hpp"

#include <algorithm>

namespace lexcycle {

bool is_lex_short(const WeightedGraph& g, const Cycle& c, const LspTable& table) {
    std::vector<char> in_cycle(static_cast<std::size_t>(g.edge_count()), 0);
    for (EdgeId e : c.edges())
        in_cycle[static_cast<std::size_t>(e)] = 1;
    auto vs = c.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const Path& p = table.path(vs[i], vs[j]);
            for (std::size_t k = 1; k < p.vertices.size(); ++k) {
                EdgeId e = g.find_edge(p.vertices[k - 1], p.vertices[k]);
                if (!in_cycle[static_cast<std::size_t>(e)])
                    return false;
            }
        }
    }
    return true;
}

std::vector<Cycle> horton_candidates(const WeightedGraph& g, const LspTable& table) {
    std::vector<Cycle> out;
    std::vector<int> mark(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<Vertex> sequence;
    int stamp = 0;
    for (Vertex r = 0; r < g.vertex_count(); ++r) {
        const auto& tree = table.from(r);
        for (const Edge& e : g.edges()) {
            const Path& px = tree[static_cast<std::size_t>(e.u)];
            const Path& py = tree[static_cast<std::size_t>(e.v)];
            if (px.length() + py.length() + 1 < 3)
                continue;
            ++stamp;
            for (std::size_t i = 1; i < px.vertices.size(); ++i)
                mark[static_cast<std::size_t>(px.vertices[i])] = stamp;
            bool simple = std::none_of(py.vertices.begin() + 1, py.vertices.end(),
                                       [&](Vertex y) { return mark[static_cast<std::size_t>(y)] == stamp; });
            if (!simple)
                continue;
            sequence.assign(px.vertices.begin(), px.vertices.end());
            sequence.insert(sequence.end(), py.vertices.rbegin(), py.vertices.rend() - 1);
            out.push_back(Cycle::from_vertices(g, sequence));
        }
    }
    return out;
}

CycleSet enumerate_lex_short_cycles(const WeightedGraph& g) {
    return enumerate_lex_short_cycles(g, LspTable(g));
}

CycleSet enumerate_lex_short_cycles(const WeightedGraph& g, const LspTable& table) {
    std::vector<Cycle> candidates = horton_candidates(g, table);
    // Deduplicate before the quadratic lex-short test.
    CycleSet unique(g, std::move(candidates));
    std::vector<Cycle> kept;
    for (const Cycle& c : unique)
        if (is_lex_short(g, c, table))
            kept.push_back(c);
    return CycleSet(g, std::move(kept));
}

CycleSet enumerate_all_simple_cycles(const WeightedGraph& g) {
    if (g.vertex_count() > kCycleEnumerationVertexLimit)
        throw InputError("enumerate_all_simple_cycles: graph exceeds " +
                         std::to_string(kCycleEnumerationVertexLimit) + " vertices");
    auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<char> on_path(n, 0);
    std::vector<Vertex> path;
    std::vector<Cycle> found;

    // Each cycle is rooted at its smallest vertex and walked in the direction
    // whose first step is smaller than its last.
    for (Vertex root = 0; root < g.vertex_count(); ++root) {
        auto extend = [&](auto&& self, Vertex x) -> void {
            for (auto [y, e] : g.neighbors(x)) {
                if (y == root) {
                    if (path.size() >= 3 && path[1] < path.back()) {
                        if (found.size() >= kCycleEnumerationCountLimit)
                            throw InputError("enumerate_all_simple_cycles: more than " +
                                             std::to_string(kCycleEnumerationCountLimit) + " cycles");
                        found.push_back(Cycle::from_vertices(g, path));
                    }
                    continue;
                }
                if (y < root || on_path[static_cast<std::size_t>(y)])
                    continue;
                on_path[static_cast<std::size_t>(y)] = 1;
                path.push_back(y);
                self(self, y);
                path.pop_back();
                on_path[static_cast<std::size_t>(y)] = 0;
            }
        };
        path.assign(1, root);
        on_path[static_cast<std::size_t>(root)] = 1;
        extend(extend, root);
        on_path[static_cast<std::size_t>(root)] = 0;
    }
    return CycleSet(g, std::move(found));
}

} // namespace lexcycle

#include "lexcycle/structure.hpp"

#include <algorithm>
#include <set>

#include "lexcycle/lexpath.hpp"

namespace lexcycle {

bool is_partial_2tree(const WeightedGraph& g) {
    auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::set<Vertex>> adj(n);
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)].insert(e.v);
        adj[static_cast<std::size_t>(e.v)].insert(e.u);
    }
    std::vector<char> gone(n, 0);
    std::vector<Vertex> work;
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        work.push_back(x);
    std::size_t remaining = n;

    while (!work.empty()) {
        Vertex x = work.back();
        work.pop_back();
        auto xi = static_cast<std::size_t>(x);
        if (gone[xi] || adj[xi].size() > 2)
            continue;
        std::vector<Vertex> nbrs(adj[xi].begin(), adj[xi].end());
        for (Vertex y : nbrs)
            adj[static_cast<std::size_t>(y)].erase(x);
        if (nbrs.size() == 2) {
            adj[static_cast<std::size_t>(nbrs[0])].insert(nbrs[1]);
            adj[static_cast<std::size_t>(nbrs[1])].insert(nbrs[0]);
        }
        adj[xi].clear();
        gone[xi] = 1;
        --remaining;
        work.insert(work.end(), nbrs.begin(), nbrs.end());
    }
    return remaining == 0;
}

namespace {

// Smallest local pair of `block` whose removal leaves >= 3 components.
std::optional<std::pair<Vertex, Vertex>> block_separator(const WeightedGraph& block) {
    int k = block.vertex_count();
    if (k < 5)
        return std::nullopt;
    for (Vertex u = 0; u < k; ++u) {
        for (Vertex v = u + 1; v < k; ++v) {
            const Vertex removed[] = {u, v};
            if (components_without(block, removed).size() >= 3)
                return std::pair(u, v);
        }
    }
    return std::nullopt;
}

void require_partial_2tree(const WeightedGraph& g, const char* who) {
    if (!is_partial_2tree(g))
        throw PreconditionError(std::string(who) + ": graph is not a partial 2-tree");
}

} // namespace

std::optional<std::pair<Vertex, Vertex>> find_three_component_separator(const WeightedGraph& g) {
    require_partial_2tree(g, "find_three_component_separator");
    std::optional<std::pair<Vertex, Vertex>> best;
    for (const WeightedGraph& block : blocks(g)) {
        auto local = block_separator(block);
        if (!local)
            continue;
        std::pair<Vertex, Vertex> pair{g.index_of_label(block.label(local->first)),
                                       g.index_of_label(block.label(local->second))};
        if (!best || pair < *best)
            best = pair;
    }
    return best;
}

bool is_outerplanar(const WeightedGraph& g) {
    require_partial_2tree(g, "is_outerplanar");
    const auto all = blocks(g);
    return std::none_of(all.begin(), all.end(), [](const WeightedGraph& b) { return block_separator(b).has_value(); });
}

std::vector<Vertex> choose_avoiding_component(const WeightedGraph& g, Vertex u, Vertex v, const Path& p) {
    if (u == v || u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
        throw InputError("separator must be two distinct vertices of the graph");
    if (p.vertices.empty() || !((p.source() == u && p.target() == v) || (p.source() == v && p.target() == u)))
        throw InputError("path does not join the separator vertices");
    const Vertex removed[] = {u, v};
    auto comps = components_without(g, removed);
    if (comps.size() < 2)
        throw InputError("{" + std::to_string(u) + "," + std::to_string(v) + "} is not a vertex separator");

    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex x : p.vertices)
        on_path[static_cast<std::size_t>(x)] = 1;
    // A path edge inside a component would need both endpoints there, so
    // vertex-disjointness also rules out shared edges.
    for (auto& comp : comps)
        if (std::none_of(comp.begin(), comp.end(), [&](Vertex x) { return on_path[static_cast<std::size_t>(x)]; }))
            return std::move(comp);
    throw InternalError("no component of G - {u,v} avoids lsp(u,v)");
}

DecompResult decomp(const WeightedGraph& g, Vertex u, Vertex v) {
    if (u == v || u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
        throw InputError("decomp: separator must be two distinct vertices of the graph");
    if (u > v)
        std::swap(u, v);
    const Vertex removed[] = {u, v};
    if (components_without(g, removed).size() < 3)
        throw PreconditionError("decomp: G - {" + std::to_string(u) + "," + std::to_string(v) +
                                "} has fewer than three components");

    Path sep = lex_shortest_paths_from(g, u)[static_cast<std::size_t>(v)];
    std::vector<Vertex> avoided = choose_avoiding_component(g, u, v, sep);

    std::vector<char> in_h(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex x : avoided)
        in_h[static_cast<std::size_t>(x)] = 1;
    auto is_sep = [&](Vertex x) { return x == u || x == v; };

    std::vector<EdgeId> g1_edges = path_edges(g, sep);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        bool a = in_h[static_cast<std::size_t>(ed.u)];
        bool b = in_h[static_cast<std::size_t>(ed.v)];
        if ((a && b) || (a && is_sep(ed.v)) || (b && is_sep(ed.u)))
            g1_edges.push_back(e);
    }
    std::vector<Vertex> g1_vertices = avoided;
    g1_vertices.insert(g1_vertices.end(), sep.vertices.begin(), sep.vertices.end());

    std::vector<Vertex> rest;
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        if (!in_h[static_cast<std::size_t>(x)])
            rest.push_back(x);

    return DecompResult{
        edge_subgraph(g, g1_edges, g1_vertices),
        induced_subgraph(g, rest),
        {u, v},
        std::move(sep),
        std::move(avoided),
    };
}

} // namespace lexcycle

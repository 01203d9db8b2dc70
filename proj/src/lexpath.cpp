#include "lexcycle/lexpath.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace lexcycle {

std::strong_ordering compare_paths(const Path& p, const Path& q_in) {
    if (p.vertices.empty() || q_in.vertices.empty())
        throw InputError("cannot compare empty paths");
    const Path* q = &q_in;
    Path flipped;
    if (q_in.source() != p.source()) {
        if (q_in.source() == p.target() && q_in.target() == p.source()) {
            flipped = q_in.reversed();
            q = &flipped;
        } else {
            throw InputError("compared paths have different endpoints");
        }
    } else if (q_in.target() != p.target()) {
        throw InputError("compared paths have different endpoints");
    }

    if (auto c = p.weight <=> q->weight; c != 0)
        return c;
    if (auto c = p.length() <=> q->length(); c != 0)
        return c;

    std::vector<Vertex> a = p.vertices;
    std::vector<Vertex> b = q->vertices;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    // Equal lengths mean equal vertex counts, so the first mismatch in the
    // sorted lists is the minimum of the symmetric difference. Whichever list
    // holds it owns the smaller private vertex.
    auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
    if (ia != a.end())
        return *ia <=> *ib;

    if (p.source() < p.target())
        return p.vertices <=> q->vertices;
    return std::lexicographical_compare_three_way(p.vertices.rbegin(), p.vertices.rend(), q->vertices.rbegin(),
                                                  q->vertices.rend());
}

std::vector<Path> lex_shortest_paths_from(const WeightedGraph& g, Vertex source) {
    if (source < 0 || source >= g.vertex_count())
        throw InputError("source vertex out of range");
    auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<Path> best(n);
    std::vector<char> done(n, 0);

    // (weight, edge count, vertex); rule 3 ties only ever arise between
    // labels of one vertex, which relaxation settles directly.
    using Key = std::tuple<Weight, int, Vertex>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;

    best[static_cast<std::size_t>(source)] = Path{{source}, 0};
    queue.emplace(0, 0, source);
    while (!queue.empty()) {
        auto [w, len, x] = queue.top();
        queue.pop();
        auto xi = static_cast<std::size_t>(x);
        if (done[xi])
            continue;
        done[xi] = 1;
        const Path& px = best[xi];
        for (auto [y, e] : g.neighbors(x)) {
            auto yi = static_cast<std::size_t>(y);
            if (done[yi])
                continue;
            Path candidate = px;
            candidate.vertices.push_back(y);
            candidate.weight += g.edge(e).weight;
            if (best[yi].vertices.empty() || compare_paths(candidate, best[yi]) < 0) {
                queue.emplace(candidate.weight, candidate.length(), y);
                best[yi] = std::move(candidate);
            }
        }
    }
    return best;
}

LspTable::LspTable(const WeightedGraph& g) : n_(g.vertex_count()) {
    rows_.reserve(static_cast<std::size_t>(n_));
    for (Vertex s = 0; s < n_; ++s)
        rows_.push_back(lex_shortest_paths_from(g, s));
}

Path brute_force_lsp(const WeightedGraph& g, Vertex u, Vertex v) {
    if (g.vertex_count() > kBruteForcePathLimit)
        throw InputError("brute_force_lsp: graph exceeds " + std::to_string(kBruteForcePathLimit) + " vertices");
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
        throw InputError("brute_force_lsp: vertex out of range");
    if (u == v)
        return Path{{u}, 0};

    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
    Path current{{u}, 0};
    Path best;
    on_path[static_cast<std::size_t>(u)] = 1;

    auto extend = [&](auto&& self, Vertex x) -> void {
        for (auto [y, e] : g.neighbors(x)) {
            if (on_path[static_cast<std::size_t>(y)])
                continue;
            current.vertices.push_back(y);
            current.weight += g.edge(e).weight;
            if (y == v) {
                if (best.vertices.empty() || compare_paths(current, best) < 0)
                    best = current;
            } else {
                on_path[static_cast<std::size_t>(y)] = 1;
                self(self, y);
                on_path[static_cast<std::size_t>(y)] = 0;
            }
            current.vertices.pop_back();
            current.weight -= g.edge(e).weight;
        }
    };
    extend(extend, u);
    return best;
}

} // namespace lexcycle

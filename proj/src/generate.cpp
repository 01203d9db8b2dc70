#include "lexcycle/generate.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

namespace lexcycle {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi)
        throw std::invalid_argument("Rng::uniform: empty range");
    auto range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0)
        return static_cast<std::int64_t>(engine_());
    // Largest multiple of range that fits; draws at or above it are rejected.
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % range);
}

std::vector<Vertex> Rng::permutation(int n) {
    std::vector<Vertex> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        p[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(uniform(0, i))]);
    return p;
}

Family parse_family(std::string_view name) {
    if (name == "partial2tree")
        return Family::partial2tree;
    if (name == "outerplanar")
        return Family::outerplanar;
    if (name == "wheel")
        return Family::wheel;
    throw InputError("unknown generator family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
    switch (f) {
    case Family::partial2tree:
        return "partial2tree";
    case Family::outerplanar:
        return "outerplanar";
    case Family::wheel:
        return "wheel";
    }
    return "?";
}

namespace {

WeightedGraph relabeled(int n, std::vector<Edge> edges, const std::vector<Vertex>& perm) {
    for (Edge& e : edges) {
        e.u = perm[static_cast<std::size_t>(e.u)];
        e.v = perm[static_cast<std::size_t>(e.v)];
        if (e.u > e.v)
            std::swap(e.u, e.v);
    }
    return WeightedGraph(n, std::move(edges));
}

void check_common(const GeneratorSpec& spec) {
    if (spec.n < 3)
        throw InputError("generator needs n >= 3");
    if (spec.max_weight < 1)
        throw InputError("generator needs max_weight >= 1");
}

} // namespace

WeightedGraph gen_partial_2tree(const GeneratorSpec& spec) {
    check_common(spec);
    int n = spec.n;
    int m = 2 * n - 3;
    if (spec.delete_count < 0 || spec.delete_count > m - n + 1)
        throw InputError("cannot delete " + std::to_string(spec.delete_count) + " edges from a 2-tree on " +
                         std::to_string(n) + " vertices and stay connected (at most " + std::to_string(m - n + 1) +
                         ")");
    Rng rng(spec.seed);

    std::vector<Edge> edges{{0, 1, 1}, {1, 2, 1}, {0, 2, 1}};
    for (Vertex x = 3; x < n; ++x) {
        Edge base = edges[rng.index(edges.size())];
        edges.push_back({base.u, x, 1});
        edges.push_back({base.v, x, 1});
    }
    for (Edge& e : edges)
        e.weight = rng.uniform(1, spec.max_weight);

    for (int d = 0; d < spec.delete_count; ++d) {
        WeightedGraph current(n, edges);
        std::vector<EdgeId> removable;
        for (const auto& block : block_edge_sets(current))
            if (block.size() > 1)
                removable.insert(removable.end(), block.begin(), block.end());
        std::sort(removable.begin(), removable.end());
        edges.erase(edges.begin() + removable[rng.index(removable.size())]);
    }
    return relabeled(n, std::move(edges), rng.permutation(n));
}

WeightedGraph gen_wheel(int n, Weight rim_weight, Weight spoke_weight) {
    if (n < 4)
        throw InputError("wheel needs n >= 4");
    if (rim_weight < 1 || spoke_weight < 1)
        throw InputError("wheel weights must be >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 1; i < n; ++i)
        edges.push_back({i, i + 1 < n ? i + 1 : 1, rim_weight});
    for (Vertex i = 1; i < n; ++i)
        edges.push_back({0, i, spoke_weight});
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph gen_outerplanar(const GeneratorSpec& spec) {
    check_common(spec);
    int n = spec.n;
    Rng rng(spec.seed);

    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n, 1});

    std::vector<std::vector<Vertex>> faces{{}};
    for (Vertex i = 0; i < n; ++i)
        faces[0].push_back(i);
    auto chords = rng.uniform(0, n - 3);
    for (std::int64_t c = 0; c < chords; ++c) {
        std::vector<std::size_t> open;
        for (std::size_t f = 0; f < faces.size(); ++f)
            if (faces[f].size() >= 4)
                open.push_back(f);
        auto face = faces[open[rng.index(open.size())]];
        auto k = static_cast<std::int64_t>(face.size());
        // Positions i < j that are not neighbors on the face.
        std::int64_t i, j;
        do {
            i = rng.uniform(0, k - 1);
            j = rng.uniform(0, k - 1);
            if (i > j)
                std::swap(i, j);
        } while (j - i < 2 || (i == 0 && j == k - 1));
        auto iu = static_cast<std::size_t>(i);
        auto ju = static_cast<std::size_t>(j);
        std::vector<Vertex> left(face.begin() + static_cast<std::ptrdiff_t>(iu),
                                 face.begin() + static_cast<std::ptrdiff_t>(ju) + 1);
        std::vector<Vertex> right(face.begin() + static_cast<std::ptrdiff_t>(ju), face.end());
        right.insert(right.end(), face.begin(), face.begin() + static_cast<std::ptrdiff_t>(iu) + 1);
        edges.push_back({face[iu], face[ju], 1});
        auto slot = std::find(faces.begin(), faces.end(), face);
        *slot = std::move(left);
        faces.push_back(std::move(right));
    }
    for (Edge& e : edges)
        e.weight = rng.uniform(1, spec.max_weight);
    return relabeled(n, std::move(edges), rng.permutation(n));
}

WeightedGraph generate(const GeneratorSpec& spec) {
    switch (spec.family) {
    case Family::partial2tree:
        return gen_partial_2tree(spec);
    case Family::outerplanar:
        return gen_outerplanar(spec);
    case Family::wheel:
        return gen_wheel(spec.n, spec.rim_weight, spec.spoke_weight);
    }
    throw InputError("unknown generator family");
}

WeightedGraph gen_random_connected(int n, int extra_edges, Weight max_weight, std::uint64_t seed) {
    if (n < 1 || max_weight < 1 || extra_edges < 0)
        throw InputError("gen_random_connected: invalid arguments");
    Rng rng(seed);
    std::vector<Edge> edges;
    std::set<std::pair<Vertex, Vertex>> present;
    for (Vertex x = 1; x < n; ++x) {
        auto parent = static_cast<Vertex>(rng.uniform(0, x - 1));
        edges.push_back({parent, x, 1});
        present.emplace(parent, x);
    }
    auto max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
    auto target = std::min<std::int64_t>(static_cast<std::int64_t>(edges.size()) + extra_edges, max_edges);
    while (static_cast<std::int64_t>(edges.size()) < target) {
        auto a = static_cast<Vertex>(rng.uniform(0, n - 1));
        auto b = static_cast<Vertex>(rng.uniform(0, n - 1));
        if (a == b)
            continue;
        if (a > b)
            std::swap(a, b);
        if (present.emplace(a, b).second)
            edges.push_back({a, b, 1});
    }
    for (Edge& e : edges)
        e.weight = rng.uniform(1, max_weight);
    return relabeled(n, std::move(edges), rng.permutation(n));
}

} // namespace lexcycle

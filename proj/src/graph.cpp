#include "lexcycle/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

namespace lexcycle {

namespace {

std::vector<Vertex> identity_labels(int n) {
    std::vector<Vertex> labels(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(labels.begin(), labels.end(), 0);
    return labels;
}

bool is_connected(int n, const std::vector<std::vector<Incidence>>& adjacency) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (auto [y, e] : adjacency[static_cast<std::size_t>(x)]) {
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == n;
}

} // namespace

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges)
    : WeightedGraph(n, std::move(edges), identity_labels(n)) {}

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges, std::vector<Vertex> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ < 1)
        throw InputError("graph must have at least one vertex");
    if (static_cast<int>(labels_.size()) != n_)
        throw InputError("label count does not match vertex count");
    for (std::size_t i = 1; i < labels_.size(); ++i)
        if (labels_[i - 1] >= labels_[i])
            throw InputError("vertex labels must be strictly increasing");

    adjacency_.assign(static_cast<std::size_t>(n_), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        Edge& e = edges_[i];
        if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
            throw InputError("edge " + std::to_string(i) + ": vertex id out of range");
        if (e.u == e.v)
            throw InputError("edge " + std::to_string(i) + ": loop at vertex " + std::to_string(e.u));
        if (e.weight < 1)
            throw InputError("edge " + std::to_string(i) + ": weight must be positive");
        if (e.u > e.v)
            std::swap(e.u, e.v);
        if (has_edge(e.u, e.v))
            throw InputError("edge " + std::to_string(i) + ": duplicate edge {" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + "}");
        auto id = static_cast<EdgeId>(i);
        adjacency_[static_cast<std::size_t>(e.u)].push_back({e.v, id});
        adjacency_[static_cast<std::size_t>(e.v)].push_back({e.u, id});
    }
    if (!is_connected(n_, adjacency_))
        throw InputError("graph is disconnected");
}

EdgeId WeightedGraph::find_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        return -1;
    const auto& a = adjacency_[static_cast<std::size_t>(u)];
    const auto& b = adjacency_[static_cast<std::size_t>(v)];
    const auto& scan = a.size() <= b.size() ? a : b;
    Vertex target = a.size() <= b.size() ? v : u;
    for (auto [y, e] : scan)
        if (y == target)
            return e;
    return -1;
}

Vertex WeightedGraph::index_of_label(Vertex label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        return -1;
    return static_cast<Vertex>(it - labels_.begin());
}

Weight WeightedGraph::total_weight() const {
    Weight sum = 0;
    for (const Edge& e : edges_)
        sum += e.weight;
    return sum;
}

// ---------------------------------------------------------------------------
// Paths

Path Path::reversed() const {
    Path r = *this;
    std::reverse(r.vertices.begin(), r.vertices.end());
    return r;
}

Path make_path(const WeightedGraph& g, std::vector<Vertex> vertices) {
    if (vertices.empty())
        throw InputError("path has no vertices");
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    Path p;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        Vertex x = vertices[i];
        if (x < 0 || x >= g.vertex_count())
            throw InputError("path vertex out of range");
        if (seen[static_cast<std::size_t>(x)])
            throw InputError("path repeats vertex " + std::to_string(x));
        seen[static_cast<std::size_t>(x)] = 1;
        if (i > 0) {
            EdgeId e = g.find_edge(vertices[i - 1], x);
            if (e < 0)
                throw InputError("path uses a missing edge");
            p.weight += g.edge(e).weight;
        }
    }
    p.vertices = std::move(vertices);
    return p;
}

std::vector<EdgeId> path_edges(const WeightedGraph& g, const Path& p) {
    std::vector<EdgeId> out;
    out.reserve(p.vertices.size());
    for (std::size_t i = 1; i < p.vertices.size(); ++i)
        out.push_back(g.find_edge(p.vertices[i - 1], p.vertices[i]));
    return out;
}

// ---------------------------------------------------------------------------
// Cycles

Cycle Cycle::from_edges(const WeightedGraph& g, std::vector<EdgeId> edges) {
    if (edges.size() < 3)
        throw InputError("a cycle needs at least three edges");
    for (EdgeId e : edges)
        if (e < 0 || e >= g.edge_count())
            throw InputError("cycle edge id out of range");

    auto endpoint_less = [&g](EdgeId a, EdgeId b) {
        const Edge& x = g.edge(a);
        const Edge& y = g.edge(b);
        return std::pair(x.u, x.v) < std::pair(y.u, y.v);
    };
    std::sort(edges.begin(), edges.end(), endpoint_less);
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw InputError("cycle repeats an edge");

    // Two incident cycle edges per vertex.
    std::vector<std::pair<EdgeId, EdgeId>> slot(static_cast<std::size_t>(g.vertex_count()), {-1, -1});
    Weight weight = 0;
    for (EdgeId e : edges) {
        weight += g.edge(e).weight;
        for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
            auto& s = slot[static_cast<std::size_t>(x)];
            if (s.first < 0)
                s.first = e;
            else if (s.second < 0)
                s.second = e;
            else
                throw InputError("cycle vertex has degree above two");
        }
    }
    Vertex start = -1;
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        const auto& s = slot[static_cast<std::size_t>(x)];
        if (s.first >= 0 && s.second < 0)
            throw InputError("cycle vertex has degree one");
        if (s.first >= 0 && start < 0)
            start = x;
    }

    const auto& s0 = slot[static_cast<std::size_t>(start)];
    Vertex a = g.edge(s0.first).other(start);
    Vertex b = g.edge(s0.second).other(start);
    EdgeId via = a < b ? s0.first : s0.second;

    Cycle c;
    c.vertices_.push_back(start);
    Vertex cur = start;
    for (std::size_t step = 0; step < edges.size(); ++step) {
        Vertex next = g.edge(via).other(cur);
        if (next == start)
            break;
        c.vertices_.push_back(next);
        const auto& s = slot[static_cast<std::size_t>(next)];
        via = s.first == via ? s.second : s.first;
        cur = next;
    }
    if (c.vertices_.size() != edges.size())
        throw InputError("cycle edge set is not connected");
    c.edges_ = std::move(edges);
    c.weight_ = weight;
    return c;
}

Cycle Cycle::from_vertices(const WeightedGraph& g, std::span<const Vertex> sequence) {
    std::vector<EdgeId> edges;
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        Vertex a = sequence[i];
        Vertex b = sequence[(i + 1) % sequence.size()];
        EdgeId e = g.find_edge(a, b);
        if (e < 0)
            throw InputError("cycle uses a missing edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
        edges.push_back(e);
    }
    Cycle c = from_edges(g, std::move(edges));
    if (c.vertices_.size() != sequence.size())
        throw InputError("cycle sequence repeats a vertex");
    return c;
}

bool Cycle::contains_edge(EdgeId e) const {
    return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

std::vector<std::pair<Vertex, Vertex>> labeled_edge_set(const WeightedGraph& g, const Cycle& c) {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(c.edges().size());
    for (EdgeId e : c.edges())
        out.emplace_back(g.label(g.edge(e).u), g.label(g.edge(e).v));
    std::sort(out.begin(), out.end());
    return out;
}

bool canonical_less(const WeightedGraph& g, const Cycle& a, const Cycle& b) {
    if (a.weight() != b.weight())
        return a.weight() < b.weight();
    if (a.length() != b.length())
        return a.length() < b.length();
    return std::lexicographical_compare(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                                        [&g](EdgeId x, EdgeId y) {
                                            return std::pair(g.edge(x).u, g.edge(x).v) <
                                                   std::pair(g.edge(y).u, g.edge(y).v);
                                        });
}

CycleSet::CycleSet(const WeightedGraph& g, std::vector<Cycle> cycles) : cycles_(std::move(cycles)) {
    std::sort(cycles_.begin(), cycles_.end(),
              [&g](const Cycle& a, const Cycle& b) { return canonical_less(g, a, b); });
    cycles_.erase(std::unique(cycles_.begin(), cycles_.end()), cycles_.end());
    for (const Cycle& c : cycles_)
        total_weight_ += c.weight();
}

// ---------------------------------------------------------------------------
// GF(2) vectors

std::size_t BitVector::popcount() const {
    std::size_t n = 0;
    for (auto w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool BitVector::none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVector::lowest() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] != 0)
            return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return bits_;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.bits_ != bits_)
        throw std::invalid_argument("BitVector width mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= other.words_[i];
    return *this;
}

std::string BitVector::to_string() const {
    std::string s(bits_, '0');
    for (std::size_t i = 0; i < bits_; ++i)
        if (test(i))
            s[i] = '1';
    return s;
}

BitVector incidence_vector(const WeightedGraph& g, const Cycle& c) {
    BitVector x(static_cast<std::size_t>(g.edge_count()));
    for (EdgeId e : c.edges()) {
        if (e < 0 || e >= g.edge_count())
            throw InputError("cycle edge is not in the graph");
        x.set(static_cast<std::size_t>(e));
    }
    return x;
}

BitVector incidence_vector(const WeightedGraph& g, std::span<const std::pair<Vertex, Vertex>> cycle_edges) {
    BitVector x(static_cast<std::size_t>(g.edge_count()));
    for (auto [a, b] : cycle_edges) {
        EdgeId e = g.find_edge(a, b);
        if (e < 0)
            throw InputError("cycle edge {" + std::to_string(a) + "," + std::to_string(b) + "} is not in the graph");
        x.set(static_cast<std::size_t>(e));
    }
    return x;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t')
            ++j;
        if (j > i)
            fields.push_back(line.substr(i, j - i));
        i = j;
    }
    return fields;
}

std::int64_t parse_int(std::string_view field, int line_no) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw InputError("line " + std::to_string(line_no) + ": malformed integer '" + std::string(field) + "'");
    return value;
}

} // namespace

WeightedGraph parse_graph(std::istream& in) {
    std::string raw;
    int line_no = 0;
    std::int64_t n = -1;
    std::int64_t m = -1;
    std::vector<Edge> edges;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (!line.empty() && line.front() == '#')
            continue;
        auto fields = split_fields(line);
        if (fields.empty())
            continue;
        auto where = "line " + std::to_string(line_no) + ": ";

        if (n < 0) {
            if (fields[0] != "p" || fields.size() != 3)
                throw InputError(where + "expected 'p <n> <m>'");
            n = parse_int(fields[1], line_no);
            m = parse_int(fields[2], line_no);
            if (n < 1 || m < 0 || n > (1 << 30))
                throw InputError(where + "invalid problem line");
            continue;
        }
        if (fields[0] != "e" || fields.size() != 4)
            throw InputError(where + "expected 'e <u> <v> <w>'");
        if (static_cast<std::int64_t>(edges.size()) >= m)
            throw InputError(where + "more edges than declared");
        auto u = parse_int(fields[1], line_no);
        auto v = parse_int(fields[2], line_no);
        auto w = parse_int(fields[3], line_no);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError(where + "vertex id out of range");
        if (u == v)
            throw InputError(where + "loop at vertex " + std::to_string(u));
        if (w < 1)
            throw InputError(where + "weight must be positive");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
    }
    if (n < 0)
        throw InputError("missing 'p <n> <m>' line");
    if (static_cast<std::int64_t>(edges.size()) != m)
        throw InputError("declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return WeightedGraph(static_cast<int>(n), std::move(edges));
}

WeightedGraph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

WeightedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    return parse_graph(in);
}

std::string serialize_graph(const WeightedGraph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges())
        out << "e " << e.u << ' ' << e.v << ' ' << e.weight << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Subgraphs

namespace {

WeightedGraph build_subgraph(const WeightedGraph& g, std::vector<char> keep_vertex, std::vector<EdgeId> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (EdgeId e : edges) {
        keep_vertex[static_cast<std::size_t>(g.edge(e).u)] = 1;
        keep_vertex[static_cast<std::size_t>(g.edge(e).v)] = 1;
    }
    std::vector<Vertex> local(keep_vertex.size(), -1);
    std::vector<Vertex> labels;
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        if (keep_vertex[static_cast<std::size_t>(x)]) {
            local[static_cast<std::size_t>(x)] = static_cast<Vertex>(labels.size());
            labels.push_back(g.label(x));
        }
    }
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (EdgeId e : edges) {
        const Edge& src = g.edge(e);
        out.push_back({local[static_cast<std::size_t>(src.u)], local[static_cast<std::size_t>(src.v)], src.weight});
    }
    auto n = static_cast<int>(labels.size());
    return WeightedGraph(n, std::move(out), std::move(labels));
}

} // namespace

WeightedGraph edge_subgraph(const WeightedGraph& g, std::span<const EdgeId> edges,
                            std::span<const Vertex> extra_vertices) {
    std::vector<char> keep(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex x : extra_vertices)
        keep[static_cast<std::size_t>(x)] = 1;
    return build_subgraph(g, std::move(keep), {edges.begin(), edges.end()});
}

WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const Vertex> vertices) {
    std::vector<char> keep(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex x : vertices)
        keep[static_cast<std::size_t>(x)] = 1;
    std::vector<EdgeId> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (keep[static_cast<std::size_t>(g.edge(e).u)] && keep[static_cast<std::size_t>(g.edge(e).v)])
            edges.push_back(e);
    return build_subgraph(g, std::move(keep), std::move(edges));
}

// ---------------------------------------------------------------------------
// Blocks (Hopcroft-Tarjan with an explicit edge stack)

namespace {

struct BlockScan {
    std::vector<std::vector<EdgeId>> blocks;
    std::vector<Vertex> cut_vertices;
};

BlockScan scan_blocks(const WeightedGraph& g) {
    auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> depth(n, -1);
    std::vector<int> low(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<EdgeId> edge_stack;
    BlockScan out;

    struct Frame {
        Vertex vertex;
        EdgeId parent_edge;
        std::size_t next;
    };
    std::vector<Frame> stack{{0, -1, 0}};
    depth[0] = 0;
    int root_children = 0;

    while (!stack.empty()) {
        Frame& f = stack.back();
        auto nbrs = g.neighbors(f.vertex);
        if (f.next < nbrs.size()) {
            auto [y, e] = nbrs[f.next++];
            if (e == f.parent_edge)
                continue;
            auto yi = static_cast<std::size_t>(y);
            auto xi = static_cast<std::size_t>(f.vertex);
            if (depth[yi] < 0) {
                edge_stack.push_back(e);
                depth[yi] = depth[xi] + 1;
                low[yi] = depth[yi];
                if (f.vertex == 0)
                    ++root_children;
                stack.push_back({y, e, 0});
            } else if (depth[yi] < depth[xi]) {
                edge_stack.push_back(e);
                low[xi] = std::min(low[xi], depth[yi]);
            }
            continue;
        }
        Frame done = f;
        stack.pop_back();
        if (stack.empty())
            break;
        auto parent = static_cast<std::size_t>(stack.back().vertex);
        auto child = static_cast<std::size_t>(done.vertex);
        low[parent] = std::min(low[parent], low[child]);
        if (low[child] >= depth[parent]) {
            if (parent != 0)
                is_cut[parent] = 1;
            std::vector<EdgeId> block;
            while (true) {
                EdgeId e = edge_stack.back();
                edge_stack.pop_back();
                block.push_back(e);
                if (e == done.parent_edge)
                    break;
            }
            std::sort(block.begin(), block.end());
            out.blocks.push_back(std::move(block));
        }
    }
    if (root_children > 1)
        is_cut[0] = 1;
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        if (is_cut[static_cast<std::size_t>(x)])
            out.cut_vertices.push_back(x);
    return out;
}

} // namespace

std::vector<std::vector<EdgeId>> block_edge_sets(const WeightedGraph& g) {
    return scan_blocks(g).blocks;
}

std::vector<WeightedGraph> blocks(const WeightedGraph& g) {
    std::vector<WeightedGraph> out;
    for (const auto& edges : block_edge_sets(g))
        out.push_back(edge_subgraph(g, edges));
    return out;
}

std::vector<Vertex> articulation_points(const WeightedGraph& g) {
    return scan_blocks(g).cut_vertices;
}

std::vector<std::vector<Vertex>> components_without(const WeightedGraph& g, std::span<const Vertex> removed) {
    auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<char> seen(n, 0);
    for (Vertex x : removed)
        seen[static_cast<std::size_t>(x)] = 1;
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[static_cast<std::size_t>(s)])
            continue;
        std::vector<Vertex> comp{s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (auto [y, e] : g.neighbors(comp[i])) {
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    comp.push_back(y);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

} // namespace lexcycle

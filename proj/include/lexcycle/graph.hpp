#ifndef LEXCYCLE_GRAPH_HPP
#define LEXCYCLE_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lexcycle {

using Vertex = int;
using EdgeId = int;
using Weight = std::int64_t;

/// Malformed or invalid input (bad file, bad arguments, violated precondition).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller asked for an operation outside its domain (e.g. not a partial 2-tree).
class PreconditionError : public InputError {
public:
    using InputError::InputError;
};

/// A self-check failed. Always signals a bug, never bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Undirected weighted edge, normalized so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    Weight weight = 1;

    Vertex other(Vertex x) const { return x == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
    Vertex neighbor;
    EdgeId edge;
};

/*
 * Simple, connected, undirected graph with positive integer weights.
 *
 * Vertices are 0..n-1 and their numeric order is the total order used by the
 * lex comparisons. A graph extracted from a larger one (a block, a decomp
 * half) is re-indexed densely; label(v) maps back to the id in the root graph.
 * Labels are strictly increasing, so re-indexing preserves the vertex order.
 *
 * Edge ids follow insertion order and index incidence vectors.
 */
class WeightedGraph {
public:
    /// Validates simplicity, weights, id range and connectivity; throws InputError.
    WeightedGraph(int n, std::vector<Edge> edges);
    WeightedGraph(int n, std::vector<Edge> edges, std::vector<Vertex> labels);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    /// m - n + 1, the dimension of the cycle space.
    int cycle_rank() const { return edge_count() - n_ + 1; }

    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const Incidence> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    /// Edge id joining u and v, or -1.
    EdgeId find_edge(Vertex u, Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const { return find_edge(u, v) >= 0; }

    Vertex label(Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }
    std::span<const Vertex> labels() const { return labels_; }
    /// Local index of a root-graph label, or -1.
    Vertex index_of_label(Vertex label) const;

    Weight total_weight() const;

    friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<Vertex> labels_;
    std::vector<std::vector<Incidence>> adjacency_;
};

/// Simple path v0..vk in a host graph.
struct Path {
    std::vector<Vertex> vertices;
    Weight weight = 0;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    Vertex source() const { return vertices.front(); }
    Vertex target() const { return vertices.back(); }
    Path reversed() const;

    friend bool operator==(const Path&, const Path&) = default;
};

/// Builds a path from a vertex sequence, checking distinctness and adjacency.
Path make_path(const WeightedGraph& g, std::vector<Vertex> vertices);

/// Edge ids along a path, in order.
std::vector<EdgeId> path_edges(const WeightedGraph& g, const Path& p);

/*
 * Simple cycle of a host graph.
 *
 * edges() is sorted by (min endpoint, max endpoint); vertices() is the cyclic
 * sequence starting at the smallest vertex and continuing toward its smaller
 * neighbor. Both forms are canonical, so two Cycles of one graph are equal
 * iff their edge sets are.
 */
class Cycle {
public:
    /// Throws InputError unless the edge set is connected and 2-regular.
    static Cycle from_edges(const WeightedGraph& g, std::vector<EdgeId> edges);
    /// Closed walk v0..vk (v0 is not repeated at the end).
    static Cycle from_vertices(const WeightedGraph& g, std::span<const Vertex> sequence);

    std::span<const EdgeId> edges() const { return edges_; }
    std::span<const Vertex> vertices() const { return vertices_; }
    Weight weight() const { return weight_; }
    int length() const { return static_cast<int>(edges_.size()); }
    bool contains_edge(EdgeId e) const;

    friend bool operator==(const Cycle& a, const Cycle& b) { return a.edges_ == b.edges_; }

private:
    Cycle() = default;
    std::vector<EdgeId> edges_;
    std::vector<Vertex> vertices_;
    Weight weight_ = 0;
};

/// Endpoint pairs of a cycle in root labels, sorted. Comparable across graphs.
std::vector<std::pair<Vertex, Vertex>> labeled_edge_set(const WeightedGraph& g, const Cycle& c);

/// Canonical cycle order: weight, then length, then sorted endpoint pairs.
bool canonical_less(const WeightedGraph& g, const Cycle& a, const Cycle& b);

/// Deduplicated, canonically ordered collection of cycles of one graph.
class CycleSet {
public:
    CycleSet() = default;
    /// Sorts canonically and drops duplicate edge sets.
    CycleSet(const WeightedGraph& g, std::vector<Cycle> cycles);

    std::span<const Cycle> cycles() const { return cycles_; }
    std::size_t size() const { return cycles_.size(); }
    bool empty() const { return cycles_.empty(); }
    const Cycle& operator[](std::size_t i) const { return cycles_[i]; }
    auto begin() const { return cycles_.begin(); }
    auto end() const { return cycles_.end(); }
    Weight total_weight() const { return total_weight_; }

private:
    std::vector<Cycle> cycles_;
    Weight total_weight_ = 0;
};

/// Fixed-width bit vector over GF(2).
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    std::size_t popcount() const;
    bool none() const;
    /// Index of the lowest set bit, or size() if none.
    std::size_t lowest() const;
    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;
    std::string to_string() const;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Indicator of E(c) over the edge ids of g.
BitVector incidence_vector(const WeightedGraph& g, const Cycle& c);
/// Same, for a cycle given as endpoint pairs; throws InputError if an edge is absent.
BitVector incidence_vector(const WeightedGraph& g, std::span<const std::pair<Vertex, Vertex>> cycle_edges);

/// Reads the line-oriented edge-list format. Throws InputError with a line number.
WeightedGraph parse_graph(std::istream& in);
WeightedGraph parse_graph(std::string_view text);
WeightedGraph read_graph_file(const std::string& path);

/// Canonical text form: `p n m` then `e u v w` per edge with u < v, no comments.
std::string serialize_graph(const WeightedGraph& g);

/// Subgraph with the given edges and their endpoints plus `extra_vertices`.
WeightedGraph edge_subgraph(const WeightedGraph& g, std::span<const EdgeId> edges,
                            std::span<const Vertex> extra_vertices = {});
/// G[X].
WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const Vertex> vertices);

/// Maximal 2-connected subgraphs and bridges, ordered by their smallest edge id.
std::vector<WeightedGraph> blocks(const WeightedGraph& g);
/// Edge ids of each block, same order as blocks().
std::vector<std::vector<EdgeId>> block_edge_sets(const WeightedGraph& g);

/// Connected components of g - removed, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components_without(const WeightedGraph& g, std::span<const Vertex> removed);

/// Cut vertices of g, ascending.
std::vector<Vertex> articulation_points(const WeightedGraph& g);

} // namespace lexcycle

#endif

#ifndef LEXCYCLE_LEXPATH_HPP
#define LEXCYCLE_LEXPATH_HPP

#include <compare>
#include <vector>

#include "lexcycle/graph.hpp"

namespace lexcycle {

/*
 * Total order on paths with the same endpoints:
 *   1. smaller weight first;
 *   2. then fewer edges;
 *   3. then the path whose private vertices (those not on the other path)
 *      have the smaller minimum;
 *   4. if both paths visit the same vertex set, the vertex sequences read
 *      from the lower-numbered endpoint are compared lexicographically.
 *
 * `q` may be given in either direction. Throws InputError when the endpoint
 * sets differ. Returns equal only for identical paths.
 */
std::strong_ordering compare_paths(const Path& p, const Path& q);

inline bool path_less(const Path& p, const Path& q) { return compare_paths(p, q) < 0; }

/// Lex shortest paths from `source` to every vertex, indexed by target.
/// Entry `source` is the one-vertex path.
std::vector<Path> lex_shortest_paths_from(const WeightedGraph& g, Vertex source);

/// All-pairs lex shortest paths. Write once, then read-only.
class LspTable {
public:
    LspTable() = default;
    explicit LspTable(const WeightedGraph& g);

    int vertex_count() const { return n_; }
    /// lsp(u, v), oriented from u to v.
    const Path& path(Vertex u, Vertex v) const {
        return rows_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    }
    /// The tree of lex shortest paths rooted at `source`, indexed by target.
    const std::vector<Path>& from(Vertex source) const { return rows_[static_cast<std::size_t>(source)]; }

private:
    int n_ = 0;
    std::vector<std::vector<Path>> rows_;
};

inline LspTable lsp_table(const WeightedGraph& g) { return LspTable(g); }

/// Largest vertex count accepted by brute_force_lsp.
inline constexpr int kBruteForcePathLimit = 14;

/// Exhaustive oracle: minimum over all simple u-v paths. Throws InputError past the size guard.
Path brute_force_lsp(const WeightedGraph& g, Vertex u, Vertex v);

} // namespace lexcycle

#endif

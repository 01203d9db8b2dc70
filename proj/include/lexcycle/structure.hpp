#ifndef LEXCYCLE_STRUCTURE_HPP
#define LEXCYCLE_STRUCTURE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "lexcycle/graph.hpp"

namespace lexcycle {

/// Treewidth <= 2 test by series-parallel reduction: delete vertices of degree
/// <= 1, suppress vertices of degree 2 (merging parallel edges), and accept iff
/// nothing is left.
bool is_partial_2tree(const WeightedGraph& g);

/*
 * Smallest pair {u, v} (u < v) that lies in one block of g and splits that
 * block into at least three components. Removing the pair from g then also
 * leaves at least three components. Pairs spanning two blocks are ignored:
 * on a path 0-1-2-3-4 the pair {1, 3} splits the graph three ways without any
 * K2,3 being present.
 *
 * Throws PreconditionError unless g is a partial 2-tree.
 */
std::optional<std::pair<Vertex, Vertex>> find_three_component_separator(const WeightedGraph& g);

/// Outerplanarity of a partial 2-tree, decided per block by the absence of a
/// three-component separator. Throws PreconditionError on other graphs.
bool is_outerplanar(const WeightedGraph& g);

/// The first component of g - {u, v} (by smallest vertex) sharing no vertex or
/// edge with p. Throws InputError if {u, v} does not separate g or p does not
/// join u and v; InternalError if no component qualifies.
std::vector<Vertex> choose_avoiding_component(const WeightedGraph& g, Vertex u, Vertex v, const Path& p);

/// G1 and G2 of decomp(G, u, v); both are re-indexed, carrying root labels.
struct DecompResult {
    WeightedGraph g1;
    WeightedGraph g2;
    std::pair<Vertex, Vertex> separator;
    Path sep_path;                ///< lsp(u, v) in the ids of the decomposed graph
    std::vector<Vertex> avoided;  ///< V(H), same ids
};

/*
 * Splits g along the separator {u, v}:
 *   G1 = H + lsp(u, v) + the edges between H and {u, v},
 *   G2 = g[V \ V(H)],
 * where H is the component picked by choose_avoiding_component. The two halves
 * share exactly lsp(u, v).
 *
 * Throws PreconditionError unless g - {u, v} has at least three components.
 */
DecompResult decomp(const WeightedGraph& g, Vertex u, Vertex v);

} // namespace lexcycle

#endif

#ifndef LEXCYCLE_LSC_HPP
#define LEXCYCLE_LSC_HPP

#include <cstddef>
#include <vector>

#include "lexcycle/graph.hpp"
#include "lexcycle/lexpath.hpp"

namespace lexcycle {

/// True iff lsp(u, v) lies inside c for every pair of vertices of c.
bool is_lex_short(const WeightedGraph& g, const Cycle& c, const LspTable& table);

/*
 * Horton-style candidates lsp(r, x) + {x, y} + lsp(y, r) for every root r and
 * every edge {x, y}, including edges at r itself, kept when they close a
 * simple cycle. Unfiltered and possibly with duplicates.
 *
 * Every lex short cycle appears here: walking around such a cycle from r, the
 * lsp from r to each vertex stays inside the cycle, and the edge where its
 * direction flips closes the cycle.
 */
std::vector<Cycle> horton_candidates(const WeightedGraph& g, const LspTable& table);

/// LSC(g): the lex short cycles, deduplicated and canonically ordered.
CycleSet enumerate_lex_short_cycles(const WeightedGraph& g);
CycleSet enumerate_lex_short_cycles(const WeightedGraph& g, const LspTable& table);

inline constexpr int kCycleEnumerationVertexLimit = 14;
inline constexpr std::size_t kCycleEnumerationCountLimit = 1'000'000;

/// Every simple cycle exactly once, by backtracking from each cycle's smallest
/// vertex. Throws InputError past either guard.
CycleSet enumerate_all_simple_cycles(const WeightedGraph& g);

} // namespace lexcycle

#endif

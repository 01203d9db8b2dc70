#ifndef LEXCYCLE_MCB_HPP
#define LEXCYCLE_MCB_HPP

#include <span>
#include <vector>

#include "lexcycle/graph.hpp"

namespace lexcycle {

/// Rows of equal-width GF(2) vectors.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    explicit Gf2Matrix(std::vector<BitVector> rows);

    void append(BitVector row);
    std::span<const BitVector> rows() const { return rows_; }
    std::size_t row_count() const { return rows_.size(); }

private:
    std::vector<BitVector> rows_;
};

std::size_t gf2_rank(const Gf2Matrix& m);

/// Incremental Gaussian elimination: keeps a reduced row set keyed by pivot.
class Gf2Eliminator {
public:
    explicit Gf2Eliminator(std::size_t width) : pivot_row_(width, -1) {}

    /// x reduced against the stored rows.
    BitVector reduce(BitVector x) const;
    /// Adds x if it is independent of the stored rows; returns whether it was.
    bool insert(BitVector x);
    std::size_t rank() const { return rows_.size(); }

private:
    std::vector<BitVector> rows_;
    std::vector<int> pivot_row_;
};

struct CycleBasis {
    CycleSet cycles;
    Weight total_weight = 0;
    int dimension = 0;
};

/// Greedy weight-ordered independent selection (candidates in canonical
/// order). Stops once `g.cycle_rank()` cycles are chosen; the result may fall
/// short if the candidates do not span the cycle space.
CycleBasis greedy_basis(const WeightedGraph& g, const CycleSet& candidates);

/*
 * MCB of a weighted partial 2-tree: the lex short cycles themselves.
 *
 * Checks |LSC| = m - n + 1 and GF(2) independence before returning; a failed
 * check throws InternalError. Throws PreconditionError if g is not a partial
 * 2-tree.
 */
CycleBasis mcb_partial_2tree(const WeightedGraph& g);

inline constexpr int kHortonVertexLimit = 60;

/// Horton's algorithm over lex shortest path trees; exact for any connected
/// graph. Throws InputError past the size guard.
CycleBasis horton_mcb(const WeightedGraph& g);

/// Fundamental cycles of a BFS spanning tree rooted at vertex 0.
std::vector<Cycle> fundamental_cycles(const WeightedGraph& g);

struct BasisReport {
    bool cardinality_ok = false;
    bool independent = false;
    bool spans = false;
    Weight total_weight = 0;
    std::size_t size = 0;
    std::size_t rank = 0;
    int expected_dimension = 0;

    bool ok() const { return cardinality_ok && independent && spans; }
};

BasisReport verify_cycle_basis(const WeightedGraph& g, const CycleSet& cycles);
inline BasisReport verify_cycle_basis(const WeightedGraph& g, const CycleBasis& b) {
    return verify_cycle_basis(g, b.cycles);
}

} // namespace lexcycle

#endif

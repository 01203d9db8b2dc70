#include "lexcycle/mcb.hpp"

#include <algorithm>

#include "lexcycle/lexpath.hpp"
#include "lexcycle/lsc.hpp"
#include "lexcycle/structure.hpp"

namespace lexcycle {

Gf2Matrix::Gf2Matrix(std::vector<BitVector> rows) : rows_(std::move(rows)) {
    for (const auto& r : rows_)
        if (r.size() != rows_.front().size())
            throw std::invalid_argument("Gf2Matrix rows differ in width");
}

void Gf2Matrix::append(BitVector row) {
    if (!rows_.empty() && row.size() != rows_.front().size())
        throw std::invalid_argument("Gf2Matrix rows differ in width");
    rows_.push_back(std::move(row));
}

std::size_t gf2_rank(const Gf2Matrix& m) {
    if (m.row_count() == 0)
        return 0;
    Gf2Eliminator elim(m.rows().front().size());
    for (const auto& r : m.rows())
        elim.insert(r);
    return elim.rank();
}

BitVector Gf2Eliminator::reduce(BitVector x) const {
    // A stored row's lowest bit is its pivot, so clearing pivots in increasing
    // bit order never disturbs a bit already visited.
    for (std::size_t bit = x.lowest(); bit < x.size(); ++bit) {
        if (!x.test(bit))
            continue;
        int r = pivot_row_[bit];
        if (r >= 0)
            x ^= rows_[static_cast<std::size_t>(r)];
    }
    return x;
}

bool Gf2Eliminator::insert(BitVector x) {
    if (x.size() != pivot_row_.size())
        throw std::invalid_argument("Gf2Eliminator width mismatch");
    x = reduce(std::move(x));
    if (x.none())
        return false;
    pivot_row_[x.lowest()] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(x));
    return true;
}

CycleBasis greedy_basis(const WeightedGraph& g, const CycleSet& candidates) {
    Gf2Eliminator elim(static_cast<std::size_t>(g.edge_count()));
    std::vector<Cycle> chosen;
    auto target = static_cast<std::size_t>(g.cycle_rank());
    for (const Cycle& c : candidates) {
        if (chosen.size() == target)
            break;
        if (elim.insert(incidence_vector(g, c)))
            chosen.push_back(c);
    }
    CycleBasis b;
    b.cycles = CycleSet(g, std::move(chosen));
    b.total_weight = b.cycles.total_weight();
    b.dimension = static_cast<int>(b.cycles.size());
    return b;
}

CycleBasis mcb_partial_2tree(const WeightedGraph& g) {
    if (!is_partial_2tree(g))
        throw PreconditionError("mcb_partial_2tree: graph is not a partial 2-tree");
    CycleSet lsc = enumerate_lex_short_cycles(g);
    if (static_cast<int>(lsc.size()) != g.cycle_rank())
        throw InternalError("mcb_partial_2tree: found " + std::to_string(lsc.size()) +
                            " lex short cycles, expected m - n + 1 = " + std::to_string(g.cycle_rank()));
    Gf2Matrix m;
    for (const Cycle& c : lsc)
        m.append(incidence_vector(g, c));
    if (gf2_rank(m) != lsc.size())
        throw InternalError("mcb_partial_2tree: lex short cycles are linearly dependent");

    CycleBasis b;
    b.total_weight = lsc.total_weight();
    b.dimension = static_cast<int>(lsc.size());
    b.cycles = std::move(lsc);
    return b;
}

CycleBasis horton_mcb(const WeightedGraph& g) {
    if (g.vertex_count() > kHortonVertexLimit)
        throw InputError("horton_mcb: graph exceeds " + std::to_string(kHortonVertexLimit) + " vertices");
    LspTable table(g);
    CycleSet candidates(g, horton_candidates(g, table));
    CycleBasis b = greedy_basis(g, candidates);
    if (b.dimension != g.cycle_rank())
        throw InternalError("horton_mcb: candidate set does not span the cycle space");
    return b;
}

std::vector<Cycle> fundamental_cycles(const WeightedGraph& g) {
    auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<Vertex> parent(n, -1);
    std::vector<EdgeId> parent_edge(n, -1);
    std::vector<int> depth(n, -1);
    std::vector<Vertex> order{0};
    depth[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        Vertex x = order[i];
        for (auto [y, e] : g.neighbors(x)) {
            if (depth[static_cast<std::size_t>(y)] < 0) {
                depth[static_cast<std::size_t>(y)] = depth[static_cast<std::size_t>(x)] + 1;
                parent[static_cast<std::size_t>(y)] = x;
                parent_edge[static_cast<std::size_t>(y)] = e;
                order.push_back(y);
            }
        }
    }
    std::vector<Cycle> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        Vertex a = g.edge(e).u;
        Vertex b = g.edge(e).v;
        if (parent_edge[static_cast<std::size_t>(a)] == e || parent_edge[static_cast<std::size_t>(b)] == e)
            continue;
        std::vector<EdgeId> edges{e};
        while (a != b) {
            if (depth[static_cast<std::size_t>(a)] < depth[static_cast<std::size_t>(b)])
                std::swap(a, b);
            edges.push_back(parent_edge[static_cast<std::size_t>(a)]);
            a = parent[static_cast<std::size_t>(a)];
        }
        out.push_back(Cycle::from_edges(g, std::move(edges)));
    }
    return out;
}

BasisReport verify_cycle_basis(const WeightedGraph& g, const CycleSet& cycles) {
    BasisReport r;
    r.size = cycles.size();
    r.expected_dimension = g.cycle_rank();
    r.total_weight = cycles.total_weight();
    r.cardinality_ok = static_cast<int>(cycles.size()) == g.cycle_rank();

    Gf2Eliminator elim(static_cast<std::size_t>(g.edge_count()));
    for (const Cycle& c : cycles)
        elim.insert(incidence_vector(g, c));
    r.rank = elim.rank();
    r.independent = r.rank == cycles.size();

    r.spans = true;
    for (const Cycle& f : fundamental_cycles(g)) {
        if (!elim.reduce(incidence_vector(g, f)).none()) {
            r.spans = false;
            break;
        }
    }
    return r;
}

} // namespace lexcycle

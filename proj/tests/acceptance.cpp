// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails. All comparisons are integer-exact.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lexcycle/generate.hpp"
#include "lexcycle/graph.hpp"
#include "lexcycle/lexpath.hpp"
#include "lexcycle/lsc.hpp"
#include "lexcycle/mcb.hpp"
#include "lexcycle/structure.hpp"
#include "oracles.hpp"

using namespace lexcycle;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string failure;

    void expect(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            failure = what;
        }
    }
};

int failures = 0;

void criterion(const char* id, const char* title, const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.failure = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %-4s %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs);
    if (!o.pass) {
        std::printf("       first failure: %s\n", o.failure.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

std::string describe(const char* what, std::uint64_t seed) {
    std::ostringstream s;
    s << what << " (seed " << seed << ")";
    return s.str();
}

std::set<oracle::EdgeSet> edge_sets(const WeightedGraph& g, const CycleSet& cs) {
    std::set<oracle::EdgeSet> out;
    for (const Cycle& c : cs)
        out.insert(oracle::labeled(g, c));
    return out;
}

// Seeded partial 2-trees: n in [4, 30], weights in [1, 100], deletions drawn
// from [0, n] and capped at m - n + 1 = n - 2 so the graph stays connected.
struct Instance {
    std::uint64_t seed;
    WeightedGraph g;
};

std::vector<Instance> partial_2tree_corpus(std::size_t count, std::uint64_t base) {
    std::vector<Instance> out;
    Rng pick(base);
    for (std::size_t i = 0; i < count; ++i) {
        int n = static_cast<int>(pick.uniform(4, 30));
        int deletions = std::min(static_cast<int>(pick.uniform(0, n)), n - 2);
        std::uint64_t seed = base + i;
        out.push_back({seed, gen_partial_2tree({Family::partial2tree, n, deletions, 100, 1, 100, seed})});
    }
    return out;
}

WeightedGraph random_graph(Rng& pick, int max_n, int extra_per_vertex, std::uint64_t seed) {
    int n = static_cast<int>(pick.uniform(3, max_n));
    int extra = static_cast<int>(pick.uniform(0, extra_per_vertex * n));
    return gen_random_connected(n, extra, 100, seed);
}

} // namespace

int main() {
    const auto corpus = partial_2tree_corpus(500, 1000);

    criterion("C1", "lex short cycle count on partial 2-trees", [&] {
        Outcome o;
        auto start = std::chrono::steady_clock::now();
        for (const auto& [seed, g] : corpus) {
            auto lsc = enumerate_lex_short_cycles(g);
            o.expect(static_cast<int>(lsc.size()) == g.cycle_rank(),
                     describe(("|LSC| = " + std::to_string(lsc.size()) + " but m-n+1 = " +
                               std::to_string(g.cycle_rank()))
                                  .c_str(),
                              seed));
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.expect(secs < 60.0, "runtime above 60 s");
        o.detail = "500 instances, |LSC| = m-n+1 in every case";
        return o;
    });

    criterion("C2", "lex short cycles form a minimum cycle basis", [&] {
        Outcome o;
        for (const auto& [seed, g] : corpus) {
            auto lsc = enumerate_lex_short_cycles(g);
            Gf2Matrix m;
            for (const Cycle& c : lsc)
                m.append(incidence_vector(g, c));
            o.expect(static_cast<int>(gf2_rank(m)) == g.cycle_rank(), describe("rank of LSC != m-n+1", seed));
            o.expect(lsc.total_weight() == horton_mcb(g).total_weight, describe("LSC weight != Horton weight", seed));
            o.expect(mcb_partial_2tree(g).total_weight == lsc.total_weight(), describe("mcb_partial_2tree", seed));
        }
        o.detail = "500 instances, GF(2) rank m-n+1 and weight equal to Horton's MCB";
        return o;
    });

    criterion("C3", "decomposition splits LSC into a disjoint union", [&] {
        Outcome o;
        int found = 0;
        int tried = 0;
        for (std::uint64_t seed = 5000; found < 100; ++seed) {
            ++tried;
            Rng pick(seed);
            int n = static_cast<int>(pick.uniform(6, 30));
            int deletions = static_cast<int>(pick.uniform(0, n / 3));
            auto g = gen_partial_2tree({Family::partial2tree, n, deletions, 100, 1, 100, seed});
            auto sep = find_three_component_separator(g);
            if (!sep)
                continue;
            ++found;
            o.expect(!is_outerplanar(g), describe("instance with separator is outerplanar", seed));
            auto d = decomp(g, sep->first, sep->second);
            auto s = edge_sets(g, enumerate_lex_short_cycles(g));
            auto s1 = edge_sets(d.g1, enumerate_lex_short_cycles(d.g1));
            auto s2 = edge_sets(d.g2, enumerate_lex_short_cycles(d.g2));
            std::vector<oracle::EdgeSet> common;
            std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(common));
            o.expect(common.empty(), describe("LSC(G1) and LSC(G2) intersect", seed));
            auto uni = s1;
            uni.insert(s2.begin(), s2.end());
            o.expect(uni == s, describe("LSC(G) != LSC(G1) + LSC(G2)", seed));
            o.expect(s1.size() + s2.size() == s.size(), describe("cardinalities do not add up", seed));
        }
        o.detail = std::to_string(found) + " separable non-outerplanar instances (" + std::to_string(tried) +
                   " generated), union law holds";
        return o;
    });

    criterion("C4", "wheel counterexample family", [&] {
        Outcome o;
        for (int n = 4; n <= 12; ++n) {
            auto g = gen_wheel(n, 1, 100);
            auto lsc = enumerate_lex_short_cycles(g);
            Gf2Matrix m;
            for (const Cycle& c : lsc)
                m.append(incidence_vector(g, c));
            auto rank = static_cast<int>(gf2_rank(m));
            auto tag = "n = " + std::to_string(n);
            o.expect(static_cast<int>(lsc.size()) == g.cycle_rank() + 1, tag + ": |LSC| != m-n+2");
            o.expect(rank == g.cycle_rank(), tag + ": rank != m-n+1");
            o.expect(rank < static_cast<int>(lsc.size()), tag + ": rank not below |LSC|");
            auto report = verify_cycle_basis(g, lsc);
            o.expect(!report.ok() && !report.cardinality_ok && !report.independent, tag + ": verify did not fail");
        }
        auto g = gen_wheel(9, 1, 100);
        std::set<oracle::EdgeSet> expected;
        oracle::EdgeSet rim;
        for (Vertex i = 1; i <= 8; ++i) {
            Vertex j = i == 8 ? 1 : i + 1;
            rim.emplace_back(std::min(i, j), std::max(i, j));
            oracle::EdgeSet tri{{0, i}, {0, j}, {std::min(i, j), std::max(i, j)}};
            std::sort(tri.begin(), tri.end());
            expected.insert(tri);
        }
        std::sort(rim.begin(), rim.end());
        expected.insert(rim);
        o.expect(edge_sets(g, enumerate_lex_short_cycles(g)) == expected, "n = 9: LSC is not 8 triangles + rim");
        o.detail = "n = 4..12: |LSC| = m-n+2, rank m-n+1, verification fails; n = 9 is 8 triangles + rim";
        return o;
    });

    criterion("C5", "lex short cycle count on outerplanar graphs", [&] {
        Outcome o;
        for (std::uint64_t seed = 20000; seed < 20200; ++seed) {
            Rng pick(seed);
            int n = static_cast<int>(pick.uniform(3, 30));
            auto g = gen_outerplanar({Family::outerplanar, n, 0, 100, 1, 100, seed});
            o.expect(static_cast<int>(enumerate_lex_short_cycles(g).size()) == g.cycle_rank(),
                     describe("|LSC| != m-n+1", seed));
        }
        o.detail = "200 outerplanar instances, |LSC| = m-n+1";
        return o;
    });

    criterion("C6", "LSC contains an MCB on arbitrary graphs", [&] {
        Outcome o;
        int non_p2t = 0;
        for (std::uint64_t seed = 30000; seed < 30200; ++seed) {
            Rng pick(seed);
            auto g = random_graph(pick, 12, 2, seed);
            non_p2t += !is_partial_2tree(g);
            auto b = greedy_basis(g, enumerate_lex_short_cycles(g));
            o.expect(b.dimension == g.cycle_rank(), describe("LSC does not reach full rank", seed));
            o.expect(b.total_weight == horton_mcb(g).total_weight, describe("greedy-on-LSC weight != Horton", seed));
        }
        o.detail = "200 random graphs (" + std::to_string(non_p2t) +
                   " of treewidth > 2), greedy over LSC matches Horton";
        return o;
    });

    criterion("C7", "lsp intersection and subpath properties", [&] {
        Outcome o;
        long long checked = 0;
        for (std::uint64_t seed = 40000; seed < 40200; ++seed) {
            Rng pick(seed);
            // Small weights make equal-weight ties, so rule 3 is exercised.
            int n = static_cast<int>(pick.uniform(3, 12));
            int extra = static_cast<int>(pick.uniform(0, 2 * n));
            auto g = gen_random_connected(n, extra, 3, seed);
            LspTable t(g);
            for (Vertex u = 0; u < n; ++u) {
                for (Vertex v = 0; v < n; ++v) {
                    const auto& p = t.path(u, v).vertices;
                    for (std::size_t i = 0; i < p.size(); ++i)
                        for (std::size_t j = i; j < p.size(); ++j)
                            o.expect(t.path(p[i], p[j]).vertices ==
                                         std::vector<Vertex>(p.begin() + static_cast<std::ptrdiff_t>(i),
                                                             p.begin() + static_cast<std::ptrdiff_t>(j) + 1),
                                     describe("subpath of an lsp is not an lsp", seed));
                }
            }
            for (int trial = 0; trial < 50; ++trial) {
                auto x = static_cast<Vertex>(pick.uniform(0, n - 1));
                auto y = static_cast<Vertex>(pick.uniform(0, n - 1));
                auto a = static_cast<Vertex>(pick.uniform(0, n - 1));
                auto b = static_cast<Vertex>(pick.uniform(0, n - 1));
                const Path& p = t.path(x, y);
                const Path& q = t.path(a, b);
                std::set<Vertex> pv(p.vertices.begin(), p.vertices.end());
                std::vector<Vertex> common;
                for (Vertex z : q.vertices)
                    if (pv.count(z))
                        common.push_back(z);
                ++checked;
                if (common.empty())
                    continue;
                auto pe = path_edges(g, p);
                auto qe = path_edges(g, q);
                std::sort(pe.begin(), pe.end());
                std::sort(qe.begin(), qe.end());
                std::vector<EdgeId> shared;
                std::set_intersection(pe.begin(), pe.end(), qe.begin(), qe.end(), std::back_inserter(shared));
                // The shared part is a path iff it is a contiguous run of q
                // whose edges are exactly the shared ones.
                auto first = std::find(q.vertices.begin(), q.vertices.end(), common.front());
                auto last = std::find(q.vertices.begin(), q.vertices.end(), common.back());
                bool contiguous = static_cast<std::size_t>(last - first) + 1 == common.size();
                o.expect(contiguous && shared.size() + 1 == common.size(),
                         describe("intersection of two lsps is not a path", seed));
                if (!contiguous)
                    continue;
                const Path& run = t.path(common.front(), common.back());
                o.expect(run.vertices == common, describe("intersection is not the lsp of its endpoints", seed));
            }
        }
        o.detail = "200 graphs, " + std::to_string(checked) + " lsp pairs intersected, every lsp subpath checked";
        return o;
    });

    criterion("C8", "fast paths agree with exhaustive oracles", [&] {
        Outcome o;
        long long pairs = 0, cycles = 0;
        for (std::uint64_t seed = 50000; seed < 50100; ++seed) {
            Rng pick(seed);
            int n = static_cast<int>(pick.uniform(3, 10));
            int extra = static_cast<int>(pick.uniform(0, 2 * n));
            auto g = gen_random_connected(n, extra, static_cast<Weight>(pick.uniform(1, 20)), seed);
            LspTable t(g);
            for (Vertex u = 0; u < n; ++u) {
                auto tree = lex_shortest_paths_from(g, u);
                for (Vertex v = 0; v < n; ++v) {
                    ++pairs;
                    o.expect(tree[static_cast<std::size_t>(v)] == brute_force_lsp(g, u, v),
                             describe("(a) lsp differs from brute force", seed));
                }
            }
            std::vector<Cycle> filtered;
            for (const Cycle& c : enumerate_all_simple_cycles(g))
                if (is_lex_short(g, c, t))
                    filtered.push_back(c);
            auto fast = enumerate_lex_short_cycles(g, t);
            cycles += static_cast<long long>(fast.size());
            o.expect(edge_sets(g, fast) == edge_sets(g, CycleSet(g, std::move(filtered))),
                     describe("(b) LSC differs from brute-force filter", seed));
            o.expect(horton_mcb(g).total_weight == oracle::exhaustive_mcb_weight(g),
                     describe("(c) Horton weight differs from exhaustive MCB", seed));
        }
        o.detail = "100 graphs: " + std::to_string(pairs) + " lsp pairs, " + std::to_string(cycles) +
                   " lex short cycles, MCB weights all equal";
        return o;
    });

    criterion("C9", "recognition sanity", [&] {
        Outcome o;
        for (const auto& [seed, g] : corpus)
            o.expect(is_partial_2tree(g), describe("partial 2-tree generator output rejected", seed));
        for (std::uint64_t seed = 20000; seed < 20200; ++seed) {
            Rng pick(seed);
            int n = static_cast<int>(pick.uniform(3, 30));
            auto g = gen_outerplanar({Family::outerplanar, n, 0, 100, 1, 100, seed});
            o.expect(is_partial_2tree(g), describe("outerplanar output is not a partial 2-tree", seed));
            o.expect(is_outerplanar(g), describe("outerplanar output rejected", seed));
        }
        std::vector<Edge> k4{{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}};
        o.expect(!is_partial_2tree(WeightedGraph(4, k4)), "K4 accepted");
        for (int n = 4; n <= 40; ++n)
            o.expect(!is_partial_2tree(gen_wheel(n, 1, 100)), "wheel n = " + std::to_string(n) + " accepted");
        std::vector<Edge> k23{{0, 2, 1}, {1, 2, 1}, {0, 3, 1}, {1, 3, 1}, {0, 4, 1}, {1, 4, 1}};
        o.expect(!is_outerplanar(WeightedGraph(5, k23)), "K2,3 judged outerplanar");
        o.detail = "500 partial 2-trees and 200 outerplanar graphs accepted; K4, wheels 4..40, K2,3 rejected";
        return o;
    });

    criterion("C10", "worked K2,3 instance", [&] {
        Outcome o;
        WeightedGraph g(5, {{0, 2, 1}, {1, 2, 1}, {0, 3, 1}, {1, 3, 1}, {0, 4, 1}, {1, 4, 1}});
        auto lsc = enumerate_lex_short_cycles(g);
        std::set<oracle::EdgeSet> expected{{{0, 2}, {0, 3}, {1, 2}, {1, 3}}, {{0, 2}, {0, 4}, {1, 2}, {1, 4}}};
        o.expect(edge_sets(g, lsc) == expected, "LSC != {0-2-1-3, 0-2-1-4}");
        o.expect(oracle::lex_short_cycles(g) == expected, "oracle LSC != {0-2-1-3, 0-2-1-4}");
        o.expect(mcb_partial_2tree(g).total_weight == 8, "MCB weight != 8");
        o.expect(horton_mcb(g).total_weight == 8, "Horton weight != 8");
        o.expect(oracle::exhaustive_mcb_weight(g) == 8, "exhaustive MCB weight != 8");

        auto d = decomp(g, 0, 1);
        auto edges_of = [](const WeightedGraph& h) {
            oracle::EdgeSet out;
            for (const Edge& e : h.edges())
                out.emplace_back(h.label(e.u), h.label(e.v));
            std::sort(out.begin(), out.end());
            return out;
        };
        auto verts = [](const WeightedGraph& h) { return std::vector<Vertex>(h.labels().begin(), h.labels().end()); };
        o.expect(d.sep_path.vertices == std::vector<Vertex>{0, 2, 1}, "lsp(0,1) != 0-2-1");
        o.expect(d.avoided == std::vector<Vertex>{3}, "H != {3}");
        o.expect(verts(d.g1) == std::vector<Vertex>{0, 1, 2, 3}, "V(G1)");
        o.expect(edges_of(d.g1) == oracle::EdgeSet{{0, 2}, {0, 3}, {1, 2}, {1, 3}}, "E(G1)");
        o.expect(verts(d.g2) == std::vector<Vertex>{0, 1, 2, 4}, "V(G2)");
        o.expect(edges_of(d.g2) == oracle::EdgeSet{{0, 2}, {0, 4}, {1, 2}, {1, 4}}, "E(G2)");
        o.expect(d.g1.vertex_count() + d.g2.vertex_count() == 8, "n1 + n2 != n + k = 8");
        o.detail = "LSC = {0-2-1-3, 0-2-1-4}, MCB weight 8, decomp at {0,1} matches";
        return o;
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAILURE" : "SUCCESS", failures);
    return failures ? 1 : 0;
}

#include <doctest.h>

#include "helpers.hpp"
#include "lexcycle/generate.hpp"
#include "lexcycle/lexpath.hpp"
#include "oracles.hpp"

using namespace lexcycle;
using lexcycle::test::graph;

namespace {

std::vector<Vertex> seq(const Path& p) { return p.vertices; }

} // namespace

TEST_CASE("compare_paths applies the three rules in order") {
    auto g = graph(5, {{0, 1, 5}, {0, 2, 3}, {2, 1, 3}, {0, 3, 1}, {3, 1, 4}, {0, 4, 2}, {4, 1, 3}});
    Path direct = make_path(g, {0, 1});    // weight 5, 1 edge
    Path via2 = make_path(g, {0, 2, 1});   // weight 6
    Path via3 = make_path(g, {0, 3, 1});   // weight 5, 2 edges
    Path via4 = make_path(g, {0, 4, 1});   // weight 5, 2 edges

    CHECK(compare_paths(direct, via2) < 0);  // rule 1
    CHECK(compare_paths(via2, direct) > 0);
    CHECK(compare_paths(direct, via3) < 0);  // rule 2
    CHECK(compare_paths(via3, via4) < 0);    // rule 3: 3 < 4
    CHECK(compare_paths(via4, via3) > 0);
    CHECK(compare_paths(via3, via3) == 0);
    CHECK(compare_paths(via3, via4.reversed()) < 0);
}

TEST_CASE("compare_paths rejects different endpoints") {
    auto g = test::c4();
    CHECK_THROWS_AS(compare_paths(make_path(g, {0, 1}), make_path(g, {0, 3})), InputError);
    CHECK_THROWS_AS(compare_paths(make_path(g, {0, 1, 2}), make_path(g, {0, 1})), InputError);
}

TEST_CASE("rule 3 compares the minima of the private vertices") {
    // 0-5-6-1 against 0-2-9-1 (hypothetical vertex sets): private {5,6} vs {2,9}.
    Path p{{0, 5, 6, 1}, 3};
    Path q{{0, 2, 9, 1}, 3};
    CHECK(compare_paths(q, p) < 0);
    Path r{{0, 2, 4, 1}, 3};
    CHECK(compare_paths(r, q) < 0);  // both contain 2; 4 < 9
}

TEST_CASE("same vertex set falls back to the sequence from the lower endpoint") {
    Path p{{4, 1, 2, 0}, 3};
    Path q{{4, 2, 1, 0}, 3};
    // From endpoint 0: p reads 0 2 1 4, q reads 0 1 2 4.
    CHECK(compare_paths(q, p) < 0);
    CHECK(compare_paths(p, q) > 0);
}

TEST_CASE("extension keeps the order") {
    auto g = graph(5, {{0, 1, 1}, {1, 3, 1}, {0, 2, 1}, {2, 3, 1}, {3, 4, 2}});
    Path p = make_path(g, {0, 1, 3});
    Path q = make_path(g, {0, 2, 3});
    REQUIRE(compare_paths(p, q) < 0);
    CHECK(compare_paths(make_path(g, {0, 1, 3, 4}), make_path(g, {0, 2, 3, 4})) < 0);
}

TEST_CASE("lex_shortest_paths_from") {
    SUBCASE("C4 picks the side with the smaller internal vertex") {
        auto paths = lex_shortest_paths_from(test::c4(), 0);
        CHECK(seq(paths[2]) == std::vector<Vertex>{0, 1, 2});
        CHECK(seq(paths[0]) == std::vector<Vertex>{0});
    }
    SUBCASE("triangle uses the direct edge") {
        auto paths = lex_shortest_paths_from(test::k3(), 0);
        CHECK(seq(paths[1]) == std::vector<Vertex>{0, 1});
    }
    SUBCASE("heavier direct edge loses") {
        auto g = graph(3, {{0, 1, 5}, {1, 2, 1}, {0, 2, 1}});
        CHECK(seq(lex_shortest_paths_from(g, 0)[1]) == std::vector<Vertex>{0, 2, 1});
    }
    SUBCASE("invalid source") { CHECK_THROWS_AS(lex_shortest_paths_from(test::k3(), 3), InputError); }
}

TEST_CASE("lsp_table") {
    SUBCASE("K3 maps every pair to its edge") {
        auto t = lsp_table(test::k3());
        for (Vertex u = 0; u < 3; ++u)
            for (Vertex v = 0; v < 3; ++v)
                if (u != v)
                    CHECK(seq(t.path(u, v)) == std::vector<Vertex>{u, v});
    }
    SUBCASE("K2,3 lsp(0,1) goes through 2") {
        auto g = test::k23();
        auto t = lsp_table(g);
        CHECK(seq(t.path(0, 1)) == std::vector<Vertex>{0, 2, 1});
        CHECK(oracle::lsp(g, 0, 1) == std::vector<Vertex>{0, 2, 1});
        CHECK(seq(t.path(3, 4)) == std::vector<Vertex>{3, 0, 4});
    }
    SUBCASE("path graph") {
        auto g = graph(4, {{0, 1, 3}, {1, 2, 1}, {2, 3, 2}});
        auto t = lsp_table(g);
        CHECK(seq(t.path(3, 0)) == std::vector<Vertex>{3, 2, 1, 0});
        CHECK(t.path(3, 0).weight == 6);
    }
    SUBCASE("symmetric on random graphs") {
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            auto g = gen_random_connected(10, 10, 5, seed);
            auto t = lsp_table(g);
            for (Vertex u = 0; u < g.vertex_count(); ++u)
                for (Vertex v = 0; v < g.vertex_count(); ++v)
                    CHECK(t.path(u, v) == t.path(v, u).reversed());
        }
    }
}

TEST_CASE("brute_force_lsp") {
    CHECK(seq(brute_force_lsp(test::c4(), 0, 2)) == std::vector<Vertex>{0, 1, 2});
    auto tree = graph(4, {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}});
    CHECK(seq(brute_force_lsp(tree, 0, 3)) == std::vector<Vertex>{0, 1, 3});
    auto big = gen_random_connected(15, 0, 1, 7);
    CHECK_THROWS_AS(brute_force_lsp(big, 0, 1), InputError);
}

TEST_CASE("single-source search agrees with both exhaustive oracles") {
    // Small weights force many ties so rule 3 decides often.
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto g = gen_random_connected(9, static_cast<int>(seed % 12), 3, seed);
        auto t = lsp_table(g);
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
            for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
                CHECK(t.path(u, v) == brute_force_lsp(g, u, v));
                CHECK(seq(t.path(u, v)) == oracle::lsp(g, u, v));
            }
        }
    }
}

TEST_CASE("lsp is deterministic") {
    auto g = gen_random_connected(20, 25, 4, 99);
    auto a = lsp_table(g);
    auto b = lsp_table(g);
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            CHECK(a.path(u, v) == b.path(u, v));
}

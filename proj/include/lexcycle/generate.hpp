#ifndef LEXCYCLE_GENERATE_HPP
#define LEXCYCLE_GENERATE_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "lexcycle/graph.hpp"

namespace lexcycle {

/*
 * Seeded stream shared by all generators. The engine is std::mt19937_64, whose
 * output sequence is fixed by the standard; bounded draws use rejection
 * sampling here instead of std::uniform_int_distribution, whose algorithm is
 * left to the library. Same seed, same graphs, on every platform.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    std::size_t index(std::size_t size) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(size) - 1)); }
    /// Uniform permutation of 0..n-1 (Fisher-Yates).
    std::vector<Vertex> permutation(int n);

private:
    std::mt19937_64 engine_;
};

enum class Family { partial2tree, outerplanar, wheel };

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

struct GeneratorSpec {
    Family family = Family::partial2tree;
    int n = 10;
    int delete_count = 0;   ///< partial2tree only
    Weight max_weight = 100;
    Weight rim_weight = 1;  ///< wheel only
    Weight spoke_weight = 100;
    std::uint64_t seed = 1;
};

/*
 * Random 2-tree grown from K3 by attaching each new vertex to both ends of a
 * uniformly chosen edge, weighted uniformly in [1, max_weight], then thinned by
 * deleting delete_count uniformly chosen non-bridge edges. Vertex ids are
 * shuffled at the end so the vertex order is independent of insertion order.
 * Throws InputError if n < 3 or more than m - n + 1 deletions are requested.
 */
WeightedGraph gen_partial_2tree(const GeneratorSpec& spec);

/// Hub 0 joined by spokes of weight b to a rim cycle 1..n-1 of weight a.
/// Rim edges come first. Any b > (n - 1) * a makes every rim path lighter than
/// a detour through the hub. Throws InputError if n < 4 or a weight is < 1.
WeightedGraph gen_wheel(int n, Weight rim_weight, Weight spoke_weight);

/// Cycle on n vertices plus a uniform number (0..n-3) of non-crossing chords,
/// made by repeatedly splitting a random face; ids shuffled.
WeightedGraph gen_outerplanar(const GeneratorSpec& spec);

/// Dispatch on spec.family.
WeightedGraph generate(const GeneratorSpec& spec);

/// Random connected graph of any treewidth: a random recursive tree plus up to
/// `extra_edges` further edges, weights in [1, max_weight], ids shuffled.
WeightedGraph gen_random_connected(int n, int extra_edges, Weight max_weight, std::uint64_t seed);

} // namespace lexcycle

#endif

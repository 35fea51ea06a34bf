#pragma once

#include <cstdint>
#include <vector>

#include <kcr/knapsack.hpp>
#include <kcr/penny.hpp>
#include <kcr/rng.hpp>
#include <kcr/simple_graph.hpp>
#include <kcr/verification.hpp>

// Seeded instance generators for the round-trip suites. Every generator pulls
// from the caller's stream only, so instance i of a run is reproducible via
// instance_stream(seed, i).

namespace kcr::gen {

// Vertex count uniform in [min_n, max_n], each edge present with probability
// 1/2; weighted graphs draw integer weights in [1, 9].
SimpleGraph random_simple_graph(SplitMix64& rng, int min_n, int max_n, bool weighted);

// Connected orthogonal realization grown by walking on the unit lattice:
// radius 1/2, every center at integer coordinates. Non-adjacent centers are
// then >= sqrt(2) tangency distances apart.
PennyRealization random_penny_realization(SplitMix64& rng, int min_pennies, int max_pennies);

// 1..6 items, weights and values in [1, 9], capacity in [1, total weight - 1]
// (never trivially satisfiable), goal in [1, total value].
KnapsackInstance random_knapsack(SplitMix64& rng);

struct SubsetSumCase {
    std::vector<std::int64_t> values;  // positive
    std::int64_t target = 0;           // 0 < target < sum
};

// Values in [1, 9] with total <= 40 (and >= 2 so a strict target exists).
SubsetSumCase random_subset_sum(SplitMix64& rng);

struct MinimalityCase {
    std::vector<std::int64_t> charges;  // nonzero, |q| <= 6, neutral
    std::int64_t k = 0;                 // 1 <= k <= positive sum
};

// Neutral charge multisets of size <= 15 for exercising the minimality scan.
MinimalityCase random_minimality_case(SplitMix64& rng);

// ExactK instance over max_pairs_lo..max_pairs_hi (+1, -1) ion pairs with a
// full pair table of energies in [-5, 5]; k leaves at least 2 surviving
// pairs so the weighted-clique embedding is defined.
RemovalInstance random_balanced_instance(SplitMix64& rng, int pairs_lo, int pairs_hi);

}  // namespace kcr::gen

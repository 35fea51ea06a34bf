#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <kcr/simple_graph.hpp>
#include <kcr/verification.hpp>

// Independent brute-force and DP oracles used to certify the reductions.
// Everything here is exhaustive or pseudo-polynomial and desk-scale on
// purpose; goal comparisons are the caller's business.

namespace kcr {

inline constexpr int kDefaultOracleCap = 22;

struct BruteForceResult {
    std::vector<int> removed;  // sorted ion ids
    ExtReal energy = 0.0;
};

// Exhaustive scan over all removals satisfying the instance's charge
// conditions; returns the one with minimum remaining energy, ties broken by
// lexicographically smallest removed-id set. nullopt when no subset meets
// the charge conditions. Throws CapExceededError above `cap` ions.
std::optional<BruteForceResult> brute_force_removal(const RemovalInstance& inst,
                                                    int cap = kDefaultOracleCap,
                                                    const MinimalityPolicy& policy = {});

struct SubsetSumResult {
    bool satisfiable = false;
    std::vector<int> witness;  // indices into values, empty when unsatisfiable
};

// Positive integer values; witness reconstructed deterministically.
SubsetSumResult subset_sum_dp(const std::vector<std::int64_t>& values, std::int64_t target);

struct CliqueResult {
    std::vector<int> vertices;  // sorted
    double weight = 0.0;        // sum of edge weights inside the clique
};

// Max-weight k-clique by exhaustive k-subset scan (n <= 16). For unweighted
// graphs every edge counts 1. nullopt when no k-clique exists; ties broken
// by lexicographically smallest vertex set.
std::optional<CliqueResult> brute_force_k_clique(const SimpleGraph& g, int k);

struct KnapsackResult {
    std::int64_t best_value = 0;
    std::vector<int> packed;  // item indices, deterministic reconstruction
};

// 0/1 knapsack, weight-indexed DP. Reverse walk prefers lower item indices.
KnapsackResult knapsack_dp(const std::vector<std::int64_t>& weights,
                           const std::vector<std::int64_t>& values, std::int64_t capacity);

struct IndependentSetResult {
    bool found = false;
    std::vector<int> vertices;
};

// First independent set of size k in lexicographic order (n <= 20).
IndependentSetResult independent_set_bf(const SimpleGraph& g, int k);

}  // namespace kcr

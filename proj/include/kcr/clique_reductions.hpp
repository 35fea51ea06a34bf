#pragma once

#include <cstdint>
#include <vector>

#include <kcr/reduction_types.hpp>
#include <kcr/simple_graph.hpp>

// Clique-family gadgets over explicit pair tables, and the reverse embedding
// of a uniform-charge instance into max-weight k-clique.

namespace kcr {

// Two ions (+c, -c) per vertex; -1 between ions of the same or adjacent
// vertices, forbidden otherwise. Remove c*(n-k) charges, goal -k(2k-1):
// satisfiable iff g has a k-clique. Requires 1 <= k <= n, c >= 1.
ReductionOutput reduce_clique_to_kcr(const SimpleGraph& g, int k, std::int64_t c);

// Weighted variant: same-vertex pairs carry -cap (cap = 1 + max edge weight),
// and each adjacent source pair spreads -wt over its four ion pairs so every
// source edge counts once. Goal -k*cap - v: satisfiable iff some k-clique has
// weight >= v.
ReductionOutput reduce_max_weight_clique_to_kcr(const SimpleGraph& g, int k, double v,
                                                std::int64_t c);

// Clique reduction when only the given charge magnitudes are available.
// Picks opposite-signed c, d minimizing |c|-|d| (delegating to the plain
// gadget when a matched +/-m pair exists), then restores neutrality with a
// zero-energy dummy set sized by the congruences t_c|c| = t and
// t_d|d| = k(|c|-|d|) + t, plus an all-forbidden dummy set for the slack.
// Throws NoBalancedSolutionError when no opposite-sign pair exists.
ReductionOutput reduce_clique_arbitrary_charges(const SimpleGraph& g, int k,
                                                const std::vector<std::int64_t>& charges);

// Zero-energy gadget whose whole-graph removal is minimal iff no subset of s
// sums to k. Positives +s_i, negatives -k and -(sum - k), target
// max(k, sum - k). Requires 0 < k < sum.
struct MinimalityGadget {
    RemovalInstance instance;
    std::vector<int> claimed_removed;  // every ion id
    nlohmann::ordered_json notes;
};
MinimalityGadget build_minimality_gadget(const std::vector<std::int64_t>& s, std::int64_t k);

// Reverse direction: a uniform |charge| = c instance with finite pair
// energies becomes a max-weight k'-clique question on the graph of
// (positive ion, negative ion) pairs. k' = |V+| - k/c surviving pairs;
// requires c | k and k' >= 2.
struct WeightedCliqueEmbedding {
    SimpleGraph graph;
    std::vector<std::pair<int, int>> vertices;  // product vertex -> (pos id, neg id)
    int k = 0;
    double goal_weight = 0.0;
    nlohmann::ordered_json notes;
};
WeightedCliqueEmbedding embed_kcr_into_weighted_k_clique(const RemovalInstance& inst);

}  // namespace kcr

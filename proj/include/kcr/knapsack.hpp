#pragma once

#include <cstdint>
#include <vector>

#include <kcr/reduction_types.hpp>

// 0/1 knapsack as charge removal under pure Coulomb energies: one +-w_i ion
// pair per item at vertical distance w_i^2 / p_i (within-pair energy exactly
// -p_i), pairs spread far enough apart that all inter-pair leakage stays
// below u = 1/2.

namespace kcr {

struct KnapsackItem {
    std::int64_t w = 0;  // weight, positive integer
    std::int64_t p = 0;  // value, positive integer
};

struct KnapsackInstance {
    std::vector<KnapsackItem> items;
    std::int64_t capacity = 0;
    std::int64_t goal_value = 0;
};

// Throws TriviallySatisfiableError (carrying the full packing) when
// capacity >= total weight.
ReductionOutput reduce_knapsack(const KnapsackInstance& inst);

struct DecodedPacking {
    std::vector<int> items;      // both ions survived
    std::vector<int> half_pairs; // exactly one ion survived; suspicious but legal
};

// Items whose ion pairs fully survive the removal. Guarantees the surviving
// weight fits the capacity whenever the removal meets the charge target.
DecodedPacking decode_packing(const ReductionOutput& out, const RemovalSolution& sol);

}  // namespace kcr

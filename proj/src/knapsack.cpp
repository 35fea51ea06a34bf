#include <kcr/knapsack.hpp>

#include <algorithm>
#include <set>
#include <string>

namespace kcr {

ReductionOutput reduce_knapsack(const KnapsackInstance& inst) {
    if (inst.items.empty()) throw ValidationError("knapsack needs at least one item");
    std::int64_t total_w = 0;
    std::int64_t w_max = 0;
    for (const auto& item : inst.items) {
        if (item.w <= 0 || item.p <= 0)
            throw ValidationError("item weights and values must be positive integers");
        total_w += item.w;
        w_max = std::max(w_max, item.w);
    }
    if (inst.capacity >= total_w) {
        std::vector<int> all(inst.items.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
        throw TriviallySatisfiableError("capacity admits every item", std::move(all));
    }
    if (inst.capacity < 0) throw ValidationError("capacity must be nonnegative");

    const auto n = static_cast<std::int64_t>(inst.items.size());
    const double u = 0.5;
    // Aggregate inter-pair Coulomb leakage over any survivors stays below
    // alpha_bound / alpha; alpha = 2 * alpha_bound + 1 keeps it under u = 1/2.
    const double alpha_bound = 4.0 * static_cast<double>(n * n * w_max * w_max);
    const double alpha = 2.0 * alpha_bound + 1.0;

    double d_max = 0.0;
    for (const auto& item : inst.items)
        d_max = std::max(d_max, static_cast<double>(item.w * item.w) /
                                    static_cast<double>(item.p));
    const double spacing = alpha + d_max;

    ReductionOutput out;
    for (std::size_t i = 0; i < inst.items.size(); ++i) {
        const auto& item = inst.items[i];
        const double x = spacing * static_cast<double>(i);
        const double d = static_cast<double>(item.w * item.w) / static_cast<double>(item.p);
        const int base = static_cast<int>(2 * i);
        const std::string label = "I" + std::to_string(i);
        out.instance.graph.ions.push_back(
            Ion{base, "p" + std::to_string(i), item.w, {x, 0.0, 0.0}, label});
        out.instance.graph.ions.push_back(
            Ion{base + 1, "m" + std::to_string(i), -item.w, {x, 0.0, d}, label});
        out.decode[base] = static_cast<int>(i);
        out.decode[base + 1] = static_cast<int>(i);
    }
    out.instance.graph.energy = CoulombSpec{};

    const std::int64_t k = total_w - inst.capacity;
    const double goal_energy = -static_cast<double>(inst.goal_value) + u;
    out.instance.variant = Variant::AtLeastK;
    out.instance.k = k;
    out.instance.goal = goal_energy;

    out.notes = {{"n", n},
                 {"w_max", w_max},
                 {"u", u},
                 {"alpha_bound", alpha_bound},
                 {"alpha", alpha},
                 {"spacing", spacing},
                 {"k", k},
                 {"goal_energy", goal_energy}};
    return out;
}

DecodedPacking decode_packing(const ReductionOutput& out, const RemovalSolution& sol) {
    const std::set<int> removed(sol.removed.begin(), sol.removed.end());
    // decode maps both ions of item i; count the survivors per item.
    std::map<int, int> survivors;
    for (const auto& [ion_id, item] : out.decode)
        if (!removed.count(ion_id)) ++survivors[item];

    DecodedPacking packing;
    for (const auto& [item, count] : survivors) {
        if (count == 2)
            packing.items.push_back(item);
        else
            packing.half_pairs.push_back(item);
    }
    return packing;
}

}  // namespace kcr

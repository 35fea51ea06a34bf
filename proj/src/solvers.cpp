#include <kcr/solvers.hpp>

#include <algorithm>
#include <cstdlib>
#include <string>

namespace kcr {

namespace {

// Remaining energy of the survivors of `mask` (bit i set = ion index i
// removed), resummed from a per-instance pair cache.
ExtReal mask_remaining(const std::vector<std::vector<ExtReal>>& pair_energy, int n,
                       std::uint32_t mask) {
    ExtReal sum(0.0);
    for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) continue;
        for (int j = i + 1; j < n; ++j) {
            if (mask & (1u << j)) continue;
            sum += pair_energy[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (sum.is_infinite()) return sum;
        }
    }
    return sum;
}

std::vector<int> mask_ids(const std::vector<int>& ids, std::uint32_t mask) {
    std::vector<int> out;
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (mask & (1u << i)) out.push_back(ids[i]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::optional<BruteForceResult> brute_force_removal(const RemovalInstance& inst, int cap,
                                                    const MinimalityPolicy& policy) {
    const int n = static_cast<int>(inst.graph.ions.size());
    if (n > cap)
        throw CapExceededError("instance has " + std::to_string(n) +
                               " ions, oracle cap is " + std::to_string(cap));

    std::vector<int> ids(static_cast<std::size_t>(n));
    std::vector<std::int64_t> charge(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        ids[static_cast<std::size_t>(i)] = inst.graph.ions[static_cast<std::size_t>(i)].id;
        charge[static_cast<std::size_t>(i)] =
            inst.graph.ions[static_cast<std::size_t>(i)].charge;
    }
    std::vector<std::vector<ExtReal>> pair_energy(
        static_cast<std::size_t>(n), std::vector<ExtReal>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pair_energy[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                pairwise_energy(inst.graph, ids[static_cast<std::size_t>(i)],
                                ids[static_cast<std::size_t>(j)]);

    std::optional<BruteForceResult> best;
    std::int64_t possum = 0, total = 0;  // of the current removal set

    // Gray-code walk: one ion toggles per step, so the charge sums update in
    // O(1) and only candidates passing the charge filters pay for energy.
    const std::uint64_t count = 1ull << n;
    std::uint32_t prev = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        const auto gray = static_cast<std::uint32_t>(i ^ (i >> 1));
        const std::uint32_t flip = gray ^ prev;
        if (flip) {
            const int bit = __builtin_ctz(flip);
            const std::int64_t q = charge[static_cast<std::size_t>(bit)];
            if (gray & flip) {
                total += q;
                if (q > 0) possum += q;
            } else {
                total -= q;
                if (q > 0) possum -= q;
            }
        }
        prev = gray;

        if (total != 0) continue;
        switch (inst.variant) {
            case Variant::ExactK:
                if (possum != inst.k) continue;
                break;
            case Variant::AtLeastK:
                if (possum < inst.k) continue;
                break;
            case Variant::MinimalAtLeastK:
                if (possum < inst.k) continue;
                break;
        }
        std::vector<int> removed = mask_ids(ids, gray);
        if (inst.variant == Variant::MinimalAtLeastK &&
            !is_minimal(inst.graph, removed, inst.k, policy))
            continue;

        const ExtReal e = mask_remaining(pair_energy, n, gray);
        if (!best || e < best->energy ||
            (e == best->energy &&
             std::lexicographical_compare(removed.begin(), removed.end(),
                                          best->removed.begin(), best->removed.end()))) {
            best = BruteForceResult{std::move(removed), e};
        }
    }
    return best;
}

SubsetSumResult subset_sum_dp(const std::vector<std::int64_t>& values, std::int64_t target) {
    for (std::int64_t v : values)
        if (v <= 0) throw ValidationError("subset-sum values must be positive");
    if (target < 0) return {};
    if (target == 0) return {true, {}};

    const auto n = values.size();
    // reach[s] = 1 + index of the last value used to first reach s, 0 = unreachable.
    std::vector<int> reach(static_cast<std::size_t>(target) + 1, 0);
    std::vector<char> seen(static_cast<std::size_t>(target) + 1, 0);
    seen[0] = 1;
    for (std::size_t idx = 0; idx < n; ++idx) {
        const std::int64_t v = values[idx];
        if (v > target) continue;
        for (std::int64_t s = target; s >= v; --s) {
            if (!seen[static_cast<std::size_t>(s)] && seen[static_cast<std::size_t>(s - v)]) {
                seen[static_cast<std::size_t>(s)] = 1;
                reach[static_cast<std::size_t>(s)] = static_cast<int>(idx) + 1;
            }
        }
    }
    if (!seen[static_cast<std::size_t>(target)]) return {};

    SubsetSumResult res;
    res.satisfiable = true;
    std::int64_t s = target;
    while (s > 0) {
        const int idx = reach[static_cast<std::size_t>(s)] - 1;
        res.witness.push_back(idx);
        s -= values[static_cast<std::size_t>(idx)];
    }
    std::sort(res.witness.begin(), res.witness.end());
    return res;
}

std::optional<CliqueResult> brute_force_k_clique(const SimpleGraph& g, int k) {
    const int n = g.size();
    if (n > 16) throw CapExceededError("clique brute force capped at 16 vertices");
    if (k < 0 || k > n) return std::nullopt;
    if (k == 0) return CliqueResult{{}, 0.0};

    std::optional<CliqueResult> best;
    std::vector<int> pick(static_cast<std::size_t>(k));
    // Lexicographic k-combinations; first optimum found wins ties.
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        bool clique = true;
        double w = 0.0;
        for (int a = 0; a < k && clique; ++a) {
            for (int b = a + 1; b < k; ++b) {
                if (!g.has_edge(pick[static_cast<std::size_t>(a)],
                                pick[static_cast<std::size_t>(b)])) {
                    clique = false;
                    break;
                }
                w += g.weight(pick[static_cast<std::size_t>(a)],
                              pick[static_cast<std::size_t>(b)]);
            }
        }
        if (clique && (!best || w > best->weight)) best = CliqueResult{pick, w};

        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return best;
}

KnapsackResult knapsack_dp(const std::vector<std::int64_t>& weights,
                           const std::vector<std::int64_t>& values, std::int64_t capacity) {
    if (weights.size() != values.size())
        throw ValidationError("knapsack weight/value lists differ in length");
    for (std::int64_t w : weights)
        if (w <= 0) throw ValidationError("knapsack weights must be positive");
    if (capacity < 0) capacity = 0;
    const auto n = weights.size();
    if (capacity > 0 && static_cast<std::int64_t>(n) > (100'000'000 / capacity))
        throw CapExceededError("knapsack DP table too large");

    // best[i][w] over items 0..i-1 at capacity w.
    std::vector<std::vector<std::int64_t>> best(
        n + 1, std::vector<std::int64_t>(static_cast<std::size_t>(capacity) + 1, 0));
    for (std::size_t i = 1; i <= n; ++i) {
        const std::int64_t w = weights[i - 1];
        const std::int64_t v = values[i - 1];
        for (std::int64_t c = 0; c <= capacity; ++c) {
            std::int64_t take = -1;
            if (w <= c) take = best[i - 1][static_cast<std::size_t>(c - w)] + v;
            best[i][static_cast<std::size_t>(c)] =
                std::max(best[i - 1][static_cast<std::size_t>(c)], take);
        }
    }

    KnapsackResult res;
    res.best_value = best[n][static_cast<std::size_t>(capacity)];
    // Reverse walk; skipping an item whenever that preserves the optimum
    // leaves the packing preferring lower indices.
    std::int64_t c = capacity;
    for (std::size_t i = n; i > 0; --i) {
        if (best[i][static_cast<std::size_t>(c)] == best[i - 1][static_cast<std::size_t>(c)])
            continue;
        res.packed.push_back(static_cast<int>(i - 1));
        c -= weights[i - 1];
    }
    std::sort(res.packed.begin(), res.packed.end());
    return res;
}

IndependentSetResult independent_set_bf(const SimpleGraph& g, int k) {
    const int n = g.size();
    if (n > 20) throw CapExceededError("independent-set brute force capped at 20 vertices");
    if (k < 0 || k > n) return {};
    if (k == 0) return {true, {}};

    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        bool independent = true;
        for (int a = 0; a < k && independent; ++a)
            for (int b = a + 1; b < k; ++b)
                if (g.has_edge(pick[static_cast<std::size_t>(a)],
                               pick[static_cast<std::size_t>(b)])) {
                    independent = false;
                    break;
                }
        if (independent) return {true, pick};

        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return {};
}

}  // namespace kcr

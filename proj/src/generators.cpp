#include <kcr/generators.hpp>

#include <algorithm>
#include <array>
#include <set>

#include <kcr/synthesis.hpp>

namespace kcr::gen {

SimpleGraph random_simple_graph(SplitMix64& rng, int min_n, int max_n, bool weighted) {
    const int n = static_cast<int>(rng.next_int(min_n, max_n));
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!rng.next_bool()) continue;
            if (weighted) {
                g.add_edge(u, v, static_cast<double>(rng.next_int(1, 9)));
            } else {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

PennyRealization random_penny_realization(SplitMix64& rng, int min_pennies, int max_pennies) {
    const int count = static_cast<int>(rng.next_int(min_pennies, max_pennies));
    std::vector<std::array<std::int64_t, 2>> cells{{0, 0}};
    std::set<std::array<std::int64_t, 2>> occupied{{0, 0}};
    static constexpr std::array<std::array<std::int64_t, 2>, 4> kSteps{
        {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
    while (static_cast<int>(cells.size()) < count) {
        const auto& base =
            cells[static_cast<std::size_t>(rng.next_int(0, static_cast<int>(cells.size()) - 1))];
        const auto& step = kSteps[static_cast<std::size_t>(rng.next_int(0, 3))];
        const std::array<std::int64_t, 2> cell{base[0] + step[0], base[1] + step[1]};
        if (!occupied.insert(cell).second) continue;  // occupied: redraw base and step
        cells.push_back(cell);
    }
    PennyRealization p;
    p.radius = 0.5;
    for (const auto& cell : cells) {
        p.centers.push_back({static_cast<double>(cell[0]), static_cast<double>(cell[1])});
    }
    return p;
}

KnapsackInstance random_knapsack(SplitMix64& rng) {
    KnapsackInstance inst;
    std::int64_t total_w = 0;
    std::int64_t total_p = 0;
    do {
        inst.items.clear();
        total_w = total_p = 0;
        const int n = static_cast<int>(rng.next_int(1, 6));
        for (int i = 0; i < n; ++i) {
            KnapsackItem item{rng.next_int(1, 9), rng.next_int(1, 9)};
            total_w += item.w;
            total_p += item.p;
            inst.items.push_back(item);
        }
    } while (total_w < 2);  // need a capacity strictly between 0 and the total
    inst.capacity = rng.next_int(1, total_w - 1);
    inst.goal_value = rng.next_int(1, total_p);
    return inst;
}

SubsetSumCase random_subset_sum(SplitMix64& rng) {
    SubsetSumCase out;
    std::int64_t sum = 0;
    do {
        out.values.clear();
        sum = 0;
        const int n = static_cast<int>(rng.next_int(1, 8));
        for (int i = 0; i < n; ++i) {
            const std::int64_t v = rng.next_int(1, 9);
            if (sum + v > 40) break;
            out.values.push_back(v);
            sum += v;
        }
    } while (sum < 2);
    out.target = rng.next_int(1, sum - 1);
    return out;
}

MinimalityCase random_minimality_case(SplitMix64& rng) {
    MinimalityCase out;
    while (true) {
        out.charges.clear();
        const int base = static_cast<int>(rng.next_int(2, 12));
        std::int64_t balance = 0;
        for (int i = 0; i < base; ++i) {
            std::int64_t q = rng.next_int(1, 6);
            if (rng.next_bool()) q = -q;
            out.charges.push_back(q);
            balance += q;
        }
        // Cancel the imbalance with |q| <= 6 chunks; resample when that would
        // blow the size or zero out a chunk.
        bool ok = true;
        while (balance != 0) {
            if (out.charges.size() >= 15) {
                ok = false;
                break;
            }
            const std::int64_t q = -std::clamp<std::int64_t>(balance, -6, 6);
            out.charges.push_back(q);
            balance += q;
        }
        if (!ok) continue;
        std::int64_t possum = 0;
        for (std::int64_t q : out.charges) {
            if (q > 0) possum += q;
        }
        if (possum < 1) continue;
        out.k = rng.next_int(1, possum);
        return out;
    }
}

RemovalInstance random_balanced_instance(SplitMix64& rng, int pairs_lo, int pairs_hi) {
    const int m = static_cast<int>(rng.next_int(pairs_lo, pairs_hi));
    RemovalInstance inst;
    for (int i = 0; i < m; ++i) {
        inst.graph.ions.push_back(Ion{2 * i, "s" + std::to_string(2 * i), +1,
                                      {static_cast<double>(i), 0.0, 0.0}, ""});
        inst.graph.ions.push_back(Ion{2 * i + 1, "s" + std::to_string(2 * i + 1), -1,
                                      {static_cast<double>(i), 1.0, 0.0}, ""});
    }
    std::vector<PairTarget> targets;
    for (int a = 0; a < 2 * m; ++a) {
        for (int b = a + 1; b < 2 * m; ++b) {
            targets.push_back({a, b, ExtReal(rng.next_real(-5.0, 5.0))});
        }
    }
    inst.graph.energy = build_pair_table(targets);
    inst.variant = Variant::ExactK;
    inst.k = rng.next_int(0, m - 2);  // leaves k' = m - k >= 2 surviving pairs
    inst.goal = rng.next_real(-10.0, 10.0);
    return inst;
}

}  // namespace kcr::gen

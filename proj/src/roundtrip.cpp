#include <kcr/roundtrip.hpp>

#include <sstream>

#include <kcr/clique_reductions.hpp>
#include <kcr/generators.hpp>
#include <kcr/knapsack.hpp>
#include <kcr/penny.hpp>
#include <kcr/solvers.hpp>

namespace kcr::rt {

namespace {

bool meets_goal(const std::optional<BruteForceResult>& res, const RemovalInstance& inst,
                double tol) {
    if (!res) return false;
    if (inst.goal.is_infinite()) return true;
    if (res->energy.is_infinite()) return false;
    return res->energy.value() <= inst.goal.value() + tol;
}

template <typename Fn>
Report run(std::uint64_t seed, std::uint64_t count, Fn&& make_case) {
    Report report;
    for (std::uint64_t i = 0; i < count; ++i) {
        SplitMix64 rng = instance_stream(seed, i);
        report.cases.push_back(make_case(rng, i));
    }
    return report;
}

}  // namespace

int Report::agree_count() const {
    int n = 0;
    for (const auto& c : cases) {
        if (c.agree()) ++n;
    }
    return n;
}

int Report::disagree_count() const {
    return static_cast<int>(cases.size()) - agree_count();
}

CaseResult clique_case(SplitMix64& rng, std::uint64_t index) {
    const SimpleGraph g = gen::random_simple_graph(rng, 1, 6, false);
    const int n = g.size();
    const int k = static_cast<int>(rng.next_int(1, n));
    const std::int64_t c = rng.next_int(1, 2);

    CaseResult out;
    out.index = index;
    out.source_sat = brute_force_k_clique(g, k).has_value();

    const ReductionOutput red = reduce_clique_to_kcr(g, k, c);
    out.reduced_sat = meets_goal(brute_force_removal(red.instance), red.instance, kGoalEps);

    std::ostringstream detail;
    detail << "clique n=" << n << " m=" << g.edges().size() << " k=" << k << " c=" << c;
    out.detail = detail.str();
    return out;
}

CaseResult penny_case(SplitMix64& rng, std::uint64_t index) {
    const PennyRealization p = gen::random_penny_realization(rng, 1, 4);
    const SimpleGraph real = validate_penny_realization(p);

    CaseResult out;
    out.index = index;

    // Padding only adds isolated pennies, so the padded tangency graph is the
    // real one plus bare vertices.
    const int padded_n = std::max(6, p.size());
    const int k = static_cast<int>(rng.next_int(1, padded_n));
    SimpleGraph padded(padded_n);
    for (const auto& [pair, weight] : real.edges()) {
        (void)weight;
        padded.add_edge(pair.first, pair.second);
    }
    out.source_sat = independent_set_bf(padded, k).found;

    const ReductionOutput red = build_two_plane_instance(p, k);
    out.reduced_sat = meets_goal(brute_force_removal(red.instance), red.instance, 1e-6);

    std::ostringstream detail;
    detail << "penny real=" << p.size() << " padded=" << padded_n << " k=" << k;
    out.detail = detail.str();
    return out;
}

CaseResult knapsack_case(SplitMix64& rng, std::uint64_t index) {
    const KnapsackInstance inst = gen::random_knapsack(rng);

    std::vector<std::int64_t> weights, values;
    for (const auto& item : inst.items) {
        weights.push_back(item.w);
        values.push_back(item.p);
    }

    CaseResult out;
    out.index = index;
    out.source_sat = knapsack_dp(weights, values, inst.capacity).best_value >= inst.goal_value;

    const ReductionOutput red = reduce_knapsack(inst);
    out.reduced_sat = meets_goal(brute_force_removal(red.instance), red.instance, kGoalEps);

    std::ostringstream detail;
    detail << "knapsack n=" << inst.items.size() << " cap=" << inst.capacity
           << " goal=" << inst.goal_value;
    out.detail = detail.str();
    return out;
}

Report run_clique(std::uint64_t seed, std::uint64_t count) {
    return run(seed, count, [](SplitMix64& rng, std::uint64_t i) { return clique_case(rng, i); });
}

Report run_penny(std::uint64_t seed, std::uint64_t count) {
    return run(seed, count, [](SplitMix64& rng, std::uint64_t i) { return penny_case(rng, i); });
}

Report run_knapsack(std::uint64_t seed, std::uint64_t count) {
    return run(seed, count,
               [](SplitMix64& rng, std::uint64_t i) { return knapsack_case(rng, i); });
}

}  // namespace kcr::rt

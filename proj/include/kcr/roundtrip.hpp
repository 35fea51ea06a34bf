#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <kcr/rng.hpp>

// Seeded agreement runs: per instance, solve the source problem with its own
// oracle, build the reduction, solve the built instance with the removal
// oracle, and compare satisfiability verdicts. The whole point is that the
// two verdicts are produced by routes sharing no reduction code.

namespace kcr::rt {

struct CaseResult {
    std::uint64_t index = 0;
    bool source_sat = false;
    bool reduced_sat = false;
    std::string detail;  // what was compared, for the TSV report

    bool agree() const { return source_sat == reduced_sat; }
};

struct Report {
    std::vector<CaseResult> cases;

    int agree_count() const;
    int disagree_count() const;
    bool all_agree() const { return disagree_count() == 0; }
};

// k-clique vs clique gadget; n <= 6, k in [1, n], c in {1, 2}.
CaseResult clique_case(SplitMix64& rng, std::uint64_t index);

// Independent set on the padded tangency graph vs the two-plane instance;
// <= 4 real pennies, k over the padded count.
CaseResult penny_case(SplitMix64& rng, std::uint64_t index);

// Knapsack DP vs the Coulomb pair gadget.
CaseResult knapsack_case(SplitMix64& rng, std::uint64_t index);

Report run_clique(std::uint64_t seed, std::uint64_t count);
Report run_penny(std::uint64_t seed, std::uint64_t count);
Report run_knapsack(std::uint64_t seed, std::uint64_t count);

}  // namespace kcr::rt

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <kcr/model.hpp>

// Problem statements over crystal graphs and polynomial checking of claimed
// solutions. A removal is a subset of ions; it must be charge-neutral and is
// judged against the variant's charge condition plus a goal energy.

namespace kcr {

enum class Variant {
    ExactK,           // remove exactly k positive charges
    AtLeastK,         // remove at least k positive charges
    MinimalAtLeastK,  // at least k, and no strict subset also qualifies
};

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);

struct RemovalInstance {
    CrystalGraph graph;
    Variant variant = Variant::ExactK;
    std::int64_t k = 0;    // charge units, nonnegative
    ExtReal goal = 0.0;    // remaining-energy target
};

// A claimed solution: the set of removed ion ids.
struct RemovalSolution {
    std::vector<int> removed;
};

struct Verdict {
    bool valid = false;
    ExtReal remaining = 0.0;
    std::string reason;  // first failed condition; empty when valid
};

// Charge bookkeeping over a subset of ions (all ids must exist in g).
bool is_neutral(const CrystalGraph& g, const std::vector<int>& ids);
std::int64_t positive_charge_sum(const CrystalGraph& g, const std::vector<int>& ids);

// Caps for the subset-sum scan inside is_minimal. Charges beyond the bound
// are refused rather than silently ground through.
struct MinimalityPolicy {
    std::int64_t max_abs_charge = 1'000'000;
};

// Decides minimality of a neutral removal r with positive_charge_sum(r) >= k:
// r is minimal iff no strict subset of r is neutral with positive charge sum
// still >= k. Runs a subset-sum reachability scan over the positive charges
// and the negative magnitudes. Throws MinimalityUndecidableError when a
// charge magnitude exceeds policy.max_abs_charge.
bool is_minimal(const CrystalGraph& g, const std::vector<int>& removed, std::int64_t k,
                const MinimalityPolicy& policy = {});

// Checks neutrality, the variant charge condition, then
// remaining <= goal + eps (eps = 1e-9, absolute). Reports the first failed
// condition as "neutrality", "charge-sum", "minimality" or "energy".
Verdict verify_solution(const RemovalInstance& inst, const RemovalSolution& sol,
                        const MinimalityPolicy& policy = {});

inline constexpr double kGoalEps = 1e-9;

}  // namespace kcr

#include <kcr/verification.hpp>

#include <algorithm>
#include <cstdlib>

namespace kcr {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::ExactK: return "exact_k";
        case Variant::AtLeastK: return "at_least_k";
        case Variant::MinimalAtLeastK: return "minimal_at_least_k";
    }
    return "exact_k";
}

Variant variant_from_name(const std::string& name) {
    if (name == "exact_k") return Variant::ExactK;
    if (name == "at_least_k") return Variant::AtLeastK;
    if (name == "minimal_at_least_k") return Variant::MinimalAtLeastK;
    throw JsonFormatError("unknown variant: " + name);
}

bool is_neutral(const CrystalGraph& g, const std::vector<int>& ids) {
    std::int64_t q = 0;
    for (int id : ids) q += g.ion(id).charge;
    return q == 0;
}

std::int64_t positive_charge_sum(const CrystalGraph& g, const std::vector<int>& ids) {
    std::int64_t q = 0;
    for (int id : ids) {
        const std::int64_t c = g.ion(id).charge;
        if (c > 0) q += c;
    }
    return q;
}

namespace {

// Reachable subset sums of `values` up to `bound`, as a bitmap.
std::vector<char> reachable_sums(const std::vector<std::int64_t>& values, std::int64_t bound) {
    std::vector<char> reach(static_cast<std::size_t>(bound) + 1, 0);
    reach[0] = 1;
    for (std::int64_t v : values) {
        if (v > bound) continue;
        for (std::int64_t s = bound; s >= v; --s) {
            if (reach[static_cast<std::size_t>(s - v)]) reach[static_cast<std::size_t>(s)] = 1;
        }
    }
    return reach;
}

}  // namespace

bool is_minimal(const CrystalGraph& g, const std::vector<int>& removed, std::int64_t k,
                const MinimalityPolicy& policy) {
    std::vector<std::int64_t> pos, neg;
    std::int64_t possum = 0, negsum = 0;
    for (int id : removed) {
        const std::int64_t c = g.ion(id).charge;
        if (std::abs(c) > policy.max_abs_charge)
            throw MinimalityUndecidableError(
                "charge magnitude " + std::to_string(std::abs(c)) +
                " exceeds the minimality bound " + std::to_string(policy.max_abs_charge));
        if (c > 0) {
            pos.push_back(c);
            possum += c;
        } else {
            neg.push_back(-c);
            negsum += -c;
        }
    }
    if (possum != negsum)
        throw ValidationError("minimality asked about a non-neutral removal");
    if (possum < k)
        throw ValidationError("minimality asked about a removal below the charge target");

    // A strict neutral sub-removal with positive sum >= k exists iff a
    // nonempty balanced chunk of total t <= possum - k can be peeled off.
    const std::int64_t top = possum - k;
    if (top <= 0) return true;
    const auto preach = reachable_sums(pos, top);
    const auto nreach = reachable_sums(neg, top);
    for (std::int64_t t = 1; t <= top; ++t) {
        if (preach[static_cast<std::size_t>(t)] && nreach[static_cast<std::size_t>(t)])
            return false;
    }
    return true;
}

Verdict verify_solution(const RemovalInstance& inst, const RemovalSolution& sol,
                        const MinimalityPolicy& policy) {
    Verdict v;
    v.remaining = remaining_energy(inst.graph, sol.removed);  // also rejects bad ids/dups

    if (!is_neutral(inst.graph, sol.removed)) {
        v.reason = "neutrality";
        return v;
    }
    const std::int64_t possum = positive_charge_sum(inst.graph, sol.removed);
    switch (inst.variant) {
        case Variant::ExactK:
            if (possum != inst.k) {
                v.reason = "charge-sum";
                return v;
            }
            break;
        case Variant::AtLeastK:
            if (possum < inst.k) {
                v.reason = "charge-sum";
                return v;
            }
            break;
        case Variant::MinimalAtLeastK:
            if (possum < inst.k) {
                v.reason = "charge-sum";
                return v;
            }
            if (!is_minimal(inst.graph, sol.removed, inst.k, policy)) {
                v.reason = "minimality";
                return v;
            }
            break;
    }
    const ExtReal bound = inst.goal.is_infinite() ? ExtReal::infinity()
                                                  : ExtReal(inst.goal.value() + kGoalEps);
    if (!(v.remaining <= bound)) {
        v.reason = "energy";
        return v;
    }
    v.valid = true;
    return v;
}

}  // namespace kcr

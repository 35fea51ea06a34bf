#include <doctest.h>

#include <cstdint>
#include <vector>

#include <kcr/clique_reductions.hpp>
#include <kcr/generators.hpp>
#include <kcr/rng.hpp>
#include <kcr/verification.hpp>

using namespace kcr;

namespace {

// Graph whose ions carry the given charges; energies are irrelevant to the
// charge bookkeeping under test.
CrystalGraph charge_graph(const std::vector<std::int64_t>& charges) {
    CrystalGraph g;
    for (std::size_t i = 0; i < charges.size(); ++i) {
        g.ions.push_back(Ion{static_cast<int>(i), "s", charges[i],
                             {static_cast<double>(i), 0.0, 0.0}, ""});
    }
    g.energy = CoulombSpec{};
    return g;
}

std::vector<int> all_ids(const CrystalGraph& g) {
    std::vector<int> ids;
    for (const auto& ion : g.ions) ids.push_back(ion.id);
    return ids;
}

// Definition-level reference: minimal iff no strict subset is neutral with
// positive charge sum still >= k. Exponential on purpose; shares nothing
// with the subset-sum route in is_minimal.
bool minimal_by_enumeration(const std::vector<std::int64_t>& charges, std::int64_t k) {
    const int n = static_cast<int>(charges.size());
    const std::uint32_t full = (1u << n) - 1u;
    for (std::uint32_t mask = 0; mask < full; ++mask) {  // strict subsets only
        std::int64_t total = 0, possum = 0;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                total += charges[static_cast<std::size_t>(i)];
                if (charges[static_cast<std::size_t>(i)] > 0)
                    possum += charges[static_cast<std::size_t>(i)];
            }
        }
        if (total == 0 && possum >= k) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("verification") {

TEST_CASE("variant names round-trip") {
    for (Variant v : {Variant::ExactK, Variant::AtLeastK, Variant::MinimalAtLeastK}) {
        CHECK(variant_from_name(variant_name(v)) == v);
    }
    CHECK(variant_name(Variant::ExactK) == "exact_k");
    CHECK(variant_name(Variant::AtLeastK) == "at_least_k");
    CHECK(variant_name(Variant::MinimalAtLeastK) == "minimal_at_least_k");
    CHECK_THROWS_AS(variant_from_name("exactk"), JsonFormatError);
}

TEST_CASE("charge bookkeeping") {
    const CrystalGraph g = charge_graph({+1, -1, +2, -2, +1});
    CHECK(is_neutral(g, {}));
    CHECK(is_neutral(g, {0, 1}));
    CHECK_FALSE(is_neutral(g, {2, 1}));
    CHECK(positive_charge_sum(g, {0, 4, 3}) == 2);
    CHECK(positive_charge_sum(g, {}) == 0);
    CHECK(positive_charge_sum(g, {3}) == 0);
    CHECK_THROWS_AS(is_neutral(g, {17}), UnknownIonError);
}

TEST_CASE("minimality matches the anchor cases") {
    CHECK(is_minimal(charge_graph({+1, -1}), {0, 1}, 1));
    CHECK_FALSE(is_minimal(charge_graph({+1, +1, -1, -1}), {0, 1, 2, 3}, 1));
    CHECK(is_minimal(charge_graph({+3, -2, -1}), {0, 1, 2}, 3));
}

TEST_CASE("minimality rejects malformed queries") {
    CHECK_THROWS_AS(is_minimal(charge_graph({+2, -1}), {0, 1}, 1), ValidationError);
    CHECK_THROWS_AS(is_minimal(charge_graph({+1, -1}), {0, 1}, 2), ValidationError);
}

TEST_CASE("minimality refuses charges beyond the policy bound") {
    const CrystalGraph g = charge_graph({2'000'000, -2'000'000});
    CHECK_THROWS_AS(is_minimal(g, {0, 1}, 1), MinimalityUndecidableError);
    MinimalityPolicy loose;
    loose.max_abs_charge = 2'000'000;
    CHECK(is_minimal(g, {0, 1}, 1, loose));
}

TEST_CASE("minimality agrees with strict-subset enumeration") {
    SplitMix64 rng(77001u);
    for (int i = 0; i < 200; ++i) {
        const auto c = gen::random_minimality_case(rng);
        const CrystalGraph g = charge_graph(c.charges);
        CHECK(is_minimal(g, all_ids(g), c.k) == minimal_by_enumeration(c.charges, c.k));
    }
}

TEST_CASE("verdicts walk the failure ladder on the triangle gadget") {
    // Triangle gadget with one pair to remove: goal is met by removing any
    // single same-vertex ion pair.
    SimpleGraph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(0, 2);
    k3.add_edge(1, 2);
    const RemovalInstance inst = reduce_clique_to_kcr(k3, 2, 1).instance;
    REQUIRE(inst.k == 1);
    REQUIRE(inst.goal == ExtReal(-6.0));

    SUBCASE("valid removal") {
        const Verdict v = verify_solution(inst, {{0, 1}});
        CHECK(v.valid);
        CHECK(v.reason.empty());
        CHECK(v.remaining.value() == doctest::Approx(-6.0));
    }
    SUBCASE("non-neutral removal") {
        const Verdict v = verify_solution(inst, {{0}});
        CHECK_FALSE(v.valid);
        CHECK(v.reason == "neutrality");
    }
    SUBCASE("wrong charge sum") {
        const Verdict v = verify_solution(inst, {{}});
        CHECK_FALSE(v.valid);
        CHECK(v.reason == "charge-sum");
    }
    SUBCASE("energy miss") {
        RemovalInstance strict = inst;
        strict.goal = -7.0;
        const Verdict v = verify_solution(strict, {{0, 1}});
        CHECK_FALSE(v.valid);
        CHECK(v.reason == "energy");
        CHECK(v.remaining.value() == doctest::Approx(-6.0));
    }
    SUBCASE("unknown ion is an error, not a verdict") {
        CHECK_THROWS_AS(verify_solution(inst, {{0, 99}}), UnknownIonError);
    }
}

TEST_CASE("minimality failures are reported as such") {
    RemovalInstance inst;
    inst.graph = charge_graph({+1, +1, -1, -1});
    inst.variant = Variant::MinimalAtLeastK;
    inst.k = 1;
    inst.goal = ExtReal::infinity();
    const Verdict v = verify_solution(inst, {{0, 1, 2, 3}});
    CHECK_FALSE(v.valid);
    CHECK(v.reason == "minimality");

    inst.k = 2;  // now the full removal is minimal
    CHECK(verify_solution(inst, {{0, 1, 2, 3}}).valid);
}

TEST_CASE("validity is monotone in the goal and across variants") {
    SimpleGraph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(0, 2);
    k3.add_edge(1, 2);
    RemovalInstance inst = reduce_clique_to_kcr(k3, 2, 1).instance;
    const RemovalSolution sol{{0, 1}};

    REQUIRE(verify_solution(inst, sol).valid);
    inst.goal = -5.0;  // looser goal stays valid
    CHECK(verify_solution(inst, sol).valid);
    inst.goal = ExtReal::infinity();
    CHECK(verify_solution(inst, sol).valid);

    // An exact-k solution qualifies under the at-least and minimal readings.
    inst.variant = Variant::AtLeastK;
    CHECK(verify_solution(inst, sol).valid);
    inst.variant = Variant::MinimalAtLeastK;
    CHECK(verify_solution(inst, sol).valid);
}

TEST_CASE("goal comparisons tolerate float noise but not real misses") {
    RemovalInstance inst;
    inst.graph = charge_graph({+1, -1});
    inst.variant = Variant::ExactK;
    inst.k = 1;
    inst.goal = 0.0;
    // Removing both ions leaves zero energy, meeting goal 0 exactly.
    CHECK(verify_solution(inst, {{0, 1}}).valid);
    inst.goal = -1e-12;  // within the 1e-9 tolerance band
    CHECK(verify_solution(inst, {{0, 1}}).valid);
    inst.goal = -1.0;
    CHECK_FALSE(verify_solution(inst, {{0, 1}}).valid);
}

}  // TEST_SUITE

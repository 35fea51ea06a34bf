#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include <kcr/clique_reductions.hpp>
#include <kcr/generators.hpp>
#include <kcr/rng.hpp>
#include <kcr/solvers.hpp>

using namespace kcr;

namespace {

SimpleGraph triangle() {
    SimpleGraph g(3);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    return g;
}

SimpleGraph path3() {
    SimpleGraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    return g;
}

SimpleGraph complete(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

bool oracle_meets_goal(const RemovalInstance& inst, double tol = kGoalEps) {
    const auto res = brute_force_removal(inst);
    if (!res || res->energy.is_infinite()) return false;
    return res->energy.value() <= inst.goal.value() + tol;
}

}  // namespace

TEST_SUITE("clique") {

TEST_CASE("plain gadget shape and anchors") {
    const auto red = reduce_clique_to_kcr(triangle(), 3, 1);
    CHECK(red.instance.graph.ions.size() == 6);
    CHECK(red.instance.k == 0);
    CHECK(red.instance.goal == ExtReal(-15.0));
    CHECK(red.instance.variant == Variant::ExactK);
    CHECK(red.instance.graph.total_charge() == 0);
    CHECK_NOTHROW(validate(red.instance.graph));
    for (int i = 0; i < 3; ++i) {
        CHECK(red.decode.at(2 * i) == i);
        CHECK(red.decode.at(2 * i + 1) == i);
    }
    CHECK(oracle_meets_goal(red.instance));

    const auto k4 = reduce_clique_to_kcr(complete(4), 2, 2);
    CHECK(k4.instance.k == 4);  // c (n - k)
    CHECK(k4.instance.goal == ExtReal(-6.0));
    CHECK(oracle_meets_goal(k4.instance));
}

TEST_CASE("missing edges become forbidden pairs") {
    const auto red = reduce_clique_to_kcr(path3(), 3, 1);
    // Vertices 0 and 2 are non-adjacent, so their ions can never co-survive;
    // with nothing to remove the instance is unsatisfiable.
    CHECK(red.instance.k == 0);
    const auto res = brute_force_removal(red.instance);
    REQUIRE(res.has_value());  // the empty removal still matches ExactK(0)
    CHECK(res->energy.is_infinite());
    CHECK_FALSE(oracle_meets_goal(red.instance));
}

TEST_CASE("gadget satisfiability tracks k-clique existence") {
    SplitMix64 rng(90210u);
    for (int i = 0; i < 30; ++i) {
        const SimpleGraph g = gen::random_simple_graph(rng, 1, 5, false);
        const int k = static_cast<int>(rng.next_int(1, g.size()));
        const std::int64_t c = rng.next_int(1, 2);
        const bool has_clique = brute_force_k_clique(g, k).has_value();
        const auto red = reduce_clique_to_kcr(g, k, c);
        CHECK(oracle_meets_goal(red.instance) == has_clique);
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(reduce_clique_to_kcr(triangle(), 0, 1), ValidationError);
    CHECK_THROWS_AS(reduce_clique_to_kcr(triangle(), 4, 1), ValidationError);
    CHECK_THROWS_AS(reduce_clique_to_kcr(triangle(), 2, 0), ValidationError);
    CHECK_THROWS_AS(reduce_clique_to_kcr(SimpleGraph(0), 1, 1), ValidationError);
}

TEST_CASE("weighted gadget anchors") {
    SimpleGraph unit = triangle();  // unweighted edges count 1
    const auto red = reduce_max_weight_clique_to_kcr(unit, 3, 3.0, 1);
    CHECK(red.notes.at("cap").get<double>() == doctest::Approx(2.0));
    CHECK(red.instance.goal == ExtReal(-9.0));  // -k cap - v
    CHECK(oracle_meets_goal(red.instance, 1e-9));

    SimpleGraph wt(3);
    wt.add_edge(0, 1, 2.0);
    wt.add_edge(0, 2, 3.0);
    wt.add_edge(1, 2, 4.0);
    const auto sat = reduce_max_weight_clique_to_kcr(wt, 3, 9.0, 1);
    CHECK(oracle_meets_goal(sat.instance, 1e-9));
    const auto unsat = reduce_max_weight_clique_to_kcr(wt, 3, 10.0, 1);
    CHECK_FALSE(oracle_meets_goal(unsat.instance, 1e-9));

    // Single vertex, no edges: k = 1 asks for nothing beyond the vertex.
    const auto lone = reduce_max_weight_clique_to_kcr(SimpleGraph(1), 1, 0.0, 1);
    CHECK(oracle_meets_goal(lone.instance, 1e-9));
}

TEST_CASE("weighted gadget optimum tracks the best k-clique weight") {
    SplitMix64 rng(90211u);
    for (int i = 0; i < 20; ++i) {
        const SimpleGraph g = gen::random_simple_graph(rng, 2, 5, true);
        const int k = static_cast<int>(rng.next_int(1, g.size()));
        const auto best = brute_force_k_clique(g, k);
        const double v = best ? best->weight : 1.0;
        const auto red = reduce_max_weight_clique_to_kcr(g, k, v, 1);
        CHECK(oracle_meets_goal(red.instance, 1e-9) == best.has_value());
        if (best) {
            // Just above the optimum the instance must fail.
            const auto over = reduce_max_weight_clique_to_kcr(g, k, v + 0.5, 1);
            CHECK_FALSE(oracle_meets_goal(over.instance, 1e-9));
        }
    }
}

TEST_CASE("arbitrary charges delegate on matched magnitudes") {
    const auto red = reduce_clique_arbitrary_charges(triangle(), 2, {+1, -1, +5});
    CHECK(red.notes.at("delegated").get<bool>());
    CHECK(red.notes.at("c").get<std::int64_t>() == 1);
    CHECK(red.instance.graph.ions.size() == 6);
}

TEST_CASE("arbitrary charge dummy counts solve the congruences") {
    // +2/-1 rows on a triangle, k = 2: t = 0, t_c = 0, t_d = 2.
    const auto a = reduce_clique_arbitrary_charges(triangle(), 2, {+2, -1});
    CHECK(a.notes.at("delegated").get<bool>() == false);
    CHECK(a.notes.at("t").get<std::int64_t>() == 0);
    CHECK(a.notes.at("t_c").get<std::int64_t>() == 0);
    CHECK(a.notes.at("t_d").get<std::int64_t>() == 2);
    CHECK(a.instance.graph.total_charge() == 0);
    CHECK_NOTHROW(validate(a.instance.graph));

    // +3/-2 rows on K4, k = 2: t = 0, t_c = 0, t_d = 1.
    const auto b = reduce_clique_arbitrary_charges(complete(4), 2, {+3, -2});
    CHECK(b.notes.at("t").get<std::int64_t>() == 0);
    CHECK(b.notes.at("t_c").get<std::int64_t>() == 0);
    CHECK(b.notes.at("t_d").get<std::int64_t>() == 1);
    CHECK(b.instance.graph.total_charge() == 0);
    CHECK_NOTHROW(validate(b.instance.graph));
    CHECK(oracle_meets_goal(b.instance));
}

TEST_CASE("arbitrary charge satisfiability tracks k-clique existence") {
    SplitMix64 rng(90212u);
    const std::vector<std::vector<std::int64_t>> charge_sets{{+2, -1}, {+3, -2}};
    for (int i = 0; i < 12; ++i) {
        const SimpleGraph g = gen::random_simple_graph(rng, 1, 4, false);
        const int k = static_cast<int>(rng.next_int(1, g.size()));
        const auto& charges = charge_sets[static_cast<std::size_t>(rng.next_int(0, 1))];
        const bool has_clique = brute_force_k_clique(g, k).has_value();
        const auto red = reduce_clique_arbitrary_charges(g, k, charges);
        CHECK(red.instance.graph.total_charge() == 0);
        CHECK(oracle_meets_goal(red.instance) == has_clique);
    }
}

TEST_CASE("arbitrary charges require an opposite-signed pair") {
    CHECK_THROWS_AS(reduce_clique_arbitrary_charges(triangle(), 2, {+1, +2}),
                    NoBalancedSolutionError);
    CHECK_THROWS_AS(reduce_clique_arbitrary_charges(triangle(), 2, {-4}),
                    NoBalancedSolutionError);
}

TEST_CASE("minimality gadget anchors") {
    const auto sat = build_minimality_gadget({2, 3, 7}, 5);
    CHECK(sat.instance.variant == Variant::MinimalAtLeastK);
    CHECK(sat.instance.k == 7);  // max(k, sum - k)
    CHECK(sat.instance.goal == ExtReal(0.0));
    CHECK(sat.instance.graph.ions.size() == 5);
    CHECK(sat.instance.graph.ions[3].charge == -5);
    CHECK(sat.instance.graph.ions[4].charge == -7);
    CHECK(sat.claimed_removed.size() == 5);
    // {2,3} sums to 5, so the claimed whole-graph removal is not minimal.
    CHECK_FALSE(is_minimal(sat.instance.graph, sat.claimed_removed, sat.instance.k));

    const auto unsat = build_minimality_gadget({2, 4, 8}, 5);
    CHECK(unsat.instance.k == 9);
    CHECK(unsat.instance.graph.ions[3].charge == -5);
    CHECK(unsat.instance.graph.ions[4].charge == -9);
    CHECK(is_minimal(unsat.instance.graph, unsat.claimed_removed, unsat.instance.k));
}

TEST_CASE("minimality gadget rejects degenerate targets") {
    CHECK_THROWS_AS(build_minimality_gadget({1, 2}, 3), ValidationError);   // sum - k = 0
    CHECK_THROWS_AS(build_minimality_gadget({1, 2}, 0), ValidationError);
    CHECK_THROWS_AS(build_minimality_gadget({1, 2}, 5), ValidationError);
    CHECK_THROWS_AS(build_minimality_gadget({}, 1), ValidationError);
    CHECK_THROWS_AS(build_minimality_gadget({2, -1}, 1), ValidationError);
}

TEST_CASE("gadget minimality mirrors subset-sum unsatisfiability") {
    SplitMix64 rng(90213u);
    for (int i = 0; i < 25; ++i) {
        const auto c = gen::random_subset_sum(rng);
        const auto gadget = build_minimality_gadget(c.values, c.target);
        const bool minimal =
            is_minimal(gadget.instance.graph, gadget.claimed_removed, gadget.instance.k);
        CHECK(minimal == !subset_sum_dp(c.values, c.target).satisfiable);
    }
}

TEST_CASE("embedding produces the matching product graph") {
    SplitMix64 rng(90214u);
    const RemovalInstance inst = gen::random_balanced_instance(rng, 2, 2);
    RemovalInstance two = inst;
    two.k = 0;  // keep both pairs
    const auto emb = embed_kcr_into_weighted_k_clique(two);
    CHECK(emb.vertices.size() == 4);
    CHECK(emb.graph.edges().size() == 2);  // the two perfect matchings
    CHECK(emb.k == 2);
}

TEST_CASE("embedded clique weight equals minus the removal optimum") {
    SplitMix64 rng(90215u);
    for (int i = 0; i < 10; ++i) {
        const RemovalInstance inst = gen::random_balanced_instance(rng, 3, 4);
        const auto emb = embed_kcr_into_weighted_k_clique(inst);
        const auto clique = brute_force_k_clique(emb.graph, emb.k);
        const auto removal = brute_force_removal(inst);
        REQUIRE(clique.has_value());
        REQUIRE(removal.has_value());
        REQUIRE(removal->energy.is_finite());
        CHECK(clique->weight == doctest::Approx(-removal->energy.value()).epsilon(1e-9));
    }
}

TEST_CASE("embedding rejects unsupported instances") {
    SplitMix64 rng(90216u);
    RemovalInstance inst = gen::random_balanced_instance(rng, 3, 3);

    SUBCASE("at-least variant") {
        inst.variant = Variant::AtLeastK;
        CHECK_THROWS_AS(embed_kcr_into_weighted_k_clique(inst), ValidationError);
    }
    SUBCASE("non-uniform magnitudes") {
        inst.graph.ions[0].charge = +2;
        CHECK_THROWS_AS(embed_kcr_into_weighted_k_clique(inst), ValidationError);
    }
    SUBCASE("k not divisible by the magnitude") {
        for (auto& ion : inst.graph.ions) ion.charge = ion.charge > 0 ? +2 : -2;
        inst.k = 3;
        CHECK_THROWS_AS(embed_kcr_into_weighted_k_clique(inst), ValidationError);
    }
    SUBCASE("too few survivors") {
        inst.k = static_cast<std::int64_t>(inst.graph.ions.size()) / 2 - 1;
        CHECK_THROWS_AS(embed_kcr_into_weighted_k_clique(inst), ValidationError);
    }
    SUBCASE("forbidden pair energies") {
        auto& table = std::get<PairTableSpec>(inst.graph.energy);
        table.pairs.begin()->second = ExtReal::infinity();
        CHECK_THROWS_AS(embed_kcr_into_weighted_k_clique(inst), ValidationError);
    }
}

}  // TEST_SUITE

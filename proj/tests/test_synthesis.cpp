#include <doctest.h>

#include <cmath>

#include <kcr/model.hpp>
#include <kcr/rng.hpp>
#include <kcr/synthesis.hpp>

using namespace kcr;

TEST_SUITE("synthesis") {

TEST_CASE("each sign branch lands on its closed form") {
    SUBCASE("positive target, repulsive charges") {
        const ForceFieldEntry f = synthesize_bc_params(2.0, 1, 1, 2.0);
        CHECK(f.b == 0.0);
        CHECK(f.a == doctest::Approx(2.0));
        CHECK(f.c == doctest::Approx(32.0));  // qq * r^5
    }
    SUBCASE("positive target, attractive charges") {
        const ForceFieldEntry f = synthesize_bc_params(2.0, 1, -1, 2.0);
        CHECK(f.a == doctest::Approx(2.5));  // a + |qq|/r
        CHECK(f.c == 0.0);
    }
    SUBCASE("nonpositive target, repulsive charges") {
        const ForceFieldEntry f = synthesize_bc_params(-1.0, 1, 1, 2.0);
        CHECK(f.a == 0.0);
        CHECK(f.c == doctest::Approx(96.0));  // |a| r^6 + qq r^5
    }
    SUBCASE("nonpositive target, attractive charges") {
        const ForceFieldEntry f = synthesize_bc_params(-1.0, 1, -1, 2.0);
        CHECK(f.a == doctest::Approx(0.5));  // |qq|/r
        CHECK(f.c == doctest::Approx(64.0));  // |a| r^6
    }
}

TEST_CASE("back-substitution reproduces the target energy") {
    SplitMix64 rng(20260816u);
    bool hit[2][2] = {{false, false}, {false, false}};
    for (int i = 0; i < 400; ++i) {
        const double a = rng.next_real(-10.0, 10.0);
        std::int64_t qi = rng.next_int(-3, 3);
        std::int64_t qj = rng.next_int(-3, 3);
        if (qi == 0) qi = 1;
        if (qj == 0) qj = -1;
        const double r = rng.next_real(0.1, 5.0);

        const ForceFieldEntry f = synthesize_bc_params(a, qi, qj, r);
        const double back = buckingham_coulomb(f, r, qi * qj);
        CHECK(std::abs(back - a) <= 1e-9 * std::max(1.0, std::abs(a)));
        hit[a > 0.0 ? 1 : 0][qi * qj > 0 ? 1 : 0] = true;
    }
    CHECK(hit[0][0]);
    CHECK(hit[0][1]);
    CHECK(hit[1][0]);
    CHECK(hit[1][1]);
}

TEST_CASE("synthesis rejects degenerate inputs") {
    CHECK_THROWS_AS(synthesize_bc_params(1.0, 0, 1, 1.0), ValidationError);
    CHECK_THROWS_AS(synthesize_bc_params(1.0, 1, 0, 1.0), ValidationError);
    CHECK_THROWS_AS(synthesize_bc_params(1.0, 1, 1, 0.0), ValidationError);
    CHECK_THROWS_AS(synthesize_bc_params(1.0, 1, 1, -2.0), ValidationError);
    CHECK_THROWS_AS(synthesize_bc_params(std::nan(""), 1, 1, 1.0), ValidationError);
}

TEST_CASE("pair-table builder rejects duplicates") {
    CHECK_THROWS_AS(build_pair_table({{0, 1, 0.0}, {1, 0, 1.0}}), DuplicatePairError);
    const PairTableSpec spec = build_pair_table({{0, 1, -1.0}, {0, 2, ExtReal::infinity()}});
    CHECK(spec.pairs.size() == 2);
    CHECK(spec.pairs.at({0, 2}).is_infinite());
}

}  // TEST_SUITE

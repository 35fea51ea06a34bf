#pragma once

#include <cstdint>
#include <vector>

#include <kcr/model.hpp>

// Controllable-family construction: any prescribed finite energy at a given
// distance is realizable with nonnegative Buckingham parameters (B = 0), and
// any table of prescribed extended-real pair energies is realizable directly.

namespace kcr {

// Parameters with A, C >= 0 and B = 0 such that
// A/e^{Br} - C/r^6 + q_i q_j / r == a at distance r. Requires r > 0 and
// nonzero charges. Case split on the signs of a and q_i q_j.
ForceFieldEntry synthesize_bc_params(double a, std::int64_t qi, std::int64_t qj, double r);

struct PairTarget {
    int i = 0;
    int j = 0;
    ExtReal energy = 0.0;  // +infinity marks a forbidden pair
};

// Assembles a PairTableSpec from explicit targets. Throws DuplicatePairError
// when the same unordered pair appears twice.
PairTableSpec build_pair_table(const std::vector<PairTarget>& targets);

}  // namespace kcr

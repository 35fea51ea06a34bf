#include <kcr/synthesis.hpp>

#include <cmath>
#include <string>

namespace kcr {

ForceFieldEntry synthesize_bc_params(double a, std::int64_t qi, std::int64_t qj, double r) {
    if (!(r > 0.0) || !std::isfinite(r))
        throw ValidationError("synthesis distance must be positive and finite");
    if (qi == 0 || qj == 0) throw ValidationError("synthesis charges must be nonzero");
    if (!std::isfinite(a)) throw ValidationError("synthesis target must be finite");

    const double qq = static_cast<double>(qi * qj);
    const double r5 = r * r * r * r * r;
    const double r6 = r5 * r;

    ForceFieldEntry f;  // b = 0, so the repulsive term is the constant a-part
    if (a > 0.0) {
        if (qq > 0.0) {
            f.a = a;
            f.c = qq * r5;
        } else {
            f.a = a + (-qq) / r;
            f.c = 0.0;
        }
    } else {
        if (qq > 0.0) {
            f.a = 0.0;
            f.c = -a * r6 + qq * r5;
        } else {
            f.a = (-qq) / r;
            f.c = -a * r6;
        }
    }
    return f;
}

PairTableSpec build_pair_table(const std::vector<PairTarget>& targets) {
    PairTableSpec spec;
    for (const auto& t : targets) {
        const IonPair key = make_ion_pair(t.i, t.j);
        if (!spec.pairs.emplace(key, t.energy).second)
            throw DuplicatePairError("pair " + std::to_string(key.first) + "," +
                                     std::to_string(key.second) + " listed twice");
    }
    return spec;
}

}  // namespace kcr

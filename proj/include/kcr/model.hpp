#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <kcr/errors.hpp>
#include <kcr/extended_real.hpp>

// Crystal graphs: complete graphs over charged ions in R^3 whose edge weights
// are pairwise energies. Distances and charges are dimensionless throughout.

namespace kcr {

using Vec3 = std::array<double, 3>;

struct Ion {
    int id = 0;
    std::string species;
    std::int64_t charge = 0;  // exact integer, nonzero in a valid graph
    Vec3 pos{0.0, 0.0, 0.0};
    std::string label;  // provenance tag for reductions, empty = none
};

// One Buckingham-Coulomb entry: A/e^{Br} - C/r^6 + q_i q_j / r.
// log_a mirrors ln(A) so the repulsive term can be evaluated as
// exp(log_a - B r) when A itself is out of double range.
struct ForceFieldEntry {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    std::optional<double> log_a;
};

using SpeciesPair = std::pair<std::string, std::string>;  // normalized s1 <= s2
using IonPair = std::pair<int, int>;                      // normalized i < j

SpeciesPair make_species_pair(std::string s1, std::string s2);
IonPair make_ion_pair(int i, int j);

struct CoulombSpec {};

struct BuckinghamCoulombSpec {
    std::map<SpeciesPair, ForceFieldEntry> table;
};

// Explicit per-pair energies; +infinity marks a forbidden pair. Every
// unordered ion pair of the graph must be present.
struct PairTableSpec {
    std::map<IonPair, ExtReal> pairs;
};

using EnergySpec = std::variant<CoulombSpec, BuckinghamCoulombSpec, PairTableSpec>;

struct CrystalGraph {
    std::vector<Ion> ions;
    EnergySpec energy;
    std::optional<Vec3> cell;  // axis-aligned bounds [0, l] per axis

    const Ion* find_ion(int id) const;
    const Ion& ion(int id) const;  // throws UnknownIonError
    std::int64_t total_charge() const;
};

double distance(const Vec3& a, const Vec3& b);

// Buckingham-Coulomb energy at distance r for charge product qq.
double buckingham_coulomb(const ForceFieldEntry& f, double r, std::int64_t qq);

// Energy of the unordered pair {i, j}. Throws UnknownIonError for bad ids and
// MissingForceFieldError when the active energy kind has no entry for the
// pair.
ExtReal pairwise_energy(const CrystalGraph& g, int i, int j);

// Sum over all unordered pairs; +infinity absorbs.
ExtReal total_energy(const CrystalGraph& g);

// Energy of the subgraph induced by ions not listed in `removed`.
// `removed` must be a set (no duplicates) of known ion ids.
ExtReal remaining_energy(const CrystalGraph& g, const std::vector<int>& removed);

// Structural invariants: unique ids, nonzero charges, pairwise distinct
// positions, neutrality, energy-spec coverage, cell containment.
// Throws ValidationError on the first violation found.
void validate(const CrystalGraph& g);

}  // namespace kcr

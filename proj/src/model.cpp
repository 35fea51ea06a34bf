#include <kcr/model.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace kcr {

SpeciesPair make_species_pair(std::string s1, std::string s2) {
    if (s2 < s1) std::swap(s1, s2);
    return {std::move(s1), std::move(s2)};
}

IonPair make_ion_pair(int i, int j) {
    if (i == j) throw ValidationError("ion pair with i == j: " + std::to_string(i));
    if (j < i) std::swap(i, j);
    return {i, j};
}

const Ion* CrystalGraph::find_ion(int id) const {
    for (const auto& ion : ions)
        if (ion.id == id) return &ion;
    return nullptr;
}

const Ion& CrystalGraph::ion(int id) const {
    const Ion* p = find_ion(id);
    if (!p) throw UnknownIonError("unknown ion id " + std::to_string(id));
    return *p;
}

std::int64_t CrystalGraph::total_charge() const {
    std::int64_t q = 0;
    for (const auto& ion : ions) q += ion.charge;
    return q;
}

double distance(const Vec3& a, const Vec3& b) {
    const double dx = a[0] - b[0];
    const double dy = a[1] - b[1];
    const double dz = a[2] - b[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double buckingham_coulomb(const ForceFieldEntry& f, double r, std::int64_t qq) {
    // Factored path keeps A e^{-Br} finite even when A overflows double.
    double repulsion;
    if (f.log_a.has_value()) {
        repulsion = std::exp(*f.log_a - f.b * r);
    } else {
        repulsion = f.a * std::exp(-f.b * r);
    }
    const double r6 = r * r * r * r * r * r;
    return repulsion - f.c / r6 + static_cast<double>(qq) / r;
}

namespace {

ExtReal pair_energy_impl(const CrystalGraph& g, const Ion& a, const Ion& b) {
    if (std::holds_alternative<PairTableSpec>(g.energy)) {
        const auto& table = std::get<PairTableSpec>(g.energy).pairs;
        const auto it = table.find(make_ion_pair(a.id, b.id));
        if (it == table.end())
            throw MissingForceFieldError("pair table has no entry for ions " +
                                         std::to_string(a.id) + "," + std::to_string(b.id));
        return it->second;
    }
    const double r = distance(a.pos, b.pos);
    const std::int64_t qq = a.charge * b.charge;
    if (std::holds_alternative<CoulombSpec>(g.energy)) {
        return ExtReal(static_cast<double>(qq) / r);
    }
    const auto& ff = std::get<BuckinghamCoulombSpec>(g.energy).table;
    const auto it = ff.find(make_species_pair(a.species, b.species));
    if (it == ff.end())
        throw MissingForceFieldError("no force-field entry for species pair " + a.species +
                                     "," + b.species);
    return ExtReal(buckingham_coulomb(it->second, r, qq));
}

}  // namespace

ExtReal pairwise_energy(const CrystalGraph& g, int i, int j) {
    return pair_energy_impl(g, g.ion(i), g.ion(j));
}

ExtReal total_energy(const CrystalGraph& g) {
    ExtReal sum(0.0);
    for (std::size_t i = 0; i < g.ions.size(); ++i) {
        for (std::size_t j = i + 1; j < g.ions.size(); ++j) {
            sum += pair_energy_impl(g, g.ions[i], g.ions[j]);
            if (sum.is_infinite()) return sum;
        }
    }
    return sum;
}

ExtReal remaining_energy(const CrystalGraph& g, const std::vector<int>& removed) {
    std::unordered_set<int> gone;
    for (int id : removed) {
        if (!g.find_ion(id)) throw UnknownIonError("unknown ion id in removal: " + std::to_string(id));
        if (!gone.insert(id).second)
            throw ValidationError("duplicate ion id in removal: " + std::to_string(id));
    }
    ExtReal sum(0.0);
    for (std::size_t i = 0; i < g.ions.size(); ++i) {
        if (gone.count(g.ions[i].id)) continue;
        for (std::size_t j = i + 1; j < g.ions.size(); ++j) {
            if (gone.count(g.ions[j].id)) continue;
            sum += pair_energy_impl(g, g.ions[i], g.ions[j]);
            if (sum.is_infinite()) return sum;
        }
    }
    return sum;
}

void validate(const CrystalGraph& g) {
    std::set<int> ids;
    for (const auto& ion : g.ions) {
        if (!ids.insert(ion.id).second)
            throw ValidationError("duplicate ion id " + std::to_string(ion.id));
        if (ion.charge == 0)
            throw ValidationError("ion " + std::to_string(ion.id) + " has zero charge");
        for (double x : ion.pos)
            if (!std::isfinite(x))
                throw ValidationError("ion " + std::to_string(ion.id) + " has non-finite position");
    }
    for (std::size_t i = 0; i < g.ions.size(); ++i) {
        for (std::size_t j = i + 1; j < g.ions.size(); ++j) {
            if (g.ions[i].pos == g.ions[j].pos)
                throw ValidationError("ions " + std::to_string(g.ions[i].id) + " and " +
                                      std::to_string(g.ions[j].id) + " share a position");
        }
    }
    if (g.total_charge() != 0)
        throw ValidationError("graph is not neutral: total charge " +
                              std::to_string(g.total_charge()));

    if (std::holds_alternative<BuckinghamCoulombSpec>(g.energy)) {
        const auto& ff = std::get<BuckinghamCoulombSpec>(g.energy).table;
        for (std::size_t i = 0; i < g.ions.size(); ++i) {
            for (std::size_t j = i + 1; j < g.ions.size(); ++j) {
                if (!ff.count(make_species_pair(g.ions[i].species, g.ions[j].species)))
                    throw ValidationError("no force-field entry for species pair " +
                                          g.ions[i].species + "," + g.ions[j].species);
            }
        }
    } else if (std::holds_alternative<PairTableSpec>(g.energy)) {
        const auto& table = std::get<PairTableSpec>(g.energy).pairs;
        for (std::size_t i = 0; i < g.ions.size(); ++i) {
            for (std::size_t j = i + 1; j < g.ions.size(); ++j) {
                if (!table.count(make_ion_pair(g.ions[i].id, g.ions[j].id)))
                    throw ValidationError("pair table misses ions " +
                                          std::to_string(g.ions[i].id) + "," +
                                          std::to_string(g.ions[j].id));
            }
        }
        for (const auto& [pair, e] : table) {
            if (pair.first >= pair.second)
                throw ValidationError("pair table key not normalized: " +
                                      std::to_string(pair.first) + "," +
                                      std::to_string(pair.second));
            if (!ids.count(pair.first) || !ids.count(pair.second))
                throw ValidationError("pair table references unknown ion");
        }
    }

    if (g.cell.has_value()) {
        const Vec3& cell = *g.cell;
        for (double l : cell)
            if (!(l > 0.0)) throw ValidationError("cell bounds must be positive");
        constexpr double eps = 1e-9;
        for (const auto& ion : g.ions) {
            for (int axis = 0; axis < 3; ++axis) {
                if (ion.pos[axis] < -eps || ion.pos[axis] > cell[axis] + eps)
                    throw ValidationError("ion " + std::to_string(ion.id) +
                                          " lies outside the cell bounds");
            }
        }
    }
}

}  // namespace kcr

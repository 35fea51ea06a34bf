#include <kcr/json_io.hpp>

#include <cmath>
#include <set>
#include <string>

namespace kcr::io {

namespace {

const nlohmann::json& require(const nlohmann::json& j, const char* key,
                              const std::string& context) {
    if (!j.is_object()) {
        throw JsonFormatError(context + " must be an object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw JsonFormatError(context + " is missing \"" + key + "\"");
    }
    return *it;
}

std::int64_t get_int(const nlohmann::json& j, const char* key, const std::string& context) {
    const auto& v = require(j, key, context);
    if (!v.is_number_integer()) {
        throw JsonFormatError(context + " key \"" + key + "\" must be an integer");
    }
    return v.get<std::int64_t>();
}

double get_double(const nlohmann::json& j, const char* key, const std::string& context) {
    const auto& v = require(j, key, context);
    if (!v.is_number()) {
        throw JsonFormatError(context + " key \"" + key + "\" must be a number");
    }
    return v.get<double>();
}

std::string get_string(const nlohmann::json& j, const char* key, const std::string& context) {
    const auto& v = require(j, key, context);
    if (!v.is_string()) {
        throw JsonFormatError(context + " key \"" + key + "\" must be a string");
    }
    return v.get<std::string>();
}

Vec3 vec3_from_json(const nlohmann::json& j, const std::string& context) {
    if (!j.is_array() || j.size() != 3) {
        throw JsonFormatError(context + " must be an array of 3 numbers");
    }
    Vec3 out{};
    for (int d = 0; d < 3; ++d) {
        if (!j[d].is_number()) {
            throw JsonFormatError(context + " must be an array of 3 numbers");
        }
        out[static_cast<std::size_t>(d)] = j[d].get<double>();
    }
    return out;
}

json energy_to_json(const EnergySpec& spec) {
    json out;
    if (std::holds_alternative<CoulombSpec>(spec)) {
        out["kind"] = "coulomb";
        return out;
    }
    if (const auto* bc = std::get_if<BuckinghamCoulombSpec>(&spec)) {
        out["kind"] = "buckingham_coulomb";
        json fields = json::array();
        for (const auto& [pair, f] : bc->table) {
            json entry;
            entry["s1"] = pair.first;
            entry["s2"] = pair.second;
            entry["A"] = f.a;
            entry["B"] = f.b;
            entry["C"] = f.c;
            if (f.log_a) {
                entry["logA"] = *f.log_a;
            }
            fields.push_back(std::move(entry));
        }
        out["fields"] = std::move(fields);
        return out;
    }
    const auto& pt = std::get<PairTableSpec>(spec);
    out["kind"] = "pair_table";
    json pairs = json::array();
    for (const auto& [pair, e] : pt.pairs) {
        json entry;
        entry["i"] = pair.first;
        entry["j"] = pair.second;
        entry["e"] = to_json(e);
        pairs.push_back(std::move(entry));
    }
    out["pairs"] = std::move(pairs);
    return out;
}

EnergySpec energy_from_json(const nlohmann::json& j) {
    const std::string kind = get_string(j, "kind", "energy");
    if (kind == "coulomb") {
        return CoulombSpec{};
    }
    if (kind == "buckingham_coulomb") {
        const auto& fields = require(j, "fields", "energy");
        if (!fields.is_array()) {
            throw JsonFormatError("energy key \"fields\" must be an array");
        }
        BuckinghamCoulombSpec spec;
        for (const auto& entry : fields) {
            ForceFieldEntry f;
            f.a = get_double(entry, "A", "force-field entry");
            f.b = get_double(entry, "B", "force-field entry");
            f.c = get_double(entry, "C", "force-field entry");
            if (entry.is_object() && entry.contains("logA")) {
                if (!entry["logA"].is_number()) {
                    throw JsonFormatError("force-field entry key \"logA\" must be a number");
                }
                f.log_a = entry["logA"].get<double>();
            }
            auto key = make_species_pair(get_string(entry, "s1", "force-field entry"),
                                         get_string(entry, "s2", "force-field entry"));
            if (!spec.table.emplace(std::move(key), f).second) {
                throw JsonFormatError("duplicate force-field species pair");
            }
        }
        return spec;
    }
    if (kind == "pair_table") {
        const auto& pairs = require(j, "pairs", "energy");
        if (!pairs.is_array()) {
            throw JsonFormatError("energy key \"pairs\" must be an array");
        }
        PairTableSpec spec;
        for (const auto& entry : pairs) {
            const auto i = get_int(entry, "i", "pair-table entry");
            const auto jj = get_int(entry, "j", "pair-table entry");
            if (i >= jj) {
                throw JsonFormatError("pair-table entries must satisfy i < j");
            }
            ExtReal e = ext_real_from_json(require(entry, "e", "pair-table entry"),
                                           "pair-table entry key \"e\"");
            auto key = make_ion_pair(static_cast<int>(i), static_cast<int>(jj));
            if (!spec.pairs.emplace(key, e).second) {
                throw JsonFormatError("duplicate pair-table entry");
            }
        }
        return spec;
    }
    throw JsonFormatError("unknown energy kind \"" + kind + "\"");
}

}  // namespace

json to_json(ExtReal e) {
    if (e.is_infinite()) {
        return json("inf");
    }
    return json(e.value());
}

ExtReal ext_real_from_json(const nlohmann::json& j, const std::string& context) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") {
            return ExtReal::infinity();
        }
        throw JsonFormatError(context + " must be a number or \"inf\"");
    }
    if (!j.is_number()) {
        throw JsonFormatError(context + " must be a number or \"inf\"");
    }
    return ExtReal(j.get<double>());
}

json to_json(const CrystalGraph& g) {
    json out;
    json ions = json::array();
    for (const auto& ion : g.ions) {
        json entry;
        entry["id"] = ion.id;
        entry["species"] = ion.species;
        entry["charge"] = ion.charge;
        entry["pos"] = {ion.pos[0], ion.pos[1], ion.pos[2]};
        if (!ion.label.empty()) {
            entry["label"] = ion.label;
        }
        ions.push_back(std::move(entry));
    }
    out["ions"] = std::move(ions);
    out["energy"] = energy_to_json(g.energy);
    if (g.cell) {
        out["cell"] = {(*g.cell)[0], (*g.cell)[1], (*g.cell)[2]};
    }
    return out;
}

CrystalGraph crystal_graph_from_json(const nlohmann::json& j) {
    CrystalGraph g;
    const auto& ions = require(j, "ions", "instance");
    if (!ions.is_array()) {
        throw JsonFormatError("instance key \"ions\" must be an array");
    }
    for (const auto& entry : ions) {
        Ion ion;
        ion.id = static_cast<int>(get_int(entry, "id", "ion"));
        ion.species = get_string(entry, "species", "ion");
        ion.charge = get_int(entry, "charge", "ion");
        ion.pos = vec3_from_json(require(entry, "pos", "ion"), "ion key \"pos\"");
        if (entry.contains("label")) {
            ion.label = get_string(entry, "label", "ion");
        }
        g.ions.push_back(std::move(ion));
    }
    g.energy = energy_from_json(require(j, "energy", "instance"));
    if (j.contains("cell")) {
        g.cell = vec3_from_json(j["cell"], "instance key \"cell\"");
    }
    return g;
}

json to_json(const RemovalInstance& inst) {
    json out = to_json(inst.graph);
    out["variant"] = variant_name(inst.variant);
    out["k"] = inst.k;
    out["goal"] = to_json(inst.goal);
    return out;
}

RemovalInstance removal_instance_from_json(const nlohmann::json& j) {
    RemovalInstance inst;
    inst.graph = crystal_graph_from_json(j);
    inst.variant = variant_from_name(get_string(j, "variant", "instance"));
    inst.k = get_int(j, "k", "instance");
    if (inst.k < 0) {
        throw JsonFormatError("instance key \"k\" must be nonnegative");
    }
    inst.goal = ext_real_from_json(require(j, "goal", "instance"), "instance key \"goal\"");
    return inst;
}

json to_json(const RemovalSolution& sol) {
    json out;
    out["removed"] = sol.removed;
    return out;
}

RemovalSolution removal_solution_from_json(const nlohmann::json& j) {
    const auto& removed = require(j, "removed", "solution");
    if (!removed.is_array()) {
        throw JsonFormatError("solution key \"removed\" must be an array");
    }
    RemovalSolution sol;
    std::set<int> seen;
    for (const auto& entry : removed) {
        if (!entry.is_number_integer()) {
            throw JsonFormatError("solution key \"removed\" must hold integers");
        }
        const int id = entry.get<int>();
        if (!seen.insert(id).second) {
            throw JsonFormatError("solution repeats ion id " + std::to_string(id));
        }
        sol.removed.push_back(id);
    }
    return sol;
}

json to_json(const Verdict& v) {
    json out;
    out["valid"] = v.valid;
    out["remaining"] = to_json(v.remaining);
    if (!v.reason.empty()) {
        out["reason"] = v.reason;
    }
    return out;
}

json to_json(const PennyRealization& p) {
    json out;
    out["radius"] = p.radius;
    json centers = json::array();
    for (const auto& c : p.centers) {
        centers.push_back({c[0], c[1]});
    }
    out["centers"] = std::move(centers);
    return out;
}

PennyRealization penny_realization_from_json(const nlohmann::json& j) {
    PennyRealization p;
    p.radius = get_double(j, "radius", "penny realization");
    const auto& centers = require(j, "centers", "penny realization");
    if (!centers.is_array()) {
        throw JsonFormatError("penny realization key \"centers\" must be an array");
    }
    for (const auto& entry : centers) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number()) {
            throw JsonFormatError("penny centers must be [x, y] pairs");
        }
        p.centers.push_back({entry[0].get<double>(), entry[1].get<double>()});
    }
    return p;
}

json to_json(const KnapsackInstance& k) {
    json out;
    json items = json::array();
    for (const auto& item : k.items) {
        json entry;
        entry["w"] = item.w;
        entry["p"] = item.p;
        items.push_back(std::move(entry));
    }
    out["items"] = std::move(items);
    out["capacity"] = k.capacity;
    out["goal"] = k.goal_value;
    return out;
}

KnapsackInstance knapsack_instance_from_json(const nlohmann::json& j) {
    KnapsackInstance inst;
    const auto& items = require(j, "items", "knapsack");
    if (!items.is_array()) {
        throw JsonFormatError("knapsack key \"items\" must be an array");
    }
    for (const auto& entry : items) {
        KnapsackItem item;
        item.w = get_int(entry, "w", "knapsack item");
        item.p = get_int(entry, "p", "knapsack item");
        inst.items.push_back(item);
    }
    inst.capacity = get_int(j, "capacity", "knapsack");
    inst.goal_value = get_int(j, "goal", "knapsack");
    return inst;
}

json to_json(const ReductionOutput& out) {
    json doc;
    doc["instance"] = to_json(out.instance);
    json decode = json::object();
    for (const auto& [id, source] : out.decode) {
        decode[std::to_string(id)] = source;
    }
    doc["decode"] = std::move(decode);
    doc["notes"] = out.notes;
    return doc;
}

json to_json(const PennyCertificate& cert) {
    json out;
    out["pass"] = cert.pass;
    json ineqs = json::array();
    for (const auto& r : cert.inequalities) {
        json entry;
        entry["id"] = r.id;
        entry["pass"] = r.pass;
        entry["worst_margin"] = r.worst_margin;
        entry["at_r"] = r.at_r;
        ineqs.push_back(std::move(entry));
    }
    out["inequalities"] = std::move(ineqs);
    out["term_a_margin"] = cert.term_a_margin;
    out["term_c_margin"] = cert.term_c_margin;
    out["r_lo"] = cert.r_lo;
    out["r_hi"] = cert.r_hi;
    out["grid_points"] = cert.grid_points;
    return out;
}

json to_json(const SimpleGraph& g) {
    json out;
    out["n"] = g.size();
    json edges = json::array();
    for (const auto& [pair, weight] : g.edges()) {
        if (weight) {
            edges.push_back({pair.first, pair.second, *weight});
        } else {
            edges.push_back({pair.first, pair.second});
        }
    }
    out["edges"] = std::move(edges);
    return out;
}

SimpleGraph simple_graph_from_json(const nlohmann::json& j) {
    const auto n = get_int(j, "n", "graph");
    if (n < 0) {
        throw JsonFormatError("graph key \"n\" must be nonnegative");
    }
    SimpleGraph g(static_cast<int>(n));
    const auto& edges = require(j, "edges", "graph");
    if (!edges.is_array()) {
        throw JsonFormatError("graph key \"edges\" must be an array");
    }
    for (const auto& entry : edges) {
        if (!entry.is_array() || entry.size() < 2 || entry.size() > 3 ||
            !entry[0].is_number_integer() || !entry[1].is_number_integer()) {
            throw JsonFormatError("graph edges must be [u, v] or [u, v, weight]");
        }
        const int u = entry[0].get<int>();
        const int v = entry[1].get<int>();
        if (entry.size() == 3) {
            if (!entry[2].is_number()) {
                throw JsonFormatError("graph edge weight must be a number");
            }
            g.add_edge(u, v, entry[2].get<double>());
        } else {
            g.add_edge(u, v);
        }
    }
    return g;
}

json to_json(const WeightedCliqueEmbedding& emb) {
    json out;
    out["graph"] = to_json(emb.graph);
    json vertices = json::array();
    for (const auto& [pos, neg] : emb.vertices) {
        vertices.push_back({pos, neg});
    }
    out["vertices"] = std::move(vertices);
    out["k"] = emb.k;
    if (std::isfinite(emb.goal_weight)) {
        out["goal_weight"] = emb.goal_weight;
    } else {
        out["goal_weight"] = "-inf";
    }
    out["notes"] = emb.notes;
    return out;
}

}  // namespace kcr::io

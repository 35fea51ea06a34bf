#include <kcr/cli.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <kcr/clique_reductions.hpp>
#include <kcr/generators.hpp>
#include <kcr/json_io.hpp>
#include <kcr/knapsack.hpp>
#include <kcr/penny.hpp>
#include <kcr/roundtrip.hpp>
#include <kcr/solvers.hpp>

namespace kcr::cli {

namespace {

using io::json;

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw JsonFormatError("cannot open " + path);
    }
    return nlohmann::json::parse(in);
}

void emit(const json& doc, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << doc.dump(2) << "\n";
        return;
    }
    std::ofstream file(out_path);
    if (!file) {
        throw JsonFormatError("cannot write " + out_path);
    }
    file << doc.dump(2) << "\n";
}

int fail(std::ostream& out, const std::string& message, int code = 1) {
    json doc;
    doc["error"] = message;
    out << doc.dump() << "\n";
    return code;
}

// Oracle cap, overridable via CHARGE_REMOVAL_MAX_IONS.
int oracle_cap() {
    const char* env = std::getenv("CHARGE_REMOVAL_MAX_IONS");
    if (env == nullptr || *env == '\0') {
        return kDefaultOracleCap;
    }
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v <= 0) {
        throw ValidationError("CHARGE_REMOVAL_MAX_IONS must be a positive integer");
    }
    return static_cast<int>(v);
}

std::int64_t require_int(const nlohmann::json& j, const char* key, const std::string& context) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer()) {
        throw JsonFormatError(context + " needs integer key \"" + key + "\"");
    }
    return j[key].get<std::int64_t>();
}

int reduce_clique_cmd(const std::string& in_path, const std::string& out_path,
                      std::ostream& out) {
    const nlohmann::json doc = load_json(in_path);
    const SimpleGraph g = io::simple_graph_from_json(doc);
    const int k = static_cast<int>(require_int(doc, "k", "clique input"));
    ReductionOutput red;
    if (doc.contains("charges")) {
        if (!doc["charges"].is_array()) {
            throw JsonFormatError("clique input key \"charges\" must be an array");
        }
        std::vector<std::int64_t> charges;
        for (const auto& entry : doc["charges"]) {
            if (!entry.is_number_integer()) {
                throw JsonFormatError("clique input key \"charges\" must hold integers");
            }
            charges.push_back(entry.get<std::int64_t>());
        }
        red = reduce_clique_arbitrary_charges(g, k, charges);
    } else {
        const std::int64_t c = doc.contains("c") ? require_int(doc, "c", "clique input") : 1;
        red = reduce_clique_to_kcr(g, k, c);
    }
    emit(io::to_json(red), out_path, out);
    return 0;
}

int reduce_maxwclique_cmd(const std::string& in_path, const std::string& out_path,
                          std::ostream& out) {
    const nlohmann::json doc = load_json(in_path);
    const SimpleGraph g = io::simple_graph_from_json(doc);
    const int k = static_cast<int>(require_int(doc, "k", "max-weight clique input"));
    if (!doc.contains("v") || !doc["v"].is_number()) {
        throw JsonFormatError("max-weight clique input needs numeric key \"v\"");
    }
    const double v = doc["v"].get<double>();
    const std::int64_t c =
        doc.contains("c") ? require_int(doc, "c", "max-weight clique input") : 1;
    emit(io::to_json(reduce_max_weight_clique_to_kcr(g, k, v, c)), out_path, out);
    return 0;
}

int reduce_penny_cmd(const std::string& in_path, const std::string& out_path,
                     std::ostream& out) {
    const nlohmann::json doc = load_json(in_path);
    const PennyRealization p = io::penny_realization_from_json(doc);
    const int k = static_cast<int>(require_int(doc, "k", "penny input"));
    emit(io::to_json(build_two_plane_instance(p, k)), out_path, out);
    return 0;
}

int reduce_knapsack_cmd(const std::string& in_path, const std::string& out_path,
                        std::ostream& out) {
    const nlohmann::json doc = load_json(in_path);
    const KnapsackInstance inst = io::knapsack_instance_from_json(doc);
    try {
        emit(io::to_json(reduce_knapsack(inst)), out_path, out);
    } catch (const TriviallySatisfiableError& e) {
        json err;
        err["error"] = e.what();
        err["packing"] = e.packing;
        out << err.dump() << "\n";
        return 1;
    }
    return 0;
}

int reduce_min_gadget_cmd(const std::string& in_path, const std::string& out_path,
                          std::ostream& out) {
    const nlohmann::json doc = load_json(in_path);
    if (!doc.is_object() || !doc.contains("s") || !doc["s"].is_array()) {
        throw JsonFormatError("minimality gadget input needs array key \"s\"");
    }
    std::vector<std::int64_t> s;
    for (const auto& entry : doc["s"]) {
        if (!entry.is_number_integer()) {
            throw JsonFormatError("minimality gadget key \"s\" must hold integers");
        }
        s.push_back(entry.get<std::int64_t>());
    }
    const std::int64_t k = require_int(doc, "k", "minimality gadget input");
    const MinimalityGadget gadget = build_minimality_gadget(s, k);
    json result;
    result["instance"] = io::to_json(gadget.instance);
    result["claimed_removed"] = gadget.claimed_removed;
    result["notes"] = gadget.notes;
    emit(result, out_path, out);
    return 0;
}

int solve_cmd(const std::string& in_path, std::ostream& out) {
    const RemovalInstance inst = io::removal_instance_from_json(load_json(in_path));
    validate(inst.graph);
    const auto res = brute_force_removal(inst, oracle_cap());
    json doc;
    doc["satisfiable"] = res.has_value();
    if (res) {
        doc["removed"] = res->removed;
        doc["energy"] = io::to_json(res->energy);
        doc["meets_goal"] = !res->energy.is_infinite() &&
                            (inst.goal.is_infinite() ||
                             res->energy.value() <= inst.goal.value() + kGoalEps);
    }
    out << doc.dump(2) << "\n";
    return 0;
}

int verify_cmd(const std::string& inst_path, const std::string& sol_path, std::ostream& out) {
    const RemovalInstance inst = io::removal_instance_from_json(load_json(inst_path));
    validate(inst.graph);
    const RemovalSolution sol = io::removal_solution_from_json(load_json(sol_path));
    const Verdict verdict = verify_solution(inst, sol);
    out << io::to_json(verdict).dump(2) << "\n";
    return verdict.valid ? 0 : 1;
}

int certify_penny_cmd(int n, std::optional<double> rmax, const std::string& format,
                      std::ostream& out) {
    const PennyParams params = synthesize_penny_params(n);
    const double r_max = rmax ? *rmax : 10.0 * n;
    const PennyCertificate cert = certify_inequalities(params, r_max);
    if (format == "tsv") {
        out << "inequality\tpass\tworst_margin\tat_r\n";
        for (const auto& r : cert.inequalities) {
            out << r.id << "\t" << (r.pass ? "true" : "false") << "\t" << r.worst_margin
                << "\t" << r.at_r << "\n";
        }
    } else {
        json doc;
        doc["n"] = n;
        doc["r_max"] = r_max;
        const json cert_doc = io::to_json(cert);
        for (const auto& [key, value] : cert_doc.items()) {
            doc[key] = value;
        }
        out << doc.dump(2) << "\n";
    }
    return cert.pass ? 0 : 1;
}

int roundtrip_cmd(const rt::Report& report, const std::string& format, std::ostream& out) {
    if (format == "tsv") {
        out << "index\tdetail\tsource_sat\treduced_sat\tagree\n";
        for (const auto& c : report.cases) {
            out << c.index << "\t" << c.detail << "\t" << (c.source_sat ? "true" : "false")
                << "\t" << (c.reduced_sat ? "true" : "false") << "\t"
                << (c.agree() ? "true" : "false") << "\n";
        }
    } else {
        json doc;
        doc["agree"] = report.agree_count();
        doc["disagree"] = report.disagree_count();
        out << doc.dump() << "\n";
    }
    return report.all_agree() ? 0 : 1;
}

int embed_wkc_cmd(const std::string& in_path, std::ostream& out) {
    const RemovalInstance inst = io::removal_instance_from_json(load_json(in_path));
    validate(inst.graph);
    out << io::to_json(embed_kcr_into_weighted_k_clique(inst)).dump(2) << "\n";
    return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"charge-removal reduction toolkit"};
    app.name("kcr");
    app.require_subcommand(1);

    std::string in_path, sol_path, out_path;
    int n = 0;
    std::optional<double> rmax;
    std::string format = "json";
    std::string oracle = "bf";
    std::uint64_t seed = 0;
    std::uint64_t count = 0;

    std::vector<std::pair<CLI::App*, std::function<int()>>> handlers;

    CLI::App* reduce = app.add_subcommand("reduce", "Build a removal instance from a source problem");
    reduce->require_subcommand(1);
    auto add_reduce = [&](const char* name, const char* desc, std::function<int()> handler) {
        CLI::App* sub = reduce->add_subcommand(name, desc);
        sub->add_option("input", in_path, "Input JSON file")->required();
        sub->add_option("-o,--output", out_path, "Write the reduction here instead of stdout");
        handlers.emplace_back(sub, std::move(handler));
    };
    add_reduce("clique", "k-clique, uniform or listed charge magnitudes",
               [&] { return reduce_clique_cmd(in_path, out_path, out); });
    add_reduce("maxwclique", "max-weight k-clique with weight target v",
               [&] { return reduce_maxwclique_cmd(in_path, out_path, out); });
    add_reduce("penny", "independent set on a penny realization",
               [&] { return reduce_penny_cmd(in_path, out_path, out); });
    add_reduce("knapsack", "0/1 knapsack value target",
               [&] { return reduce_knapsack_cmd(in_path, out_path, out); });
    add_reduce("min-gadget", "subset-sum minimality gadget",
               [&] { return reduce_min_gadget_cmd(in_path, out_path, out); });

    CLI::App* solve = app.add_subcommand("solve", "Run the exhaustive oracle on an instance");
    solve->add_option("instance", in_path, "Removal instance JSON")->required();
    solve->add_option("--oracle", oracle, "Oracle backend")
        ->check(CLI::IsMember({"bf"}))
        ->capture_default_str();
    handlers.emplace_back(solve, [&] { return solve_cmd(in_path, out); });

    CLI::App* verify = app.add_subcommand("verify", "Check a claimed solution");
    verify->add_option("instance", in_path, "Removal instance JSON")->required();
    verify->add_option("solution", sol_path, "Solution JSON")->required();
    handlers.emplace_back(verify, [&] { return verify_cmd(in_path, sol_path, out); });

    CLI::App* certify = app.add_subcommand("certify-penny", "Grid-certify the two-plane interaction bounds");
    certify->add_option("--n", n, "Penny count the parameters target")
        ->required()
        ->check(CLI::PositiveNumber);
    certify->add_option("--rmax", rmax, "Upper end of the certification grid (default 10n)");
    certify->add_option("--format", format, "json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}))
        ->capture_default_str();
    handlers.emplace_back(certify, [&] { return certify_penny_cmd(n, rmax, format, out); });

    CLI::App* roundtrip = app.add_subcommand("roundtrip", "Seeded source-oracle vs reduction-oracle agreement");
    roundtrip->require_subcommand(1);
    auto add_roundtrip = [&](const char* name, const char* desc, std::function<int()> handler) {
        CLI::App* sub = roundtrip->add_subcommand(name, desc);
        sub->add_option("--seed", seed, "PRNG seed")->required();
        sub->add_option("--count", count, "Instance count")->required();
        sub->add_option("--format", format, "json or tsv")
            ->check(CLI::IsMember({"json", "tsv"}))
            ->capture_default_str();
        handlers.emplace_back(sub, std::move(handler));
    };
    add_roundtrip("clique", "k-clique gadget agreement",
                  [&] { return roundtrip_cmd(rt::run_clique(seed, count), format, out); });
    add_roundtrip("penny", "penny independent-set agreement",
                  [&] { return roundtrip_cmd(rt::run_penny(seed, count), format, out); });
    add_roundtrip("knapsack", "knapsack gadget agreement",
                  [&] { return roundtrip_cmd(rt::run_knapsack(seed, count), format, out); });

    CLI::App* embed = app.add_subcommand("embed-wkc", "Embed a uniform-charge instance into max-weight k-clique");
    embed->add_option("instance", in_path, "Removal instance JSON")->required();
    handlers.emplace_back(embed, [&] { return embed_wkc_cmd(in_path, out); });

    try {
        std::reverse(args.begin(), args.end());  // CLI11's vector overload wants reversed argv
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        return fail(out, e.what());
    }

    try {
        for (const auto& [sub, handler] : handlers) {
            if (sub->parsed()) {
                return handler();
            }
        }
        return fail(out, "no subcommand", 2);
    } catch (const Error& e) {
        return fail(out, e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(out, e.what());
    } catch (const std::exception& e) {
        return fail(out, e.what(), 2);
    }
}

}  // namespace kcr::cli

#pragma once

#include <json.hpp>

#include <kcr/clique_reductions.hpp>
#include <kcr/knapsack.hpp>
#include <kcr/penny.hpp>
#include <kcr/verification.hpp>

// JSON document formats. Keys are case-sensitive; unordered pairs are stored
// with i < j; +infinity serializes as the string "inf". Parsing throws
// JsonFormatError with the offending key in the message.

namespace kcr::io {

using json = nlohmann::ordered_json;

json to_json(ExtReal e);
ExtReal ext_real_from_json(const nlohmann::json& j, const std::string& context);

json to_json(const CrystalGraph& g);
CrystalGraph crystal_graph_from_json(const nlohmann::json& j);

json to_json(const RemovalInstance& inst);
RemovalInstance removal_instance_from_json(const nlohmann::json& j);

json to_json(const RemovalSolution& sol);
RemovalSolution removal_solution_from_json(const nlohmann::json& j);

json to_json(const Verdict& v);

json to_json(const PennyRealization& p);
PennyRealization penny_realization_from_json(const nlohmann::json& j);

json to_json(const KnapsackInstance& k);
KnapsackInstance knapsack_instance_from_json(const nlohmann::json& j);

json to_json(const ReductionOutput& out);

json to_json(const PennyCertificate& cert);

json to_json(const SimpleGraph& g);
SimpleGraph simple_graph_from_json(const nlohmann::json& j);

json to_json(const WeightedCliqueEmbedding& emb);

}  // namespace kcr::io

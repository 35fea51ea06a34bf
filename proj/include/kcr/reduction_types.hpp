#pragma once

#include <map>

#include <json.hpp>

#include <kcr/verification.hpp>

namespace kcr {

// Common shape of every reduction: the built instance, a map from ion id back
// to the source object (vertex / penny / item index), and the derived
// constants worth surfacing (k', goal, dummy counts, ...).
struct ReductionOutput {
    RemovalInstance instance;
    std::map<int, int> decode;
    nlohmann::ordered_json notes;
};

}  // namespace kcr

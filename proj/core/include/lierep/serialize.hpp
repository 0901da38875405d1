#pragma once

#include <nlohmann/json.hpp>

#include "lierep/classification.hpp"
#include "lierep/exact.hpp"
#include "lierep/lemma_lab.hpp"
#include "lierep/multiplicity.hpp"
#include "lierep/root_system.hpp"
#include "lierep/weight.hpp"

// JSON forms of the library's values. Integers that fit in int64 are JSON
// numbers, larger ones decimal strings. Weights are integer arrays.

namespace lierep {

nlohmann::json integer_to_json(const Integer& value);
/// Accepts a number or a decimal string.
Integer integer_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Weight& w);
Weight weight_from_json(const nlohmann::json& j);

/// {type, rank, cartan, weyl_group_order, root_lengths2, positive_roots,
///  positive_roots_fundamental}
nlohmann::json to_json(const RootSystem& rs);

/// {dim, n1, n2, counts: {"1": n1, ...}}
nlohmann::json to_json(const WeightProfile& profile);
WeightProfile profile_from_json(const nlohmann::json& j);

/// {highest, entries: [[mu, m], ...], profile}
nlohmann::json to_json(const RootSystem& rs, const MultiplicityTable& table);

nlohmann::json to_json(const Restriction& restriction);

nlohmann::json to_json(const OmegaSearchResult& result);
nlohmann::json to_json(const ClassificationReport& report);
nlohmann::json to_json(const Table1Verification& verification);
nlohmann::json to_json(const Table2Verification& verification);
nlohmann::json to_json(const A2FamilyReport& report);

}  // namespace lierep

#pragma once

#include "domorder/dominance_order.hpp"
#include "domorder/lemmas.hpp"
#include "domorder/monotone.hpp"

#include <nlohmann/json.hpp>

namespace domorder {

/// {"d", "e", "witness_graph6", "member_index"}; partitions in display form.
[[nodiscard]] auto to_json(const CounterexamplePair & pair) -> nlohmann::json;

/// {"candidate", "verdict", "certificate": pair or null, "budget": {"max_sum", "order_cap"}}
/// plus "reduced_to" when the candidate was not reduced.
[[nodiscard]] auto to_json(const Classification & c) -> nlohmann::json;

[[nodiscard]] auto to_json(const ScreeningReport & r) -> nlohmann::json;
/// {"sequence", "count", "complete", "graphs": [graph6...]}
[[nodiscard]] auto to_json(const RealizationSet & s) -> nlohmann::json;
[[nodiscard]] auto to_json(const ConstructionReport & r) -> nlohmann::json;
[[nodiscard]] auto to_json(const FamilyReport & r) -> nlohmann::json;

} // namespace domorder

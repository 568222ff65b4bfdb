#pragma once

#include "domorder/graph.hpp"
#include "domorder/partition.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace domorder {

/// Pair constructions used to refute candidate sets, named after the graphs involved.
enum class Construction {
    cycle_union,      // 3 2^(3a+2b-3) 1 over 2^(3a+2b-1), realized by unions of cycles
    subdivided_cone,  // K1 v (aK2+bK1) over its two edge-subdivided relatives
    cone_matching,    // K1 v aK2 over (2a-1) 3 2^(2a-1)
    subdivided_k6,    // 6 5^4 4 2 over the subdivided K6
    cone_p3_matching, // K1 v (P3+pK2) over (2p+2) 4 2^(2p+2)
};

[[nodiscard]] auto construction_names() -> std::vector<std::string>;
/// ParseError on an unknown name.
[[nodiscard]] auto parse_construction(std::string_view name) -> Construction;
[[nodiscard]] auto to_string(Construction c) -> std::string;

struct ConstructionCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ConstructionReport {
    Construction construction = Construction::cycle_union;
    std::map<std::string, int> params;
    Partition upper;
    Partition lower;
    std::vector<ConstructionCheck> checks;

    [[nodiscard]] auto passed() const -> bool;
};

/// Rebuilds the pair (upper, lower) for the given parameters and checks it: upper strictly
/// majorizes lower, a realization of upper induces the target graph, and the realizations of
/// lower are exactly the expected catalog, none inducing the target. Failures are reported in
/// the checks. DomainError for missing or out-of-range parameters.
[[nodiscard]] auto verify_lemma_constructions(Construction which, const std::map<std::string, int> & params)
    -> ConstructionReport;

} // namespace domorder

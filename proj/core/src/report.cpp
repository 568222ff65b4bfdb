#include "domorder/report.hpp"

#include "domorder/graph6.hpp"

namespace domorder {

auto to_json(const CounterexamplePair & pair) -> nlohmann::json
{
    return {{"d", pair.upper.to_string()},
            {"e", pair.lower.to_string()},
            {"witness_graph6", to_graph6(pair.witness_graph)},
            {"member_index", pair.witness_member}};
}

auto to_json(const Classification & c) -> nlohmann::json
{
    nlohmann::json j = {{"candidate", c.candidate.name()},
                        {"verdict", to_string(c.verdict)},
                        {"certificate", c.certificate ? to_json(*c.certificate) : nlohmann::json(nullptr)},
                        {"budget", {{"max_sum", c.max_sum}, {"order_cap", c.order_cap}}}};
    if (c.reduced_to)
        j["reduced_to"] = c.reduced_to->name();
    return j;
}

auto to_json(const ScreeningReport & r) -> nlohmann::json
{
    return {{"has_delta_le1_min_edge_graph", r.has_delta_le1_min_edge_graph},
            {"complement_set_status",
             r.complement_set_status == ComplementStatus::applies ? "applies" : "not_applicable_dominating_vertex"},
            {"has_dominating_or_near_regular", r.has_dominating_or_near_regular},
            {"threshold_sufficiency", r.threshold_sufficiency},
            {"verdicts", r.verdicts}};
}

auto to_json(const RealizationSet & s) -> nlohmann::json
{
    nlohmann::json graphs = nlohmann::json::array();
    for (const auto & g : s.graphs)
        graphs.push_back(to_graph6(g));
    return {{"sequence", s.sequence.to_string()}, {"count", s.graphs.size()}, {"complete", s.complete}, {"graphs", graphs}};
}

auto to_json(const ConstructionReport & r) -> nlohmann::json
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto & c : r.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"construction", to_string(r.construction)},
            {"params", r.params},
            {"d", r.upper.to_string()},
            {"e", r.lower.to_string()},
            {"passed", r.passed()},
            {"checks", checks}};
}

auto to_json(const FamilyReport & r) -> nlohmann::json
{
    nlohmann::json mismatches = nlohmann::json::array();
    for (const auto & d : r.shortcut_mismatches)
        mismatches.push_back(d.to_string());
    return {{"t", r.t},
            {"variant", r.variant == FamilyVariant::order ? "order" : "edges"},
            {"members", r.set.size()},
            {"max_sum", r.max_sum},
            {"sequences_checked", r.sequences_checked},
            {"counterexample", r.counterexample ? to_json(*r.counterexample) : nlohmann::json(nullptr)},
            {"shortcut_mismatches", mismatches},
            {"passed", r.passed()}};
}

} // namespace domorder

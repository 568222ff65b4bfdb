#include "domorder/lemmas.hpp"

#include "domorder/canonical.hpp"
#include "domorder/error.hpp"
#include "domorder/graph_expr.hpp"
#include "domorder/graphic.hpp"
#include "domorder/induced.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace domorder {

namespace {

const std::pair<Construction, const char *> names[] = {
    {Construction::cycle_union, "cycle-union"},
    {Construction::subdivided_cone, "subdivided-cone"},
    {Construction::cone_matching, "cone-matching"},
    {Construction::subdivided_k6, "subdivided-k6"},
    {Construction::cone_p3_matching, "cone-p3-matching"},
};

auto param(const std::map<std::string, int> & params, const std::string & key, int lo, int hi) -> int
{
    auto it = params.find(key);
    if (it == params.end())
        throw DomainError("missing parameter " + key);
    if (it->second < lo || it->second > hi)
        throw DomainError("parameter " + key + "=" + std::to_string(it->second) + " outside " + std::to_string(lo) + ".." +
                          std::to_string(hi));
    return it->second;
}

auto matching(int k) -> SmallGraph { return disjoint_copies(complete_graph(2), k); }

auto plus(const SmallGraph & g, const SmallGraph & h) -> SmallGraph { return disjoint_union(g, h); }

/// Cone over g with the apex detached from g's vertex v.
auto cone_missing(const SmallGraph & g, int v) -> SmallGraph
{
    SmallGraph c = cone(g);
    c.remove_edge(0, v + 1);
    return c;
}

/// Star K1,k with center 0.
auto star(int k) -> SmallGraph { return cone(empty_graph(k)); }

struct Template {
    std::string label;
    SmallGraph graph;
};

class Checker {
public:
    explicit Checker(ConstructionReport & report) : report_(report) {}

    void check(std::string name, bool ok, std::string detail = {})
    {
        report_.checks.push_back({std::move(name), ok, std::move(detail)});
    }

    void majorization()
    {
        check("upper strictly majorizes lower", strictly_majorizes(report_.upper, report_.lower),
              report_.upper.to_string() + " over " + report_.lower.to_string());
    }

    /// `g` realizes the upper sequence and induces `target`.
    void upper_witness(const SmallGraph & g, const SmallGraph & target, const std::string & what)
    {
        const bool realizes = degree_sequence(g).positive() == report_.upper && ! has_isolated_vertex(g);
        check("upper realized by " + what, realizes, degree_sequence(g).to_string());
        check("upper realization induces " + describe(target), realizes && contains_induced(g, target));
    }

    /// The realizations of the lower sequence are exactly the templates, and avoid every target.
    auto lower_catalog(const std::vector<Template> & templates, const std::vector<SmallGraph> & targets) -> RealizationSet
    {
        RealizationLimits limits;
        limits.max_vertices = SmallGraph::max_vertices;
        auto set = realizations(report_.lower, std::nullopt, limits);
        std::set<SmallGraph> expected;
        std::string labels;
        for (const auto & t : templates) {
            expected.insert(canonical_form(t.graph));
            labels += (labels.empty() ? "" : ", ") + t.label;
        }
        const std::set<SmallGraph> found(set.graphs.begin(), set.graphs.end());
        check("lower realizations match catalog", found == expected,
              std::to_string(found.size()) + " realization(s), expected " + std::to_string(expected.size()) + " (" + labels +
                  ")");
        for (const auto & target : targets) {
            const bool free = std::none_of(set.graphs.begin(), set.graphs.end(),
                                           [&](const SmallGraph & g) { return contains_induced(g, target); });
            check("lower forcibly " + describe(target) + "-free", free);
        }
        return set;
    }

private:
    ConstructionReport & report_;
};

void cycle_union(ConstructionReport & r, Checker & c)
{
    const int a = param(r.params, "a", 0, 4);
    const int b = param(r.params, "b", 0, 4);
    if ((a == 0 && b < 3) || (a == 1 && b < 1))
        throw DomainError("cycle-union needs b >= 3 when a = 0 and b >= 1 when a = 1");
    const int n = 3 * a + 2 * b - 1;
    r.upper = partition_from_runs({{3, 1}, {2, n - 2}, {1, 1}});
    r.lower = partition_from_runs({{2, n}});
    c.majorization();

    SmallGraph g = path_graph(n);
    if (a == 0)
        g.add_edge(0, 2 * b - 3);
    else
        g.add_edge(0, 2);
    const SmallGraph target = plus(matching(a), empty_graph(b));
    c.upper_witness(g, target, "path plus chord");

    // every 2-regular graph is a union of cycles; one class per partition of n into parts >= 3
    std::vector<Template> templates;
    std::vector<int> parts;
    auto extend = [&](auto & self, int left, int largest) -> void {
        if (left == 0) {
            SmallGraph u(0);
            std::string label;
            for (int p : parts) {
                u = plus(u, cycle_graph(p));
                label += (label.empty() ? "C" : "+C") + std::to_string(p);
            }
            templates.push_back({label, u});
            return;
        }
        for (int p = std::min(left, largest); p >= 3; --p) {
            parts.push_back(p);
            self(self, left - p, p);
            parts.pop_back();
        }
    };
    extend(extend, n, n);
    c.lower_catalog(templates, {target});
}

void subdivided_cone(ConstructionReport & r, Checker & c)
{
    const int a = param(r.params, "a", 0, 4);
    const int b = param(r.params, "b", 1, 4);
    if (a == 0 && b < 3)
        throw DomainError("subdivided-cone needs b >= 3 when a = 0");
    r.upper = partition_from_runs({{b + 2 * a, 1}, {2, 2 * a}, {1, b}});
    r.lower = partition_from_runs({{b + 2 * a - 1, 1}, {2, 2 * a + 1}, {1, b - 1}});
    c.majorization();

    const SmallGraph target = plus(matching(a), empty_graph(b));
    c.upper_witness(cone(target), target, "K1 v (aK2+bK1)");

    const SmallGraph base = cone(plus(matching(a), empty_graph(b - 1)));
    std::vector<Template> templates;
    if (b >= 2)
        templates.push_back({"pendant edge subdivided", subdivide_edge(base, 0, 2 * a + 1)});
    if (a >= 1)
        templates.push_back({"triangle edge subdivided", subdivide_edge(base, 1, 2)});
    auto set = c.lower_catalog(templates, {target});
    c.check("lower has at most two realizations", set.graphs.size() <= 2);
}

void cone_matching(ConstructionReport & r, Checker & c)
{
    const int a = param(r.params, "a", 2, 4);
    r.upper = partition_from_runs({{2 * a, 1}, {2, 2 * a}});
    r.lower = partition_from_runs({{2 * a - 1, 1}, {3, 1}, {2, 2 * a - 1}});
    c.majorization();

    const SmallGraph target = matching(a);
    c.upper_witness(cone(target), target, "K1 v aK2");

    std::vector<Template> templates;
    // P4 interior vertex 1, star center 0, first P3 center 1
    templates.push_back({"R1", cone_missing(plus(path_graph(4), matching(a - 2)), 1)});
    templates.push_back({"R2", cone_missing(plus(star(3), matching(a - 2)), 0)});
    if (a >= 3)
        templates.push_back({"R3", cone_missing(plus(disjoint_copies(path_graph(3), 2), matching(a - 3)), 1)});
    c.lower_catalog(templates, {target});
}

void subdivided_k6(ConstructionReport & r, Checker & c)
{
    r.upper = partition_from_runs({{6, 1}, {5, 4}, {4, 1}, {2, 1}});
    r.lower = partition_from_runs({{5, 6}, {2, 1}});
    c.majorization();

    const SmallGraph p4 = path_graph(4);
    const Partition inner = partition_from_runs({{4, 4}, {3, 1}, {1, 1}});
    const auto inner_set = realizations(inner);
    c.check("4^4 3 1 has a unique realization", inner_set.graphs.size() == 1,
            std::to_string(inner_set.graphs.size()) + " realization(s)");
    if (inner_set.graphs.empty())
        return;
    const SmallGraph & h = inner_set.graphs.front();
    c.check("4^4 3 1 realization induces P4", contains_induced(h, p4));
    c.upper_witness(cone(h), p4, "cone over the 4^4 3 1 realization");

    c.lower_catalog({{"subdivided K6", subdivide_edge(complete_graph(6), 0, 1)}}, {p4});
}

void cone_p3_matching(ConstructionReport & r, Checker & c)
{
    const int p = param(r.params, "p", 1, 4);
    r.upper = partition_from_runs({{2 * p + 3, 1}, {3, 1}, {2, 2 * p + 2}});
    r.lower = partition_from_runs({{2 * p + 2, 1}, {4, 1}, {2, 2 * p + 2}});
    c.majorization();

    const SmallGraph target = plus(path_graph(3), matching(p));
    c.upper_witness(cone(target), target, "K1 v (P3+pK2)");

    // the tree T: path x-y-z with two extra leaves on x, x = 0, y = 1
    SmallGraph tree(5, {{0, 1}, {1, 2}, {0, 3}, {0, 4}});
    std::vector<Template> templates;
    templates.push_back({"star K1,4 center detached", cone_missing(plus(star(4), matching(p - 1)), 0)});
    templates.push_back({"tree T middle detached", cone_missing(plus(tree, matching(p - 1)), 1)});
    if (p >= 2)
        templates.push_back({"P3 center detached beside K1,3",
                             cone_missing(plus(plus(path_graph(3), star(3)), matching(p - 2)), 1)});
    c.lower_catalog(templates, {target});
}

} // namespace

auto construction_names() -> std::vector<std::string>
{
    std::vector<std::string> out;
    for (const auto & [c, n] : names)
        out.emplace_back(n);
    return out;
}

auto parse_construction(std::string_view name) -> Construction
{
    for (const auto & [c, n] : names)
        if (name == n)
            return c;
    throw ParseError("unknown construction '" + std::string(name) + "'");
}

auto to_string(Construction c) -> std::string
{
    for (const auto & [k, n] : names)
        if (k == c)
            return n;
    return "?";
}

auto ConstructionReport::passed() const -> bool
{
    return ! checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto & c) { return c.passed; });
}

auto verify_lemma_constructions(Construction which, const std::map<std::string, int> & params) -> ConstructionReport
{
    ConstructionReport report;
    report.construction = which;
    report.params = params;
    Checker checker(report);
    switch (which) {
    case Construction::cycle_union: cycle_union(report, checker); break;
    case Construction::subdivided_cone: subdivided_cone(report, checker); break;
    case Construction::cone_matching: cone_matching(report, checker); break;
    case Construction::subdivided_k6: subdivided_k6(report, checker); break;
    case Construction::cone_p3_matching: cone_p3_matching(report, checker); break;
    }
    return report;
}

} // namespace domorder

#include "domorder/canonical.hpp"
#include "domorder/dominance_order.hpp"
#include "domorder/error.hpp"
#include "domorder/forbidden_set.hpp"
#include "domorder/graph_expr.hpp"
#include "domorder/graphic.hpp"
#include "domorder/induced.hpp"
#include "fixture/oracles.hpp"

#include "doctest.h"

#include <set>

using namespace domorder;

namespace {

auto terms_of(const Partition & p) -> fixture::Terms { return {p.terms().begin(), p.terms().end()}; }

} // namespace

TEST_SUITE("graphic") {

TEST_CASE("Erdos-Gallai examples")
{
    CHECK(is_graphic(Partition{2, 2, 2, 2, 2}));
    CHECK_FALSE(is_graphic(Partition{3, 1}));
    CHECK(is_graphic(DegreeSequence({2, 1, 1, 0})));
    CHECK_FALSE(is_graphic(std::vector<int>{1, 1, -1, 1}));
    CHECK_FALSE(is_graphic(Partition{1, 1, 1}));
    CHECK(is_graphic(std::vector<int>{}));
}

TEST_CASE("agrees with realization search")
{
    for (int n = 1; n <= 16; ++n)
        for (const auto & t : fixture::all_partitions(n))
            REQUIRE(is_graphic(Partition(t)) == fixture::has_realization(t));
}

TEST_CASE("threshold examples")
{
    CHECK(is_threshold({4, 3, 2, 2, 1}));
    CHECK_FALSE(is_threshold({2, 2, 2, 2}));
    CHECK(is_threshold({1, 1}));
    CHECK_THROWS_AS((void)is_threshold({3, 1}), DomainError);
}

TEST_CASE("threshold sequences are the maxima and have one threshold realization")
{
    const auto threshold_set = parse_forbidden_set("2K2, C4, P4");
    for (int total = 2; total <= 16; total += 2) {
        const auto order = build_dominance_order(total, true);
        for (std::size_t i = 0; i < order.size(); ++i) {
            const auto & d = order.nodes()[i];
            const bool maximal = order.upper_covers(static_cast<int>(i)).empty();
            REQUIRE(is_threshold(d) == maximal);
            const auto set = realizations(d, std::nullopt, {SmallGraph::max_vertices, 20'000'000});
            const bool forcibly_threshold = std::all_of(set.graphs.begin(), set.graphs.end(),
                                                        [&](const SmallGraph & g) { return is_f_free(g, threshold_set); });
            REQUIRE(forcibly_threshold == is_threshold(d));
            if (is_threshold(d))
                REQUIRE(set.graphs.size() == 1);
        }
    }
}

TEST_CASE("realization examples")
{
    auto c5 = realizations({2, 2, 2, 2, 2});
    REQUIRE(c5.graphs.size() == 1);
    CHECK(isomorphic(c5.graphs[0], cycle_graph(5)));

    auto k6 = realizations({5, 5, 5, 5, 5, 5, 2});
    REQUIRE(k6.graphs.size() == 1);
    CHECK(isomorphic(k6.graphs[0], subdivide_edge(complete_graph(6), 0, 1)));

    CHECK(realizations({3, 2, 2, 2, 1}).graphs.size() <= 2);

    auto k3 = realizations({2, 2, 2});
    REQUIRE(k3.graphs.size() == 1);
    CHECK(isomorphic(k3.graphs[0], complete_graph(3)));

    CHECK(realizations({4, 4, 4, 4, 3, 1}).graphs.size() == 1);
    CHECK(realizations({1, 1, 1, 1}).graphs.size() == 1);
}

TEST_CASE("realizations match the labelled oracle")
{
    for (int total = 2; total <= 10; total += 2)
        for (const auto & t : fixture::all_partitions(total)) {
            if (! fixture::has_realization(t))
                continue;
            const auto ours = realizations(Partition(t));
            const auto theirs = fixture::iso_classes(fixture::labelled_realizations(t));
            REQUIRE(ours.complete);
            REQUIRE(ours.graphs.size() == theirs.size());
            for (const auto & g : ours.graphs) {
                REQUIRE(fixture::degrees(g) == t);
                REQUIRE(std::any_of(theirs.begin(), theirs.end(), [&](const auto & h) { return fixture::isomorphic(g, h); }));
            }
        }
}

TEST_CASE("labelled walk reaches every class")
{
    for (const Partition d : {Partition{3, 3, 2, 2, 2}, Partition{3, 2, 2, 2, 2, 1}, Partition{4, 3, 3, 2, 2, 2}}) {
        std::set<SmallGraph> seen;
        const bool done = for_each_labeled_realization(d, [&](const SmallGraph & g) {
            seen.insert(canonical_form(g));
            return true;
        });
        CHECK(done);
        CHECK(seen.size() == realizations(d).graphs.size());
    }
}

TEST_CASE("limits")
{
    auto some = realizations({2, 2, 2, 2, 2, 2, 2, 2, 2}, 2);
    CHECK_FALSE(some.complete);
    CHECK(realizations({2, 2, 2, 2, 2, 2, 2, 2, 2}).graphs.size() == 4);
    CHECK_THROWS_AS((void)realizations(Partition(std::vector<int>(14, 1))), ResourceError);
    CHECK_THROWS_AS((void)realizations(Partition(std::vector<int>(8, 3)), std::nullopt, {12, 2}), ResourceError);
    CHECK_THROWS_AS((void)realizations({3, 1}), DomainError);
}

TEST_CASE("forcibly free examples")
{
    CHECK(forcibly_f_free({2, 2, 2, 2, 2}, parse_forbidden_set("2K2, C4")));
    CHECK_FALSE(forcibly_f_free({3, 2, 2, 2, 1}, parse_forbidden_set("C4")));
    CHECK(forcibly_f_free({1, 1}, parse_forbidden_set("K3")));
    CHECK(potentially_f({3, 2, 2, 2, 1}, parse_forbidden_set("C4")));
    const auto f = parse_forbidden_set("K3, C4");
    auto w = find_potential_witness({3, 2, 2, 2, 1}, f);
    REQUIRE(w);
    CHECK(contains_induced(w->graph, f[w->member]));
    CHECK(degree_sequence(w->graph).positive() == Partition{3, 2, 2, 2, 1});
}

TEST_CASE("forcibly free agrees with the oracle")
{
    const std::vector<std::string> sets = {"2K2, C4", "P4", "K3", "K2+K1, P3", "claw, diamond", "C4, C5"};
    for (const auto & text : sets) {
        const auto f = parse_forbidden_set(text);
        for (int total = 2; total <= 10; total += 2)
            for (const auto & t : fixture::all_partitions(total)) {
                if (! fixture::has_realization(t))
                    continue;
                bool free = true;
                for (const auto & g : fixture::labelled_realizations(t))
                    for (const auto & m : f.members())
                        free = free && ! fixture::contains_induced(g, m);
                REQUIRE(forcibly_f_free(Partition(t), f) == free);
            }
    }
}

} // TEST_SUITE

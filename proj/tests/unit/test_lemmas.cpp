#include "domorder/error.hpp"
#include "domorder/lemmas.hpp"
#include "domorder/report.hpp"

#include "doctest.h"

using namespace domorder;

TEST_SUITE("constructions") {

TEST_CASE("names")
{
    CHECK(construction_names().size() == 5);
    for (const auto & name : construction_names())
        CHECK(to_string(parse_construction(name)) == name);
    CHECK_THROWS_AS((void)parse_construction("lemma"), ParseError);
}

TEST_CASE("cycle unions")
{
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            auto r = verify_lemma_constructions(Construction::cycle_union, {{"a", a}, {"b", b}});
            INFO(to_json(r).dump());
            CHECK(r.passed());
        }
    CHECK(verify_lemma_constructions(Construction::cycle_union, {{"a", 0}, {"b", 3}}).passed());
    CHECK_THROWS_AS((void)verify_lemma_constructions(Construction::cycle_union, {{"a", 0}, {"b", 2}}), DomainError);
}

TEST_CASE("subdivided cones have at most two realizations")
{
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            auto r = verify_lemma_constructions(Construction::subdivided_cone, {{"a", a}, {"b", b}});
            INFO(to_json(r).dump());
            CHECK(r.passed());
        }
    auto first = verify_lemma_constructions(Construction::subdivided_cone, {{"a", 1}, {"b", 2}});
    CHECK(first.upper == Partition{4, 2, 2, 1, 1});
    CHECK(first.lower == Partition{3, 2, 2, 2, 1});
}

TEST_CASE("cone over a matching")
{
    for (int a = 2; a <= 4; ++a) {
        auto r = verify_lemma_constructions(Construction::cone_matching, {{"a", a}});
        INFO(to_json(r).dump());
        CHECK(r.passed());
    }
    CHECK_THROWS_AS((void)verify_lemma_constructions(Construction::cone_matching, {{"a", 1}}), DomainError);
    CHECK_THROWS_AS((void)verify_lemma_constructions(Construction::cone_matching, {}), DomainError);
}

TEST_CASE("subdivided K6")
{
    auto r = verify_lemma_constructions(Construction::subdivided_k6, {});
    INFO(to_json(r).dump());
    CHECK(r.passed());
    CHECK(r.upper == Partition{6, 5, 5, 5, 5, 4, 2});
    CHECK(r.lower == Partition{5, 5, 5, 5, 5, 5, 2});
}

TEST_CASE("cone over P3 and a matching")
{
    for (int p = 1; p <= 3; ++p) {
        auto r = verify_lemma_constructions(Construction::cone_p3_matching, {{"p", p}});
        INFO(to_json(r).dump());
        CHECK(r.passed());
    }
}

} // TEST_SUITE

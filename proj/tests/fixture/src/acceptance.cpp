#include "fixture/acceptance.hpp"

#include "fixture/oracles.hpp"

#include "domorder/error.hpp"
#include "domorder/graph_expr.hpp"
#include "domorder/graphic.hpp"
#include "domorder/lemmas.hpp"
#include "domorder/partition.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <sstream>

namespace fixture {

using namespace domorder;

auto frozen_singleton_refuting_sums() -> const std::map<std::string, int> &
{
    static const std::map<std::string, int> sums = {
        {"{3K1}", 6},    {"{K2+K1}", 8}, {"{P3}", 4},   {"{K3}", 6},      {"{4K1}", 8},
        {"{K2+2K1}", 8}, {"{P3+K1}", 6}, {"{2K2}", 10}, {"{K3+K1}", 8},   {"{P4}", 6},
        {"{claw}", 6},   {"{C4}", 8},    {"{paw}", 8},  {"{diamond}", 10}, {"{K4}", 12},
    };
    return sums;
}

auto contains_known_monotone(const ForbiddenSet & candidate) -> bool
{
    static const std::vector<ForbiddenSet> known = [] {
        std::vector<ForbiddenSet> out;
        for (const char * s : {"K1", "2K1", "K2", "K2+K1, P3", "K2+K1, C4", "2K2, P3", "2K2, P4, diamond",
                               "K2+2K1, P4, C4", "2K2, P4, C4", "2K2, C4, C5"})
            out.push_back(parse_forbidden_set(s));
        return out;
    }();
    const auto codes = candidate.codes();
    return std::any_of(known.begin(), known.end(), [&](const ForbiddenSet & k) {
        return std::all_of(k.codes().begin(), k.codes().end(),
                           [&](const CanonicalCode & c) { return std::find(codes.begin(), codes.end(), c) != codes.end(); });
    });
}

auto validate_certificate(const CounterexamplePair & pair, const ForbiddenSet & set) -> std::string
{
    const Terms d(pair.upper.terms().begin(), pair.upper.terms().end());
    const Terms e(pair.lower.terms().begin(), pair.lower.terms().end());
    if (d == e || ! majorizes_padded(d, e))
        return "upper does not strictly majorize lower";
    if (pair.witness_member >= set.size())
        return "member index out of range";
    if (degrees(pair.witness_graph) != d)
        return "witness does not realize upper";
    if (! fixture::contains_induced(pair.witness_graph, set[pair.witness_member]))
        return "witness does not induce the member";
    for (const auto & g : realizations(pair.lower, std::nullopt, search_realization_limits()).graphs)
        for (const auto & m : set.members())
            if (fixture::contains_induced(g, m))
                return "lower has a realization inducing " + describe(m);
    return {};
}

namespace {

struct State {
    const AcceptanceOptions & options;
    SearchContext context;
    std::optional<std::vector<Classification>> singles, pairs;

    auto classified(int size) -> const std::vector<Classification> &
    {
        auto & slot = size == 1 ? singles : pairs;
        if (! slot) {
            ClassifyOptions o;
            o.threads = options.threads;
            o.context = &context;
            slot = classify_sets(4, size, 16, o);
        }
        return *slot;
    }
};

auto names_of(const std::vector<Classification> & cs, bool refuted) -> std::set<std::string>
{
    std::set<std::string> out;
    for (const auto & c : cs)
        if ((c.verdict == Verdict::refuted) == refuted)
            out.insert(c.candidate.name());
    return out;
}

auto join(const std::set<std::string> & items) -> std::string
{
    std::string out;
    for (const auto & s : items)
        out += (out.empty() ? "" : " ") + s;
    return out;
}

struct Outcome {
    bool passed = true;
    std::string detail;
    bool informational = false;

    void fail(const std::string & why)
    {
        if (passed)
            detail = why;
        passed = false;
    }
};

auto c1(State &) -> Outcome
{
    Outcome o;
    const Partition d{3, 2, 2, 1}, e{2, 2, 2, 2};
    if (! majorizes(d, e))
        o.fail("3221 does not majorize 2222");
    auto down = down_neighbors(d);
    if (std::find(down.begin(), down.end(), e) == down.end())
        o.fail("2222 missing from the down-neighbors of 3221");
    if (o.passed)
        o.detail = "3221 majorizes 2222, one box move apart";
    return o;
}

auto c2(State &) -> Outcome
{
    Outcome o;
    long pairs = 0;
    for (int s = 1; s <= 16; ++s) {
        const auto parts = all_partitions(s);
        for (const auto & d : parts) {
            const auto reach = reachable_by_moves(d);
            for (const auto & e : parts) {
                ++pairs;
                const bool lib = majorizes(Partition(d), Partition(e));
                if (lib != (reach.count(e) > 0)) {
                    o.fail("disagreement at " + Partition(d).to_string() + " vs " + Partition(e).to_string());
                    return o;
                }
            }
        }
    }
    o.detail = std::to_string(pairs) + " pairs with sums 1..16 agree";
    return o;
}

auto c3(State &) -> Outcome
{
    Outcome o;
    int sequences = 0, graphs = 0;
    for (int total = 2; total <= 10; total += 2) {
        for (const auto & terms : all_partitions(total)) {
            const Partition d(terms);
            const bool graphic = has_realization(terms);
            if (graphic != is_graphic(d)) {
                o.fail("graphicality disagrees on " + d.to_string());
                return o;
            }
            if (! graphic)
                continue;
            ++sequences;
            const auto lib = realizations(d).graphs;
            const auto ref = iso_classes(labelled_realizations(terms));
            graphs += static_cast<int>(ref.size());
            bool ok = lib.size() == ref.size();
            for (const auto & r : ref)
                ok = ok && std::count_if(lib.begin(), lib.end(), [&](const SmallGraph & g) { return fixture::isomorphic(g, r); }) == 1;
            if (! ok) {
                o.fail(d.to_string() + ": " + std::to_string(lib.size()) + " realizations, oracle " + std::to_string(ref.size()));
                return o;
            }
        }
    }
    o.detail = std::to_string(sequences) + " graphic sequences, " + std::to_string(graphs) + " realizations match";
    return o;
}

auto c4(State &) -> Outcome
{
    Outcome o;
    auto unique_as = [&](const char * seq, const std::optional<SmallGraph> & expected) {
        const auto set = realizations(parse_partition(seq));
        if (set.graphs.size() != 1)
            o.fail(std::string(seq) + " has " + std::to_string(set.graphs.size()) + " realizations");
        else if (expected && ! fixture::isomorphic(set.graphs.front(), *expected))
            o.fail(std::string(seq) + " realization is " + describe(set.graphs.front()));
        return set;
    };
    unique_as("2^5", cycle_graph(5));
    unique_as("5^6 2^1", subdivide_edge(complete_graph(6), 0, 1));
    const auto inner = unique_as("4^4 3^1 1^1", std::nullopt);
    if (o.passed) {
        const auto & h = inner.graphs.front();
        if (! fixture::contains_induced(h, path_graph(4)))
            o.fail("4^4 3 1 realization does not induce P4");
        if (degrees(cone(h)) != Terms{6, 5, 5, 5, 5, 4, 2})
            o.fail("cone over the 4^4 3 1 realization does not realize 6 5^4 4 2");
    }
    if (o.passed)
        o.detail = "2^5 -> C5, 5^6 2 -> subdivided K6, 4^4 3 1 -> " + describe(inner.graphs.front());
    return o;
}

auto c5(State & st) -> Outcome
{
    Outcome o;
    struct Case {
        const char * set;
        int max_sum;
        const char * d;
        const char * e;
    };
    for (const Case & c : {Case{"2K2, C4", 10, "32221", "2^5"}, Case{"P3, K3", 8, "211", "1111"}}) {
        const auto set = parse_forbidden_set(c.set);
        const auto pair = search_counterexample(set, c.max_sum, st.context);
        if (! pair) {
            o.fail(std::string("no counterexample for {") + c.set + "}");
            continue;
        }
        if (pair->upper != parse_partition(c.d) || pair->lower != parse_partition(c.e))
            o.fail(std::string("{") + c.set + "} gave (" + pair->upper.to_string() + ", " + pair->lower.to_string() + ")");
        if (auto why = validate_certificate(*pair, set); ! why.empty())
            o.fail(why);
    }
    if (o.passed)
        o.detail = "(32221, 2^5) and (211, 1111) found and re-validated";
    return o;
}

auto check_certificates(const std::vector<Classification> & cs, Outcome & o) -> int
{
    int checked = 0;
    for (const auto & c : cs) {
        if (! c.certificate)
            continue;
        ++checked;
        if (auto why = validate_certificate(*c.certificate, c.candidate); ! why.empty())
            o.fail(c.candidate.name() + ": " + why);
    }
    return checked;
}

auto c6(State & st) -> Outcome
{
    Outcome o;
    const auto & cs = st.classified(1);
    const std::set<std::string> expected = {"{K1}", "{2K1}", "{K2}"};
    const auto survivors = names_of(cs, false);
    if (survivors != expected)
        o.fail("unrefuted: " + join(survivors));
    for (const auto & c : cs)
        if (c.verdict != Verdict::refuted && ! c.screening.threshold_sufficiency)
            o.fail(c.candidate.name() + " lacks the threshold certificate");
    const auto & frozen = frozen_singleton_refuting_sums();
    for (const auto & c : cs) {
        if (! c.certificate)
            continue;
        auto it = frozen.find(c.candidate.name());
        if (it == frozen.end())
            o.fail("no frozen sum for " + c.candidate.name());
        else if (c.certificate->upper.sum() != it->second)
            o.fail(c.candidate.name() + " refuted at sum " + std::to_string(c.certificate->upper.sum()) + ", frozen " +
                   std::to_string(it->second));
    }
    const int checked = check_certificates(cs, o);
    if (o.passed)
        o.detail = std::to_string(cs.size()) + " singletons; unrefuted " + join(survivors) + " (all PROVEN); " +
                   std::to_string(checked) + " certificates match frozen sums";
    return o;
}

auto c7(State & st) -> Outcome
{
    Outcome o;
    const auto & cs = st.classified(2);
    int unrefuted = 0, largest = 0;
    for (const auto & c : cs) {
        const bool expected = contains_known_monotone(c.candidate);
        if (expected == (c.verdict == Verdict::refuted))
            o.fail(c.candidate.name() + " is " + to_string(c.verdict));
        unrefuted += c.verdict != Verdict::refuted;
        if (c.certificate)
            largest = std::max(largest, c.certificate->upper.sum());
    }
    if (largest != frozen_pair_refuting_sum_max)
        o.fail("largest minimal refuting sum " + std::to_string(largest) + ", frozen " +
               std::to_string(frozen_pair_refuting_sum_max));
    const int checked = check_certificates(cs, o);
    if (o.passed)
        o.detail = std::to_string(cs.size()) + " pairs, " + std::to_string(unrefuted) +
                   " unrefuted (exactly those containing K1, 2K1, K2 or one of the three pairs); " + std::to_string(checked) +
                   " certificates re-validated, all by sum " + std::to_string(largest);
    return o;
}

auto c8(State & st) -> Outcome
{
    Outcome o;
    for (const char * s : {"2K2, P4, diamond", "K2+2K1, P4, C4", "2K2, P4, C4", "2K2, C4, C5"})
        if (auto pair = search_counterexample(parse_forbidden_set(s), 14, st.context))
            o.fail(std::string("{") + s + "} refuted by (" + pair->upper.to_string() + ", " + pair->lower.to_string() + ")");
    if (o.passed)
        o.detail = "no counterexample up to sum 14 for the four triples";
    return o;
}

auto triple_sweep(State & st, int order_cap, int max_sum) -> Outcome
{
    Outcome o;
    o.informational = true;
    ClassifyOptions opt;
    opt.threads = st.options.threads;
    opt.context = &st.context;
    const auto cs = classify_sets(order_cap, 3, max_sum, opt);
    int unrefuted = 0, largest = 0;
    std::vector<std::string> wrong;
    for (const auto & c : cs) {
        const bool expected = contains_known_monotone(c.candidate);
        unrefuted += c.verdict != Verdict::refuted;
        if (expected == (c.verdict == Verdict::refuted))
            wrong.push_back(c.candidate.name() + " " + to_string(c.verdict));
        if (c.certificate)
            largest = std::max(largest, c.certificate->upper.sum());
    }
    o.passed = wrong.empty();
    std::ostringstream out;
    out << "order cap " << order_cap << ", max sum " << max_sum << ": " << cs.size() << " triples, " << unrefuted
        << " unrefuted, " << wrong.size() << " disagree with the classification, refutations by sum " << largest;
    if (! wrong.empty())
        out << "; first: " << wrong.front();
    o.detail = out.str();
    return o;
}

auto c9(State &) -> Outcome
{
    Outcome o;
    int reports = 0;
    auto run = [&](Construction which, std::map<std::string, int> params) {
        ++reports;
        const auto r = verify_lemma_constructions(which, params);
        if (! r.passed()) {
            std::string where = to_string(which);
            for (const auto & [k, v] : params)
                where += " " + k + "=" + std::to_string(v);
            for (const auto & c : r.checks)
                if (! c.passed)
                    o.fail(where + ": " + c.name + " " + c.detail);
        }
    };
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            run(Construction::subdivided_cone, {{"a", a}, {"b", b}});
    for (int a = 2; a <= 4; ++a)
        run(Construction::cone_matching, {{"a", a}});
    for (int p = 1; p <= 3; ++p)
        run(Construction::cone_p3_matching, {{"p", p}});
    run(Construction::subdivided_k6, {});
    for (auto [a, b] : {std::pair{0, 3}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {3, 0}})
        run(Construction::cycle_union, {{"a", a}, {"b", b}});
    if (o.passed)
        o.detail = std::to_string(reports) + " construction reports pass";
    return o;
}

auto c10(State & st) -> Outcome
{
    Outcome o;
    std::size_t sequences = 0;
    std::vector<std::string> problems;
    for (int t = 2; t <= 4; ++t) {
        for (auto variant : {FamilyVariant::order, FamilyVariant::edges}) {
            const auto r = verify_infinite_family(t, variant, 12, st.context);
            sequences += r.sequences_checked;
            const std::string tag = (variant == FamilyVariant::order ? "order " : "edges ") + std::to_string(t);
            if (r.counterexample) {
                const auto why = validate_certificate(*r.counterexample, r.set);
                problems.push_back(tag + " refuted by (" + r.counterexample->upper.to_string() + ", " +
                                   r.counterexample->lower.to_string() + ")" +
                                   (why.empty() ? ", oracle-confirmed" : ", oracle rejects: " + why));
            }
            if (! r.shortcut_mismatches.empty()) {
                std::string seqs;
                for (const auto & d : r.shortcut_mismatches)
                    seqs += (seqs.empty() ? "" : " ") + d.to_string();
                problems.push_back(tag + " shortcut fails at " + seqs);
            }
        }
    }
    for (const auto & p : problems)
        o.fail(p);
    std::string detail;
    for (const auto & p : problems)
        detail += (detail.empty() ? "" : "; ") + p;
    o.detail = problems.empty() ? "t = 2, 3, 4, both variants, " + std::to_string(sequences) + " sequence checks up to sum 12"
                                : detail;
    return o;
}

auto c11(State & st) -> Outcome
{
    Outcome o;
    if (auto pair = search_counterexample(parse_forbidden_set("2K2, C4, C5"), 14, st.context))
        o.fail("refuted by (" + pair->upper.to_string() + ", " + pair->lower.to_string() + ")");
    else
        o.detail = "{2K2, C4, C5}: no counterexample up to sum 14";
    return o;
}

auto c12(State & st) -> Outcome
{
    Outcome o;
    int checked = 0;
    for (int size : {1, 2}) {
        for (const auto & c : st.classified(size)) {
            if (c.verdict != Verdict::refuted)
                continue;
            const auto comp = complement_set(c.candidate);
            if (! comp.hypothesis_holds)
                continue;
            ++checked;
            const auto cc = classify_set(comp.set, 16, st.context);
            if (cc.verdict != Verdict::refuted)
                o.fail(c.candidate.name() + " refuted but its complement " + comp.set.name() + " is " + to_string(cc.verdict));
        }
    }
    if (o.passed)
        o.detail = std::to_string(checked) + " refuted candidates without dominating vertices; complements all refuted";
    return o;
}

struct Criterion {
    int id;
    const char * title;
    Outcome (*run)(State &);
};

} // namespace

auto run_acceptance(const AcceptanceOptions & options, const std::function<void(const CriterionResult &)> & report)
    -> std::vector<CriterionResult>
{
    static const Criterion criteria[] = {
        {1, "majorization fixture", c1},
        {2, "Muirhead equivalence, sums <= 16", c2},
        {3, "realizations vs labelled oracle, sums <= 10", c3},
        {4, "unique realization fixtures", c4},
        {5, "counterexample reproduction", c5},
        {6, "singleton classification", c6},
        {7, "pair classification", c7},
        {8, "listed triples survive to sum 14", c8},
        {9, "construction catalogs", c9},
        {10, "all graphs of order t / with t edges", c10},
        {11, "split-graph triple survives to sum 14", c11},
        {12, "complement consistency", c12},
    };
    State state{options, SearchContext{}, std::nullopt, std::nullopt};
    std::vector<CriterionResult> results;
    auto record = [&](int id, const std::string & title, auto && body) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception & ex) {
            o.fail(std::string("exception: ") + ex.what());
        }
        CriterionResult r{id, title, o.passed, o.informational, o.detail,
                          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()};
        if (report)
            report(r);
        results.push_back(std::move(r));
    };
    for (const auto & c : criteria) {
        if (! options.only.empty() && ! options.only.count(c.id))
            continue;
        record(c.id, c.title, [&] { return c.run(state); });
        if (c.id == 8 && options.triple_sweeps) {
            record(8, "triple sweep (optional)", [&] { return triple_sweep(state, 4, frozen_triple_budget_order4); });
            record(8, "triple sweep (optional)", [&] { return triple_sweep(state, 5, frozen_triple_budget_order5); });
        }
    }
    return results;
}

auto format_result(const CriterionResult & r) -> std::string
{
    const char * tag = r.informational ? "INFO" : (r.passed ? "PASS" : "FAIL");
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", r.seconds);
    return std::string(tag) + (r.id < 10 ? "   " : "  ") + std::to_string(r.id) + "  " + r.title + "  (" + r.detail + ")  [" +
           time + "]";
}

} // namespace fixture

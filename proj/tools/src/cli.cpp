#include "domorder_cli/cli.hpp"

#include "domorder/dominance_order.hpp"
#include "domorder/error.hpp"
#include "domorder/forbidden_set.hpp"
#include "domorder/graph6.hpp"
#include "domorder/graph_expr.hpp"
#include "domorder/graphic.hpp"
#include "domorder/lemmas.hpp"
#include "domorder/monotone.hpp"
#include "domorder/partition.hpp"
#include "domorder/report.hpp"
#include "fixture/acceptance.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>

namespace domorder::cli {

namespace {

using nlohmann::json;

void emit(std::ostream & out, const json & doc) { out << doc.dump(2) << '\n'; }

auto member_text(const ForbiddenSet & set, std::size_t member) -> std::string
{
    return member < set.size() ? describe(set[member]) : "?";
}

auto pair_text(const CounterexamplePair & pair, const ForbiddenSet & set) -> std::string
{
    return pair.upper.to_string() + " over " + pair.lower.to_string() + ", witness " + to_graph6(pair.witness_graph) +
           " induces " + member_text(set, pair.witness_member);
}

auto add_format(CLI::App * cmd, std::string & format, std::vector<std::string> allowed) -> CLI::Option *
{
    return cmd->add_option("--format", format, "Output format: " + CLI::detail::join(allowed, "|"))
        ->check(CLI::IsMember(allowed));
}

struct Args {
    /// Empty picks the verb's default.
    std::string format;
    std::string d, e, set;
    int total = 0;
    bool all = false;
    std::size_t limit = 0;
    int max_vertices = 12;
    int max_sum = 0;
    int size = 1;
    int order_cap = 4;
    int threads = 1;
    bool unrefuted_only = false;
    std::string construction;
    std::map<std::string, int> params;
    int t = 0;
    std::string variant = "order";
    std::vector<int> criteria;
    bool no_sweeps = false;

    [[nodiscard]] auto json_output(bool by_default = false) const -> bool
    {
        return format.empty() ? by_default : format == "json";
    }
};

auto do_majorize(const Args & a, std::ostream & out) -> int
{
    const Partition d = parse_partition(a.d);
    const Partition e = parse_partition(a.e);
    const bool yes = majorizes(d, e);
    if (a.json_output())
        emit(out, {{"d", d.to_string()}, {"e", e.to_string()}, {"majorizes", yes}});
    else
        out << (yes ? "true" : "false") << '\n';
    return yes ? exit_ok : exit_negative;
}

auto do_lattice(const Args & a, std::ostream & out) -> int
{
    const auto order = build_dominance_order(a.total, ! a.all);
    if (a.json_output()) {
        emit(out, json::parse(order.to_json()));
    } else if (a.format == "dot") {
        out << order.to_dot();
    } else {
        out << (a.all ? "partitions of " : "graphic partitions of ") << a.total << ": " << order.size() << " nodes, "
            << order.covers().size() << " covers\n";
        for (std::size_t i = 0; i < order.size(); ++i) {
            out << i << "  " << order.nodes()[i].to_string();
            const auto & below = order.lower_covers(static_cast<int>(i));
            if (! below.empty()) {
                out << "  covers";
                for (int j : below)
                    out << ' ' << order.nodes()[static_cast<std::size_t>(j)].to_string();
            }
            out << '\n';
        }
    }
    return exit_ok;
}

auto do_realize(const Args & a, std::ostream & out) -> int
{
    const Partition d = parse_partition(a.d);
    RealizationLimits limits;
    limits.max_vertices = a.max_vertices;
    const auto set = realizations(d, a.limit ? std::optional<std::size_t>(a.limit) : std::nullopt, limits);
    if (a.json_output()) {
        emit(out, to_json(set));
    } else if (a.format == "graph6") {
        for (const auto & g : set.graphs)
            out << to_graph6(g) << '\n';
    } else {
        out << d.to_string() << ": " << set.graphs.size() << (set.graphs.size() == 1 ? " realization" : " realizations")
            << (set.complete ? "" : " (stopped at limit)") << '\n';
        for (const auto & g : set.graphs)
            out << "  " << to_graph6(g) << "  " << describe(g) << '\n';
    }
    return exit_ok;
}

auto do_forcibly(const Args & a, std::ostream & out) -> int
{
    const Partition d = parse_partition(a.d);
    const ForbiddenSet set = parse_forbidden_set(a.set);
    if (! is_graphic(d))
        throw DomainError(d.to_string() + " is not graphic");
    const auto witness = find_potential_witness(d, set, search_realization_limits());
    if (a.json_output()) {
        json w = nullptr;
        if (witness)
            w = {{"graph6", to_graph6(witness->graph)}, {"member_index", witness->member}};
        emit(out, {{"sequence", d.to_string()}, {"set", set.name()}, {"forcibly_free", ! witness}, {"witness", w}});
    } else if (witness) {
        out << d.to_string() << " is potentially " << set.name() << ": " << to_graph6(witness->graph) << " induces "
            << member_text(set, witness->member) << '\n';
    } else {
        out << d.to_string() << " is forcibly " << set.name() << "-free\n";
    }
    return witness ? exit_negative : exit_ok;
}

auto do_check_pair(const Args & a, std::ostream & out) -> int
{
    const Partition d = parse_partition(a.d);
    const Partition e = parse_partition(a.e);
    const ForbiddenSet set = parse_forbidden_set(a.set);
    const auto pair = is_counterexample_pair(d, e, set);
    if (a.json_output()) {
        emit(out, {{"d", d.to_string()},
                   {"e", e.to_string()},
                   {"set", set.name()},
                   {"counterexample", pair ? to_json(*pair) : json(nullptr)}});
    } else if (pair) {
        out << "counterexample: " << pair_text(*pair, set) << '\n';
    } else {
        out << "not a counterexample pair\n";
    }
    return pair ? exit_negative : exit_ok;
}

auto do_search(const Args & a, std::ostream & out) -> int
{
    const ForbiddenSet set = parse_forbidden_set(a.set);
    const auto pair = search_counterexample(set, a.max_sum);
    if (a.json_output(true)) {
        json doc = pair ? to_json(*pair) : json{{"d", nullptr}, {"e", nullptr}};
        doc["set"] = set.name();
        doc["max_sum"] = a.max_sum;
        if (pair)
            doc["member"] = member_text(set, pair->witness_member);
        emit(out, doc);
    } else if (pair) {
        out << "counterexample: " << pair_text(*pair, set) << '\n';
    } else {
        out << "no counterexample with sum <= " << a.max_sum << '\n';
    }
    return pair ? exit_negative : exit_ok;
}

auto do_screen(const Args & a, std::ostream & out) -> int
{
    const ForbiddenSet set = parse_forbidden_set(a.set);
    const auto report = screen_necessary_conditions(set);
    if (a.json_output()) {
        json doc = to_json(report);
        doc["set"] = set.name();
        emit(out, doc);
    } else {
        out << set.name() << '\n';
        for (const auto & v : report.verdicts)
            out << "  " << v << '\n';
    }
    return report.certifies_non_monotone() ? exit_negative : exit_ok;
}

auto do_classify(const Args & a, std::ostream & out) -> int
{
    const int max_sum = a.max_sum ? a.max_sum : (a.size == 3 ? 14 : 16);
    ClassifyOptions options;
    options.threads = a.threads;
    const auto results = classify_sets(a.order_cap, a.size, max_sum, options);
    std::map<Verdict, int> counts;
    for (const auto & c : results)
        ++counts[c.verdict];
    auto shown = [&](const Classification & c) { return ! a.unrefuted_only || c.verdict != Verdict::refuted; };

    if (a.json_output()) {
        json list = json::array();
        for (const auto & c : results)
            if (shown(c))
                list.push_back(to_json(c));
        emit(out, {{"size", a.size},
                   {"order_cap", a.order_cap},
                   {"max_sum", max_sum},
                   {"summary",
                    {{"candidates", results.size()},
                     {"proven", counts[Verdict::proven]},
                     {"refuted", counts[Verdict::refuted]},
                     {"survived", counts[Verdict::survived]}}},
                   {"results", list}});
        return exit_ok;
    }
    for (const auto & c : results) {
        if (! shown(c))
            continue;
        out << to_string(c.verdict) << "  " << c.candidate.name();
        if (c.reduced_to)
            out << "  (as " << c.reduced_to->name() << ")";
        if (c.certificate)
            out << "  " << pair_text(*c.certificate, c.candidate);
        out << '\n';
    }
    out << results.size() << " candidates: " << counts[Verdict::proven] << " proven, " << counts[Verdict::refuted]
        << " refuted, " << counts[Verdict::survived] << " survived (max_sum " << max_sum << ", order_cap " << a.order_cap
        << ")\n";
    return exit_ok;
}

auto do_verify_lemma(const Args & a, std::ostream & out) -> int
{
    const auto report = verify_lemma_constructions(parse_construction(a.construction), a.params);
    if (a.json_output()) {
        emit(out, to_json(report));
    } else {
        out << a.construction << ": " << report.upper.to_string() << " over " << report.lower.to_string() << '\n';
        for (const auto & c : report.checks) {
            out << "  " << (c.passed ? "ok    " : "FAILED") << "  " << c.name;
            if (! c.detail.empty())
                out << "  (" << c.detail << ")";
            out << '\n';
        }
    }
    return report.passed() ? exit_ok : exit_negative;
}

auto do_verify_family(const Args & a, std::ostream & out) -> int
{
    const auto variant = a.variant == "edges" ? FamilyVariant::edges : FamilyVariant::order;
    const auto report = verify_infinite_family(a.t, variant, a.max_sum ? a.max_sum : 12);
    if (a.json_output()) {
        emit(out, to_json(report));
    } else {
        out << (variant == FamilyVariant::order ? "graphs of order " : "graphs with edges ") << a.t << ": "
            << report.set.size() << " members, " << report.sequences_checked << " sequences up to sum "
            << report.max_sum << '\n';
        if (report.counterexample)
            out << "  counterexample: " << pair_text(*report.counterexample, report.set) << '\n';
        for (const auto & p : report.shortcut_mismatches)
            out << "  shortcut fails at " << p.to_string() << '\n';
        out << (report.passed() ? "passed" : "failed") << '\n';
    }
    return report.passed() ? exit_ok : exit_negative;
}

auto do_verify_paper(const Args & a, std::ostream & out) -> int
{
    fixture::AcceptanceOptions options;
    options.threads = a.threads;
    options.only.insert(a.criteria.begin(), a.criteria.end());
    options.triple_sweeps = ! a.no_sweeps;
    const bool text = ! a.json_output();
    const auto results = fixture::run_acceptance(options, [&](const fixture::CriterionResult & r) {
        if (text)
            out << fixture::format_result(r) << std::endl;
    });
    int passed = 0, failed = 0;
    for (const auto & r : results)
        if (! r.informational)
            ++(r.passed ? passed : failed);
    if (text) {
        out << passed << " passed, " << failed << " failed\n";
    } else {
        json list = json::array();
        for (const auto & r : results)
            list.push_back({{"id", r.id},
                            {"title", r.title},
                            {"status", r.informational ? "info" : (r.passed ? "pass" : "fail")},
                            {"detail", r.detail},
                            {"seconds", r.seconds}});
        emit(out, {{"passed", passed}, {"failed", failed}, {"criteria", list}});
    }
    return failed == 0 ? exit_ok : exit_negative;
}

} // namespace

auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app("Dominance order on degree sequences and forcibly F-free testing", "domorder");
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every command");

    Args a;
    std::function<int(std::ostream &)> action;
    auto verb = [&](const char * name, const char * help, int (*fn)(const Args &, std::ostream &)) {
        CLI::App * cmd = app.add_subcommand(name, help);
        cmd->callback([&action, fn, &a] { action = [fn, &a](std::ostream & o) { return fn(a, o); }; });
        return cmd;
    };
    const std::string set_help = "Forbidden set, comma-separated graph expressions, e.g. \"2K2, C4\"";

    auto * majorize = verb("majorize", "Does D majorize E", do_majorize);
    majorize->add_option("D", a.d)->required();
    majorize->add_option("E", a.e)->required();
    add_format(majorize, a.format, {"text", "json"});

    auto * lattice = verb("lattice", "Dominance order of an even total", do_lattice);
    lattice->add_option("TOTAL", a.total)->required();
    lattice->add_flag("--all", a.all, "Include non-graphic partitions");
    add_format(lattice, a.format, {"text", "json", "dot"});

    auto * realize = verb("realize", "Unlabelled realizations of a degree sequence", do_realize);
    realize->add_option("SEQUENCE", a.d)->required();
    realize->add_option("--limit", a.limit, "Stop after this many classes (0 = no limit)");
    realize->add_option("--max-vertices", a.max_vertices, "Longest sequence accepted")
        ->check(CLI::Range(1, 31))
        ->capture_default_str();
    add_format(realize, a.format, {"text", "json", "graph6"});

    auto * forcibly = verb("forcibly", "Is every realization F-free", do_forcibly);
    forcibly->add_option("SEQUENCE", a.d)->required();
    forcibly->add_option("--set", a.set, set_help)->required();
    add_format(forcibly, a.format, {"text", "json"});

    auto * check_pair = verb("check-pair", "Is (D, E) a counterexample pair for F", do_check_pair);
    check_pair->add_option("D", a.d)->required();
    check_pair->add_option("E", a.e)->required();
    check_pair->add_option("--set", a.set, set_help)->required();
    add_format(check_pair, a.format, {"text", "json"});

    auto * search = verb("search", "First counterexample pair up to a sum", do_search);
    search->add_option("--set", a.set, set_help)->required();
    search->add_option("--max-sum", a.max_sum, "Largest (even) sum scanned")->required();
    add_format(search, a.format, {"json", "text"});

    auto * screen = verb("screen", "Structural necessary and sufficient conditions", do_screen);
    screen->add_option("--set", a.set, set_help)->required();
    add_format(screen, a.format, {"text", "json"});

    auto * classify = verb("classify", "Classify every forbidden set of a given size", do_classify);
    classify->add_option("--size", a.size, "Members per set")->check(CLI::Range(1, 3))->capture_default_str();
    classify->add_option("--order-cap", a.order_cap, "Largest member order")->capture_default_str();
    classify->add_option("--max-sum", a.max_sum, "Search budget (default 16, or 14 for triples)");
    classify->add_option("--threads", a.threads, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();
    classify->add_flag("--unrefuted-only", a.unrefuted_only, "List only proven and surviving sets");
    add_format(classify, a.format, {"text", "json"});

    auto * lemma = verb("verify-lemma", "Check a counterexample construction", do_verify_lemma);
    lemma->add_option("CONSTRUCTION", a.construction)->required()->check(CLI::IsMember(construction_names()));
    for (const char * key : {"a", "b", "p"})
        lemma->add_option_function<int>(std::string("-") + key, [&a, key](int v) { a.params[key] = v; }, "Parameter");
    add_format(lemma, a.format, {"text", "json"});

    auto * family = verb("verify-family", "All graphs of order t, or with t edges, as a forbidden set", do_verify_family);
    family->add_option("-t", a.t, "Order or edge count")->required()->check(CLI::Range(1, 5));
    family->add_option("--variant", a.variant)->check(CLI::IsMember({"order", "edges"}))->capture_default_str();
    family->add_option("--max-sum", a.max_sum, "Largest sum checked (default 12)");
    add_format(family, a.format, {"text", "json"});

    auto * acceptance = verb("verify-paper", "Run every acceptance criterion", do_verify_paper);
    acceptance->add_option("--threads", a.threads, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();
    acceptance->add_option("--criterion", a.criteria, "Run only these criteria")->check(CLI::Range(1, 12));
    acceptance->add_flag("--no-sweeps", a.no_sweeps, "Skip the informational triple sweeps");
    add_format(acceptance, a.format, {"text", "json"});

    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const auto & s : args)
        argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError & e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        return action(out);
    } catch (const ResourceError & e) {
        err << "domorder: " << e.what() << '\n';
        return exit_resource;
    } catch (const std::invalid_argument & e) {
        err << "domorder: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error & e) {
        err << "domorder: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace domorder::cli

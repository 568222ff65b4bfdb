#include "domorder/monotone.hpp"

#include "domorder/catalog.hpp"
#include "domorder/error.hpp"
#include "domorder/graph_expr.hpp"
#include "domorder/induced.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace domorder {

auto GraphPairHash::operator()(const std::pair<SmallGraph, SmallGraph> & p) const noexcept -> std::size_t
{
    const std::hash<SmallGraph> h;
    return h(p.first) * 0x9e3779b97f4a7c15ULL ^ h(p.second);
}

auto search_realization_limits() -> RealizationLimits
{
    RealizationLimits limits;
    limits.max_vertices = SmallGraph::max_vertices;
    return limits;
}

SearchContext::SearchContext(RealizationLimits limits, int sum_cap) : limits_(limits), sum_cap_(sum_cap) {}

auto SearchContext::order(int total) -> const DominanceOrder &
{
    {
        std::shared_lock lock(orders_mutex_);
        if (auto it = orders_.find(total); it != orders_.end())
            return *it->second;
    }
    auto built = std::make_unique<DominanceOrder>(build_dominance_order(total, true, sum_cap_));
    std::unique_lock lock(orders_mutex_);
    auto [it, inserted] = orders_.try_emplace(total, std::move(built));
    return *it->second;
}

auto SearchContext::realizations(const Partition & d) -> const RealizationSet &
{
    {
        std::shared_lock lock(realizations_mutex_);
        if (auto it = realizations_.find(d); it != realizations_.end())
            return it->second;
    }
    auto set = domorder::realizations(d, std::nullopt, limits_);
    std::unique_lock lock(realizations_mutex_);
    // unordered_map references stay valid across rehashing
    return realizations_.try_emplace(d, std::move(set)).first->second;
}

auto SearchContext::induced(const SmallGraph & host, const SmallGraph & member_form) -> bool
{
    const auto key = std::make_pair(host, member_form);
    {
        std::shared_lock lock(induced_mutex_);
        if (auto it = induced_.find(key); it != induced_.end())
            return it->second;
    }
    const bool found = contains_induced(host, member_form);
    std::unique_lock lock(induced_mutex_);
    induced_.try_emplace(key, found);
    return found;
}

auto SearchContext::witness(const Partition & d, const ForbiddenSet & forbidden) -> std::optional<InducedWitness>
{
    const auto & set = realizations(d);
    for (const auto & g : set.graphs) {
        for (std::size_t i = 0; i < forbidden.size(); ++i) {
            const auto & member = forbidden.codes()[i].form();
            if (member.order() > g.order())
                continue;
            if (induced(g, member))
                return InducedWitness{g, i};
        }
    }
    return std::nullopt;
}

auto SearchContext::forcibly_free(const Partition & d, const ForbiddenSet & forbidden) -> bool
{
    {
        std::shared_lock lock(flags_mutex_);
        if (auto it = flags_.find(forbidden.key()); it != flags_.end())
            if (auto jt = it->second.find(d); jt != it->second.end())
                return jt->second;
    }
    const bool free = ! witness(d, forbidden).has_value();
    std::unique_lock lock(flags_mutex_);
    flags_[forbidden.key()].try_emplace(d, free);
    return free;
}

namespace {

void require_pair_domain(const Partition & d, const Partition & e)
{
    if (d.sum() != e.sum())
        throw DomainError("sequences " + d.to_string() + " and " + e.to_string() + " have different sums");
    for (const auto * p : {&d, &e})
        if (! is_graphic(*p))
            throw DomainError(p->to_string() + " is not graphic");
}

auto make_pair_if_refuting(const Partition & d, const Partition & e, const ForbiddenSet & forbidden, SearchContext & ctx)
    -> std::optional<CounterexamplePair>
{
    if (! ctx.forcibly_free(e, forbidden))
        return std::nullopt;
    auto w = ctx.witness(d, forbidden);
    if (! w)
        return std::nullopt;
    return CounterexamplePair{d, e, w->graph, w->member};
}

} // namespace

auto is_counterexample_pair(const Partition & d, const Partition & e, const ForbiddenSet & forbidden, SearchContext & context)
    -> std::optional<CounterexamplePair>
{
    require_pair_domain(d, e);
    if (! strictly_majorizes(d, e))
        return std::nullopt;
    return make_pair_if_refuting(d, e, forbidden, context);
}

auto is_counterexample_pair(const Partition & d, const Partition & e, const ForbiddenSet & forbidden)
    -> std::optional<CounterexamplePair>
{
    SearchContext context;
    return is_counterexample_pair(d, e, forbidden, context);
}

auto search_counterexample(const ForbiddenSet & forbidden, int max_sum, SearchContext & context)
    -> std::optional<CounterexamplePair>
{
    if (max_sum % 2 != 0)
        throw DomainError("max sum must be even, got " + std::to_string(max_sum));
    if (max_sum > context.sum_cap())
        throw ResourceError("max sum " + std::to_string(max_sum) + " exceeds the cap " + std::to_string(context.sum_cap()));
    for (int total = 2; total <= max_sum; total += 2) {
        const auto & order = context.order(total);
        const auto & nodes = order.nodes();
        for (std::size_t lower = 0; lower < nodes.size(); ++lower) {
            if (! context.forcibly_free(nodes[lower], forbidden))
                continue;
            for (int upper : order.upper_covers(static_cast<int>(lower))) {
                if (auto w = context.witness(nodes[static_cast<std::size_t>(upper)], forbidden))
                    return CounterexamplePair{nodes[static_cast<std::size_t>(upper)], nodes[lower], w->graph, w->member};
            }
        }
    }
    return std::nullopt;
}

auto search_counterexample(const ForbiddenSet & forbidden, int max_sum) -> std::optional<CounterexamplePair>
{
    SearchContext context;
    return search_counterexample(forbidden, max_sum, context);
}

namespace {

auto induced_in_any(const SmallGraph & host, const ForbiddenSet & forbidden) -> bool
{
    return std::any_of(forbidden.members().begin(), forbidden.members().end(),
                       [&](const SmallGraph & m) { return contains_induced(host, m); });
}

} // namespace

auto screen_necessary_conditions(const ForbiddenSet & forbidden) -> ScreeningReport
{
    if (forbidden.empty())
        throw DomainError("cannot screen an empty set");
    ScreeningReport report;
    const auto members = forbidden.members();

    int fewest = std::numeric_limits<int>::max();
    for (const auto & g : members)
        fewest = std::min(fewest, g.edge_count());
    std::vector<std::string> sparse;
    for (const auto & g : members) {
        if (g.edge_count() != fewest)
            continue;
        sparse.push_back(describe(g));
        if (max_degree(g) <= 1)
            report.has_delta_le1_min_edge_graph = true;
    }
    std::string names;
    for (const auto & s : sparse)
        names += (names.empty() ? "" : ", ") + s;
    report.verdicts.push_back(report.has_delta_le1_min_edge_graph
                                  ? "min-edge members (" + names + "): some has max degree <= 1"
                                  : "min-edge members (" + names + ") all have max degree >= 2: not monotone");

    std::optional<std::string> dominating, near_regular;
    for (const auto & g : members) {
        if (! dominating && has_dominating_vertex(g))
            dominating = describe(g);
        if (! near_regular && g.order() >= 2 && is_regular_of(g, g.order() - 2))
            near_regular = describe(g);
    }
    report.complement_set_status =
        dominating ? ComplementStatus::not_applicable_dominating_vertex : ComplementStatus::applies;
    report.has_dominating_or_near_regular = dominating || near_regular;
    if (dominating)
        report.verdicts.push_back(*dominating + " has a dominating vertex");
    else if (near_regular)
        report.verdicts.push_back(*near_regular + " is (n-2)-regular");
    else
        report.verdicts.push_back("no member has a dominating vertex or is (n-2)-regular: not monotone");
    report.verdicts.push_back(dominating ? "complement theorem does not apply"
                                         : "complement theorem applies: no member has a dominating vertex");

    const SmallGraph targets[] = {disjoint_copies(complete_graph(2), 2), cycle_graph(4), path_graph(4)};
    report.threshold_sufficiency = std::all_of(std::begin(targets), std::end(targets),
                                               [&](const SmallGraph & t) { return induced_in_any(t, forbidden); });
    report.verdicts.push_back(report.threshold_sufficiency
                                  ? "each of 2K2, C4, P4 has an induced subgraph in the set: monotone"
                                  : "some of 2K2, C4, P4 is free of the set: sufficiency check inconclusive");
    return report;
}

auto complement_set(const ForbiddenSet & forbidden) -> ComplementSet
{
    std::vector<SmallGraph> members;
    bool hypothesis = true;
    for (const auto & g : forbidden.members()) {
        members.push_back(complement(g));
        hypothesis = hypothesis && ! has_dominating_vertex(g);
    }
    return {ForbiddenSet(std::move(members)), hypothesis};
}

auto to_string(Verdict v) -> std::string
{
    switch (v) {
    case Verdict::proven: return "PROVEN";
    case Verdict::refuted: return "REFUTED";
    case Verdict::survived: return "SURVIVED";
    }
    return "?";
}

auto classify_set(const ForbiddenSet & forbidden, int max_sum, SearchContext & context) -> Classification
{
    Classification c{forbidden, std::nullopt, Verdict::survived, std::nullopt, {}, max_sum, 0};
    ForbiddenSet working = forbidden;
    if (! forbidden.is_reduced()) {
        working = forbidden.reduced();
        c.reduced_to = working;
    }
    c.screening = screen_necessary_conditions(working);
    if (c.screening.certifies_monotone()) {
        c.verdict = Verdict::proven;
        return c;
    }
    if (auto pair = search_counterexample(working, max_sum, context)) {
        const auto & code = working.codes()[pair->witness_member];
        const auto codes = forbidden.codes();
        pair->witness_member = static_cast<std::size_t>(std::find(codes.begin(), codes.end(), code) - codes.begin());
        c.verdict = Verdict::refuted;
        c.certificate = std::move(pair);
    }
    return c;
}

auto classify_sets(int order_cap, int size, int max_sum, const ClassifyOptions & options) -> std::vector<Classification>
{
    if (size < 1 || size > 3)
        throw DomainError("set size must be 1, 2 or 3");
    if (order_cap < 1 || order_cap > 7)
        throw DomainError("order cap must be between 1 and 7");
    if (size == 3 && order_cap > 5)
        throw DomainError("order cap above 5 is not supported for triples");

    const auto graphs = graphs_up_to_order(order_cap);
    const int n = static_cast<int>(graphs.size());
    std::vector<std::vector<int>> combos;
    std::vector<int> pick(static_cast<std::size_t>(size));
    auto extend = [&](auto & self, int depth, int from) -> void {
        if (depth == size) {
            combos.push_back(pick);
            return;
        }
        for (int i = from; i < n; ++i) {
            pick[static_cast<std::size_t>(depth)] = i;
            self(self, depth + 1, i + 1);
        }
    };
    extend(extend, 0, 0);

    std::optional<SearchContext> own;
    SearchContext & context = options.context ? *options.context : own.emplace();

    std::vector<std::optional<Classification>> results(combos.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < combos.size();) {
            try {
                std::vector<SmallGraph> members;
                for (int i : combos[k])
                    members.push_back(graphs[static_cast<std::size_t>(i)]);
                auto c = classify_set(ForbiddenSet(std::move(members)), max_sum, context);
                c.order_cap = order_cap;
                results[k] = std::move(c);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (! failure)
                    failure = std::current_exception();
                next = combos.size();
            }
        }
    };
    const int threads = std::max(1, options.threads);
    if (threads == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(work);
    }
    if (failure)
        std::rethrow_exception(failure);

    std::vector<Classification> out;
    out.reserve(results.size());
    for (auto & r : results)
        out.push_back(std::move(*r));
    return out;
}

auto verify_infinite_family(int t, FamilyVariant variant, int max_sum, SearchContext & context) -> FamilyReport
{
    if (t < 1 || t > 5)
        throw DomainError("family parameter must be between 1 and 5");
    FamilyReport report;
    report.t = t;
    report.variant = variant;
    report.max_sum = max_sum;
    const bool by_order = variant == FamilyVariant::order;
    report.set = ForbiddenSet(by_order ? graphs_of_order(t) : graphs_with_edges(t),
                              (by_order ? "all graphs of order " : "all graphs with edges ") + std::to_string(t));
    report.counterexample = search_counterexample(report.set, max_sum, context);
    for (int total = 2; total <= max_sum; total += 2) {
        for (const auto & d : context.order(total).nodes()) {
            const bool expected = by_order ? static_cast<int>(d.size()) < t : d.sum() < 2 * t;
            if (context.forcibly_free(d, report.set) != expected)
                report.shortcut_mismatches.push_back(d);
            ++report.sequences_checked;
        }
    }
    return report;
}

auto verify_infinite_family(int t, FamilyVariant variant, int max_sum) -> FamilyReport
{
    SearchContext context;
    return verify_infinite_family(t, variant, max_sum, context);
}

} // namespace domorder

#pragma once

#include "domorder/dominance_order.hpp"
#include "domorder/forbidden_set.hpp"
#include "domorder/graphic.hpp"
#include "domorder/partition.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace domorder {

struct GraphPairHash {
    auto operator()(const std::pair<SmallGraph, SmallGraph> & p) const noexcept -> std::size_t;
};

/// Witness that F is not dominance monotone: upper majorizes lower, lower is forcibly F-free,
/// and witness_graph is a realization of upper inducing member witness_member of F.
struct CounterexamplePair {
    Partition upper;
    Partition lower;
    SmallGraph witness_graph;
    std::size_t witness_member = 0;
};

/// Realization limits used by the exhaustive searches: any length a sum-capped order can produce,
/// bounded by the labelled-leaf budget instead.
[[nodiscard]] auto search_realization_limits() -> RealizationLimits;

/// Shared caches for repeated searches: dominance orders per total, realization sets per
/// partition, induced-subgraph answers per (realization, member) and forcibly-free flags per
/// (partition, set). Safe to share between threads.
class SearchContext {
public:
    explicit SearchContext(RealizationLimits limits = search_realization_limits(), int sum_cap = default_sum_cap);

    SearchContext(const SearchContext &) = delete;
    auto operator=(const SearchContext &) -> SearchContext & = delete;

    [[nodiscard]] auto sum_cap() const noexcept -> int { return sum_cap_; }
    [[nodiscard]] auto limits() const noexcept -> const RealizationLimits & { return limits_; }

    /// Graphic dominance order of the given total.
    auto order(int total) -> const DominanceOrder &;
    auto realizations(const Partition & d) -> const RealizationSet &;
    auto forcibly_free(const Partition & d, const ForbiddenSet & forbidden) -> bool;
    /// First realization of d (canonical order) inducing a member of F, with the first such member.
    auto witness(const Partition & d, const ForbiddenSet & forbidden) -> std::optional<InducedWitness>;

private:
    auto induced(const SmallGraph & host, const SmallGraph & member_form) -> bool;

    RealizationLimits limits_;
    int sum_cap_;

    std::shared_mutex orders_mutex_;
    std::map<int, std::unique_ptr<DominanceOrder>> orders_;
    std::shared_mutex realizations_mutex_;
    std::unordered_map<Partition, RealizationSet> realizations_;
    std::shared_mutex induced_mutex_;
    std::unordered_map<std::pair<SmallGraph, SmallGraph>, bool, GraphPairHash> induced_;
    std::shared_mutex flags_mutex_;
    std::unordered_map<std::string, std::unordered_map<Partition, bool>> flags_;
};

/// The pair (d, e) refutes monotonicity of F. DomainError unless both are graphic with equal sums.
[[nodiscard]] auto is_counterexample_pair(const Partition & d, const Partition & e, const ForbiddenSet & forbidden,
                                          SearchContext & context) -> std::optional<CounterexamplePair>;
[[nodiscard]] auto is_counterexample_pair(const Partition & d, const Partition & e, const ForbiddenSet & forbidden)
    -> std::optional<CounterexamplePair>;

/// Scans the dominance orders of 2, 4, ..., max_sum. A counterexample exists in an order exactly
/// when one exists along a single cover edge (walk up a chain from the lower sequence to the first
/// realization that is not forcibly free), so only covers are examined. Returns the first pair by
/// (sum, lower node, upper node). DomainError on odd max_sum, ResourceError past the sum cap.
[[nodiscard]] auto search_counterexample(const ForbiddenSet & forbidden, int max_sum, SearchContext & context)
    -> std::optional<CounterexamplePair>;
[[nodiscard]] auto search_counterexample(const ForbiddenSet & forbidden, int max_sum) -> std::optional<CounterexamplePair>;

enum class ComplementStatus { applies, not_applicable_dominating_vertex };

/// Structural screening of F: necessary conditions for monotonicity and the threshold-based
/// sufficient condition.
struct ScreeningReport {
    /// Some member with the fewest edges has maximum degree at most 1 (necessary).
    bool has_delta_le1_min_edge_graph = false;
    /// Whether the complement theorem applies: no member has a dominating vertex.
    ComplementStatus complement_set_status = ComplementStatus::applies;
    /// Some member has a dominating vertex or is (n-2)-regular (necessary).
    bool has_dominating_or_near_regular = false;
    /// Each of 2K2, C4, P4 has an induced subgraph in F (sufficient).
    bool threshold_sufficiency = false;
    std::vector<std::string> verdicts;

    [[nodiscard]] auto certifies_monotone() const -> bool { return threshold_sufficiency; }
    [[nodiscard]] auto certifies_non_monotone() const -> bool
    {
        return ! has_delta_le1_min_edge_graph || ! has_dominating_or_near_regular;
    }
};

/// DomainError on an empty set.
[[nodiscard]] auto screen_necessary_conditions(const ForbiddenSet & forbidden) -> ScreeningReport;

struct ComplementSet {
    ForbiddenSet set;
    /// No member of the original set has a dominating vertex.
    bool hypothesis_holds = false;
};

[[nodiscard]] auto complement_set(const ForbiddenSet & forbidden) -> ComplementSet;

enum class Verdict {
    proven,   // threshold sufficiency certifies monotonicity
    refuted,  // a counterexample pair was found
    survived, // no refutation up to the search budget
};

[[nodiscard]] auto to_string(Verdict v) -> std::string;

struct Classification {
    ForbiddenSet candidate;
    /// Present when some member induces another; the verdict is that of the reduced set.
    std::optional<ForbiddenSet> reduced_to;
    Verdict verdict = Verdict::survived;
    /// Counterexample with witness_member indexing into `candidate`.
    std::optional<CounterexamplePair> certificate;
    ScreeningReport screening;
    int max_sum = 0;
    int order_cap = 0;
};

/// Verdict for one set under the given search budget.
[[nodiscard]] auto classify_set(const ForbiddenSet & forbidden, int max_sum, SearchContext & context) -> Classification;

struct ClassifyOptions {
    int threads = 1;
    /// Cache to reuse across calls; a private one is used when null.
    SearchContext * context = nullptr;
};

/// Every set of `size` pairwise non-isomorphic graphs on 1..order_cap vertices, classified.
/// Output order is the lexicographic order of member indices in graphs_up_to_order(order_cap),
/// independent of the thread count. DomainError for size outside 1..3 or order_cap > 5 at size 3.
[[nodiscard]] auto classify_sets(int order_cap, int size, int max_sum, const ClassifyOptions & options = {})
    -> std::vector<Classification>;

enum class FamilyVariant { order, edges };

struct FamilyReport {
    int t = 0;
    FamilyVariant variant = FamilyVariant::order;
    int max_sum = 0;
    ForbiddenSet set;
    std::optional<CounterexamplePair> counterexample;
    std::size_t sequences_checked = 0;
    /// Sequences where forcibly-free disagreed with the length / sum shortcut.
    std::vector<Partition> shortcut_mismatches;

    [[nodiscard]] auto passed() const -> bool { return ! counterexample && shortcut_mismatches.empty(); }
};

/// Builds the set of all graphs of order t (or all graphs with exactly t edges, isolated-vertex
/// free versions, which forbid the same graphs) and checks it against every graphic sequence with
/// sum up to max_sum: no counterexample, forcibly free iff length < t (order) or sum < 2t (edges).
[[nodiscard]] auto verify_infinite_family(int t, FamilyVariant variant, int max_sum, SearchContext & context) -> FamilyReport;
[[nodiscard]] auto verify_infinite_family(int t, FamilyVariant variant, int max_sum) -> FamilyReport;

} // namespace domorder

#pragma once

#include "domorder/forbidden_set.hpp"
#include "domorder/graph.hpp"
#include "domorder/partition.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace domorder {

/// Erdős–Gallai test. Accepts any order and zero terms; negative terms are never graphic.
[[nodiscard]] auto is_graphic(std::span<const int> degrees) -> bool;
[[nodiscard]] auto is_graphic(const Partition & d) -> bool;
[[nodiscard]] auto is_graphic(const DegreeSequence & d) -> bool;

/// Maximal in its dominance order: no single-box up-move stays graphic. Since graphic
/// partitions are downward closed this rules out every strictly majorizing graphic partition.
/// DomainError on non-graphic input.
[[nodiscard]] auto is_threshold(const Partition & d) -> bool;

struct RealizationLimits {
    /// Longest sequence accepted.
    int max_vertices = 12;
    /// Labelled realizations visited before giving up with ResourceError.
    std::uint64_t max_leaves = 20'000'000;
};

/// Unlabelled realizations of a sequence; never any isolated vertices.
struct RealizationSet {
    Partition sequence;
    /// Canonical forms, pairwise non-isomorphic, in ascending canonical order.
    std::vector<SmallGraph> graphs;
    /// False only when a caller-supplied limit cut the enumeration short.
    bool complete = true;
};

/// Visits labelled realizations of d. Vertices are numbered in sequence order (vertex i has
/// degree d[i]). At least one representative of every isomorphism class is visited; vertices
/// that are interchangeable at a branch point are only tried in one order. Returning false from
/// the visitor stops the walk. Returns true when the walk ran to exhaustion.
auto for_each_labeled_realization(const Partition & d, const std::function<bool(const SmallGraph &)> & visit,
                                  const RealizationLimits & limits = {}) -> bool;

/// Every unlabelled realization of d. With a limit, stops once more than `limit` classes exist and
/// reports complete = false. DomainError when d is not graphic, ResourceError past the caps.
[[nodiscard]] auto realizations(const Partition & d, std::optional<std::size_t> limit = std::nullopt,
                                const RealizationLimits & limits = {}) -> RealizationSet;

struct InducedWitness {
    SmallGraph graph;
    std::size_t member = 0;
};

/// A realization of d inducing some member of F, if any exists.
[[nodiscard]] auto find_potential_witness(const Partition & d, const ForbiddenSet & forbidden,
                                          const RealizationLimits & limits = {}) -> std::optional<InducedWitness>;

/// Some realization of d induces a member of F.
[[nodiscard]] auto potentially_f(const Partition & d, const ForbiddenSet & forbidden, const RealizationLimits & limits = {}) -> bool;

/// Every realization of d is F-free.
[[nodiscard]] auto forcibly_f_free(const Partition & d, const ForbiddenSet & forbidden, const RealizationLimits & limits = {}) -> bool;

} // namespace domorder

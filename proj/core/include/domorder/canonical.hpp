#pragma once

#include "domorder/graph.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace domorder {

/// Isomorphism-invariant code: the adjacency of the canonically relabelled graph. Two graphs get
/// equal codes exactly when they are isomorphic.
class CanonicalCode {
public:
    CanonicalCode() = default;
    explicit CanonicalCode(SmallGraph form) : form_(form) {}

    [[nodiscard]] auto order() const noexcept -> int { return form_.order(); }
    [[nodiscard]] auto form() const noexcept -> const SmallGraph & { return form_; }
    /// Upper-triangle adjacency bits, row by row: x(0,1) x(0,2) ... x(1,2) ...
    [[nodiscard]] auto bits() const -> std::string;

    friend auto operator==(const CanonicalCode &, const CanonicalCode &) -> bool = default;
    friend auto operator<=>(const CanonicalCode &, const CanonicalCode &) = default;

private:
    SmallGraph form_;
};

/// perm[v] is the canonical position of vertex v.
[[nodiscard]] auto canonical_labeling(const SmallGraph & g) -> std::vector<int>;
[[nodiscard]] auto canonical_form(const SmallGraph & g) -> SmallGraph;
[[nodiscard]] auto canonical_code(const SmallGraph & g) -> CanonicalCode;
[[nodiscard]] auto isomorphic(const SmallGraph & g, const SmallGraph & h) -> bool;

} // namespace domorder

template <>
struct std::hash<domorder::SmallGraph> {
    auto operator()(const domorder::SmallGraph & g) const noexcept -> std::size_t
    {
        std::size_t h = 0xcbf29ce484222325ULL ^ static_cast<std::size_t>(g.order());
        for (int v = 0; v < g.order(); ++v)
            h = (h ^ g.row(v)) * 0x100000001b3ULL;
        return h;
    }
};

template <>
struct std::hash<domorder::CanonicalCode> {
    auto operator()(const domorder::CanonicalCode & c) const noexcept -> std::size_t
    {
        return std::hash<domorder::SmallGraph>{}(c.form());
    }
};

#pragma once

#include "domorder/graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace domorder {

/// True iff some |V(pattern)|-subset of host induces a graph isomorphic to pattern. Pattern
/// vertices of degree 0 match any host vertices non-adjacent to the rest of the image.
[[nodiscard]] auto contains_induced(const SmallGraph & host, const SmallGraph & pattern) -> bool;

/// An embedding: result[p] is the host vertex playing pattern vertex p.
[[nodiscard]] auto find_induced(const SmallGraph & host, const SmallGraph & pattern) -> std::optional<std::vector<int>>;

/// No member of `forbidden` is induced in g.
[[nodiscard]] auto is_f_free(const SmallGraph & g, std::span<const SmallGraph> forbidden) -> bool;

/// Index of the first member of `forbidden` induced in g.
[[nodiscard]] auto first_induced_member(const SmallGraph & g, std::span<const SmallGraph> forbidden) -> std::optional<std::size_t>;

} // namespace domorder

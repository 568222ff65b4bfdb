#pragma once

#include "domorder/graph.hpp"

#include <string>
#include <string_view>

namespace domorder {

/// graph6 encoding (single-byte order prefix; every SmallGraph fits).
[[nodiscard]] auto to_graph6(const SmallGraph & g) -> std::string;

/// Accepts an optional ">>graph6<<" header and surrounding whitespace. ParseError on malformed
/// input, ResourceError when the encoded order exceeds SmallGraph::max_vertices.
[[nodiscard]] auto from_graph6(std::string_view text) -> SmallGraph;

} // namespace domorder

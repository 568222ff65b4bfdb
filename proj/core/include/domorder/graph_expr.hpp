#pragma once

#include "domorder/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace domorder {

/// Builds a graph from an expression.
///
///     expr   := union ('v' union)*          join, loosest
///     union  := term ('+' term)*            disjoint union
///     term   := [count ['*']] factor        count disjoint copies: "2*K2", "2K2"
///     factor := atom | '(' expr ')' | 'co' '(' expr ')'
///     atom   := 'K'n | 'C'n | 'P'n | 'diamond' | 'paw' | 'claw' | 'bull' | 'g6:'<graph6>
///
/// ParseError on malformed text, ResourceError if the result exceeds the vertex cap.
[[nodiscard]] auto build_named(std::string_view expr) -> SmallGraph;

/// Comma-separated list of expressions, optionally wrapped in braces: "{2K2, C4, C5}".
[[nodiscard]] auto parse_graph_list(std::string_view text) -> std::vector<SmallGraph>;

/// A readable expression for g that build_named maps back to an isomorphic graph, e.g.
/// "K2+2K1", "K1 v (2K2)", "diamond". Graphs without a short name fall back to "g6:...".
[[nodiscard]] auto describe(const SmallGraph & g) -> std::string;

} // namespace domorder

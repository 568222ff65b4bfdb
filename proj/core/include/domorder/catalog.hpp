#pragma once

#include "domorder/graph.hpp"

#include <vector>

namespace domorder {

/// All unlabelled graphs on exactly n vertices, as canonical forms in ascending order.
/// Built by vertex augmentation from order n - 1.
[[nodiscard]] auto graphs_of_order(int n) -> std::vector<SmallGraph>;

/// All unlabelled graphs on 1..max_order vertices, ordered by (order, edge count, canonical form).
[[nodiscard]] auto graphs_up_to_order(int max_order) -> std::vector<SmallGraph>;

/// All unlabelled graphs with exactly m edges and no isolated vertices, as canonical forms in
/// ascending order. Built by edge augmentation from m - 1 edges.
[[nodiscard]] auto graphs_with_edges(int m) -> std::vector<SmallGraph>;

} // namespace domorder

#pragma once

#include "domorder/partition.hpp"

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace domorder {

using VertexMask = std::uint32_t;

/// Simple undirected graph on at most 31 vertices; row v holds the neighbourhood of v as a bit
/// mask. Rows beyond n are always zero, so defaulted comparison is labelled-graph equality.
class SmallGraph {
public:
    static constexpr int max_vertices = 31;

    SmallGraph() = default;
    /// n isolated vertices. Throws ResourceError above max_vertices.
    explicit SmallGraph(int n);
    SmallGraph(int n, std::initializer_list<std::pair<int, int>> edges);

    [[nodiscard]] auto order() const noexcept -> int { return n_; }
    [[nodiscard]] auto row(int v) const noexcept -> VertexMask { return adj_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] auto all_vertices() const noexcept -> VertexMask
    {
        return n_ == 0 ? 0U : (~VertexMask{0} >> (32 - n_));
    }
    [[nodiscard]] auto adjacent(int u, int v) const noexcept -> bool { return (row(u) >> v) & 1U; }
    [[nodiscard]] auto degree(int v) const noexcept -> int { return std::popcount(row(v)); }
    [[nodiscard]] auto edge_count() const noexcept -> int;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    friend auto operator==(const SmallGraph &, const SmallGraph &) -> bool = default;
    friend auto operator<=>(const SmallGraph &, const SmallGraph &) = default;

private:
    int n_ = 0;
    std::array<VertexMask, max_vertices> adj_{};
};

[[nodiscard]] auto complete_graph(int n) -> SmallGraph;
[[nodiscard]] auto cycle_graph(int n) -> SmallGraph;
[[nodiscard]] auto path_graph(int n) -> SmallGraph;
[[nodiscard]] auto empty_graph(int n) -> SmallGraph;
/// K4 minus an edge.
[[nodiscard]] auto diamond_graph() -> SmallGraph;

[[nodiscard]] auto complement(const SmallGraph & g) -> SmallGraph;
/// Vertices of h are renumbered after those of g.
[[nodiscard]] auto disjoint_union(const SmallGraph & g, const SmallGraph & h) -> SmallGraph;
[[nodiscard]] auto disjoint_copies(const SmallGraph & g, int copies) -> SmallGraph;
[[nodiscard]] auto join(const SmallGraph & g, const SmallGraph & h) -> SmallGraph;
/// K1 join g; the new apex is vertex 0.
[[nodiscard]] auto cone(const SmallGraph & g) -> SmallGraph;
/// Replaces edge uv by a path u-w-v through the new vertex w = order(g). DomainError on a non-edge.
[[nodiscard]] auto subdivide_edge(const SmallGraph & g, int u, int v) -> SmallGraph;
[[nodiscard]] auto delete_vertex(const SmallGraph & g, int v) -> SmallGraph;
/// Subgraph induced by the vertices in mask, keeping their relative order.
[[nodiscard]] auto induced_subgraph(const SmallGraph & g, VertexMask mask) -> SmallGraph;
/// Vertex v of g becomes vertex perm[v] of the result.
[[nodiscard]] auto relabel(const SmallGraph & g, std::span<const int> perm) -> SmallGraph;

[[nodiscard]] auto degree_sequence(const SmallGraph & g) -> DegreeSequence;
[[nodiscard]] auto has_dominating_vertex(const SmallGraph & g) -> bool;
[[nodiscard]] auto has_isolated_vertex(const SmallGraph & g) -> bool;
[[nodiscard]] auto is_regular_of(const SmallGraph & g, int k) -> bool;
[[nodiscard]] auto max_degree(const SmallGraph & g) -> int;
/// Connected components as vertex masks, ordered by smallest vertex.
[[nodiscard]] auto components(const SmallGraph & g) -> std::vector<VertexMask>;
[[nodiscard]] auto is_connected(const SmallGraph & g) -> bool;

} // namespace domorder

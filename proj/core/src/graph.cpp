#include "domorder/graph.hpp"

#include "domorder/error.hpp"

#include <algorithm>
#include <string>

namespace domorder {

namespace {

void check_order(int n)
{
    if (n < 0)
        throw DomainError("negative vertex count");
    if (n > SmallGraph::max_vertices)
        throw ResourceError("graph on " + std::to_string(n) + " vertices exceeds the "
                            + std::to_string(SmallGraph::max_vertices) + "-vertex cap");
}

} // namespace

SmallGraph::SmallGraph(int n) : n_(n)
{
    check_order(n);
}

SmallGraph::SmallGraph(int n, std::initializer_list<std::pair<int, int>> edges) : SmallGraph(n)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
}

auto SmallGraph::edge_count() const noexcept -> int
{
    int twice = 0;
    for (int v = 0; v < n_; ++v)
        twice += degree(v);
    return twice / 2;
}

void SmallGraph::add_edge(int u, int v)
{
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
        throw DomainError("bad edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[static_cast<std::size_t>(u)] |= VertexMask{1} << v;
    adj_[static_cast<std::size_t>(v)] |= VertexMask{1} << u;
}

void SmallGraph::remove_edge(int u, int v)
{
    adj_[static_cast<std::size_t>(u)] &= ~(VertexMask{1} << v);
    adj_[static_cast<std::size_t>(v)] &= ~(VertexMask{1} << u);
}

auto complete_graph(int n) -> SmallGraph
{
    SmallGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

auto cycle_graph(int n) -> SmallGraph
{
    if (n < 3)
        throw DomainError("cycles need at least 3 vertices");
    SmallGraph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

auto path_graph(int n) -> SmallGraph
{
    SmallGraph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

auto empty_graph(int n) -> SmallGraph
{
    return SmallGraph(n);
}

auto diamond_graph() -> SmallGraph
{
    auto g = complete_graph(4);
    g.remove_edge(2, 3);
    return g;
}

auto complement(const SmallGraph & g) -> SmallGraph
{
    SmallGraph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (! g.adjacent(u, v))
                out.add_edge(u, v);
    return out;
}

auto disjoint_union(const SmallGraph & g, const SmallGraph & h) -> SmallGraph
{
    SmallGraph out(g.order() + h.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v))
                out.add_edge(u, v);
    for (int u = 0; u < h.order(); ++u)
        for (int v = u + 1; v < h.order(); ++v)
            if (h.adjacent(u, v))
                out.add_edge(g.order() + u, g.order() + v);
    return out;
}

auto disjoint_copies(const SmallGraph & g, int copies) -> SmallGraph
{
    if (copies < 0)
        throw DomainError("negative copy count");
    check_order(g.order() * copies);
    SmallGraph out;
    for (int i = 0; i < copies; ++i)
        out = disjoint_union(out, g);
    return out;
}

auto join(const SmallGraph & g, const SmallGraph & h) -> SmallGraph
{
    SmallGraph out = disjoint_union(g, h);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v)
            out.add_edge(u, g.order() + v);
    return out;
}

auto cone(const SmallGraph & g) -> SmallGraph
{
    return join(SmallGraph(1), g);
}

auto subdivide_edge(const SmallGraph & g, int u, int v) -> SmallGraph
{
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || ! g.adjacent(u, v))
        throw DomainError("cannot subdivide non-edge " + std::to_string(u) + "-" + std::to_string(v));
    SmallGraph out = disjoint_union(g, SmallGraph(1));
    int w = g.order();
    out.remove_edge(u, v);
    out.add_edge(u, w);
    out.add_edge(w, v);
    return out;
}

auto delete_vertex(const SmallGraph & g, int v) -> SmallGraph
{
    if (v < 0 || v >= g.order())
        throw DomainError("no vertex " + std::to_string(v));
    return induced_subgraph(g, g.all_vertices() & ~(VertexMask{1} << v));
}

auto induced_subgraph(const SmallGraph & g, VertexMask mask) -> SmallGraph
{
    mask &= g.all_vertices();
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    int k = 0;
    for (int v = 0; v < g.order(); ++v)
        if ((mask >> v) & 1U)
            index[static_cast<std::size_t>(v)] = k++;
    SmallGraph out(k);
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (index[static_cast<std::size_t>(u)] >= 0 && index[static_cast<std::size_t>(v)] >= 0 && g.adjacent(u, v))
                out.add_edge(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
    return out;
}

auto relabel(const SmallGraph & g, std::span<const int> perm) -> SmallGraph
{
    SmallGraph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v))
                out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

auto degree_sequence(const SmallGraph & g) -> DegreeSequence
{
    std::vector<int> degrees;
    degrees.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        degrees.push_back(g.degree(v));
    return DegreeSequence(std::move(degrees));
}

auto has_dominating_vertex(const SmallGraph & g) -> bool
{
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1)
            return true;
    return false;
}

auto has_isolated_vertex(const SmallGraph & g) -> bool
{
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            return true;
    return false;
}

auto is_regular_of(const SmallGraph & g, int k) -> bool
{
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != k)
            return false;
    return true;
}

auto max_degree(const SmallGraph & g) -> int
{
    int best = 0;
    for (int v = 0; v < g.order(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

auto components(const SmallGraph & g) -> std::vector<VertexMask>
{
    std::vector<VertexMask> out;
    VertexMask unseen = g.all_vertices();
    while (unseen) {
        VertexMask comp = unseen & (~unseen + 1);
        VertexMask frontier = comp;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            VertexMask fresh = g.row(v) & ~comp;
            comp |= fresh;
            frontier |= fresh;
        }
        out.push_back(comp);
        unseen &= ~comp;
    }
    return out;
}

auto is_connected(const SmallGraph & g) -> bool
{
    return components(g).size() <= 1;
}

} // namespace domorder

#include "domorder/catalog.hpp"

#include "domorder/canonical.hpp"
#include "domorder/error.hpp"

#include <algorithm>
#include <set>

namespace domorder {

auto graphs_of_order(int n) -> std::vector<SmallGraph>
{
    if (n < 0)
        throw DomainError("negative order");
    if (n > 10)
        throw ResourceError("graph catalog limited to 10 vertices");
    std::set<SmallGraph> level{SmallGraph(0)};
    for (int k = 1; k <= n; ++k) {
        std::set<SmallGraph> next;
        for (const auto & g : level) {
            SmallGraph grown = disjoint_union(g, SmallGraph(1));
            const int fresh = k - 1;
            for (VertexMask nbrs = 0; nbrs < (VertexMask{1} << fresh); ++nbrs) {
                SmallGraph h = grown;
                for (VertexMask rest = nbrs; rest; rest &= rest - 1)
                    h.add_edge(fresh, std::countr_zero(rest));
                next.insert(canonical_form(h));
            }
        }
        level = std::move(next);
    }
    return {level.begin(), level.end()};
}

auto graphs_up_to_order(int max_order) -> std::vector<SmallGraph>
{
    std::vector<SmallGraph> out;
    for (int n = 1; n <= max_order; ++n) {
        auto level = graphs_of_order(n);
        std::stable_sort(level.begin(), level.end(),
                         [](const SmallGraph & a, const SmallGraph & b) { return a.edge_count() < b.edge_count(); });
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

auto graphs_with_edges(int m) -> std::vector<SmallGraph>
{
    if (m < 0)
        throw DomainError("negative edge count");
    if (2 * m > SmallGraph::max_vertices)
        throw ResourceError("edge catalog limited to " + std::to_string(SmallGraph::max_vertices / 2) + " edges");
    std::set<SmallGraph> level{SmallGraph(0)};
    for (int k = 1; k <= m; ++k) {
        std::set<SmallGraph> next;
        for (const auto & g : level) {
            const int n = g.order();
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (! g.adjacent(u, v)) {
                        SmallGraph h = g;
                        h.add_edge(u, v);
                        next.insert(canonical_form(h));
                    }
            for (int u = 0; u < n; ++u) {
                SmallGraph h = disjoint_union(g, SmallGraph(1));
                h.add_edge(u, n);
                next.insert(canonical_form(h));
            }
            next.insert(canonical_form(disjoint_union(g, complete_graph(2))));
        }
        level = std::move(next);
    }
    return {level.begin(), level.end()};
}

} // namespace domorder

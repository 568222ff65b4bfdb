#include "domorder/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <optional>

namespace domorder {

namespace {

using Cells = std::vector<VertexMask>;

// Refine an ordered partition until it is equitable. Fragments of a split cell are ordered by
// neighbour count into the splitter, which keeps the result isomorphism-invariant.
void refine(const SmallGraph & g, Cells & cells)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && ! changed; ++s) {
            VertexMask splitter = cells[s];
            Cells next;
            next.reserve(cells.size() + 4);
            for (VertexMask cell : cells) {
                if (std::popcount(cell) == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::map<int, VertexMask> by_count;
                for (VertexMask rest = cell; rest; rest &= rest - 1) {
                    int v = std::countr_zero(rest);
                    by_count[std::popcount(g.row(v) & splitter)] |= VertexMask{1} << v;
                }
                if (by_count.size() > 1)
                    changed = true;
                for (auto & [count, part] : by_count)
                    next.push_back(part);
            }
            if (changed)
                cells = std::move(next);
        }
    }
}

// Quotient of an equitable partition: cell sizes and cell-to-cell neighbour counts.
auto quotient_invariant(const SmallGraph & g, const Cells & cells) -> std::vector<int>
{
    std::vector<int> inv;
    inv.reserve(cells.size() * (cells.size() + 1));
    for (VertexMask cell : cells) {
        inv.push_back(std::popcount(cell));
        int rep = std::countr_zero(cell);
        for (VertexMask other : cells)
            inv.push_back(std::popcount(g.row(rep) & other));
    }
    return inv;
}

struct Leaf {
    SmallGraph form;
    std::vector<int> perm;
};

void search(const SmallGraph & g, const Cells & cells, std::optional<Leaf> & best)
{
    auto target = cells.end();
    for (auto it = cells.begin(); it != cells.end(); ++it)
        if (std::popcount(*it) > 1 && (target == cells.end() || std::popcount(*it) < std::popcount(*target)))
            target = it;

    if (target == cells.end()) {
        std::vector<int> perm(static_cast<std::size_t>(g.order()));
        for (std::size_t k = 0; k < cells.size(); ++k)
            perm[static_cast<std::size_t>(std::countr_zero(cells[k]))] = static_cast<int>(k);
        SmallGraph form = relabel(g, perm);
        if (! best || form < best->form)
            best = Leaf{form, std::move(perm)};
        return;
    }

    // Individualize each vertex of the target cell; only children whose refined quotient is
    // minimal are explored. Swapping two twins is an automorphism fixing every other vertex, so
    // a twin of an already individualized candidate leads to the same leaves.
    auto index = static_cast<std::size_t>(target - cells.begin());
    std::vector<std::pair<std::vector<int>, Cells>> children;
    VertexMask tried = 0;
    for (VertexMask rest = *target; rest; rest &= rest - 1) {
        VertexMask single = rest & (~rest + 1);
        const int v = std::countr_zero(single);
        bool twin = false;
        for (VertexMask t = tried; t && ! twin; t &= t - 1) {
            const int u = std::countr_zero(t);
            twin = (g.row(u) & ~single) == (g.row(v) & ~(VertexMask{1} << u));
        }
        if (twin)
            continue;
        tried |= single;
        Cells child;
        child.reserve(cells.size() + 1);
        child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(index));
        child.push_back(single);
        child.push_back(*target & ~single);
        child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(index) + 1, cells.end());
        refine(g, child);
        auto inv = quotient_invariant(g, child);
        if (! children.empty() && inv < children.front().first)
            children.clear();
        if (children.empty() || inv == children.front().first)
            children.emplace_back(std::move(inv), std::move(child));
    }
    for (auto & [inv, child] : children)
        search(g, child, best);
}

auto prime_labeling(const SmallGraph & g) -> std::vector<int>
{
    Cells cells{g.all_vertices()};
    refine(g, cells);
    std::optional<Leaf> best;
    search(g, cells, best);
    return std::move(best->perm);
}

} // namespace

auto canonical_labeling(const SmallGraph & g) -> std::vector<int>
{
    const int n = g.order();
    if (n <= 1)
        return std::vector<int>(static_cast<std::size_t>(n), 0);

    auto comps = components(g);
    if (comps.size() > 1) {
        // Canonical forms of the components, concatenated in sorted order.
        struct Part {
            SmallGraph form;
            VertexMask mask;
            std::vector<int> perm;
        };
        std::vector<Part> parts;
        for (VertexMask mask : comps) {
            SmallGraph sub = induced_subgraph(g, mask);
            auto perm = canonical_labeling(sub);
            parts.push_back({relabel(sub, perm), mask, std::move(perm)});
        }
        std::stable_sort(parts.begin(), parts.end(), [](const Part & a, const Part & b) { return a.form < b.form; });
        std::vector<int> out(static_cast<std::size_t>(n));
        int offset = 0;
        for (const auto & part : parts) {
            int k = 0;
            for (VertexMask rest = part.mask; rest; rest &= rest - 1, ++k)
                out[static_cast<std::size_t>(std::countr_zero(rest))] = offset + part.perm[static_cast<std::size_t>(k)];
            offset += std::popcount(part.mask);
        }
        return out;
    }

    SmallGraph co = complement(g);
    if (! is_connected(co))
        return canonical_labeling(co);

    return prime_labeling(g);
}

auto canonical_form(const SmallGraph & g) -> SmallGraph
{
    return relabel(g, canonical_labeling(g));
}

auto canonical_code(const SmallGraph & g) -> CanonicalCode
{
    return CanonicalCode(canonical_form(g));
}

auto isomorphic(const SmallGraph & g, const SmallGraph & h) -> bool
{
    if (g.order() != h.order() || g.edge_count() != h.edge_count())
        return false;
    return canonical_form(g) == canonical_form(h);
}

auto CanonicalCode::bits() const -> std::string
{
    std::string out;
    for (int u = 0; u < form_.order(); ++u)
        for (int v = u + 1; v < form_.order(); ++v)
            out += form_.adjacent(u, v) ? '1' : '0';
    return out;
}

} // namespace domorder

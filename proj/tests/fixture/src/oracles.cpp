#include "fixture/oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace fixture {

using domorder::SmallGraph;

auto partition_count(int n) -> std::int64_t
{
    std::vector<std::int64_t> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int s = part; s <= n; ++s)
            ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
    return ways[static_cast<std::size_t>(n)];
}

auto all_partitions(int n) -> std::vector<Terms>
{
    std::vector<Terms> out;
    Terms cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

auto majorizes_padded(const Terms & d, const Terms & e) -> bool
{
    const std::size_t len = std::max(d.size(), e.size());
    long sd = 0, se = 0;
    for (std::size_t k = 0; k < len; ++k) {
        sd += k < d.size() ? d[k] : 0;
        se += k < e.size() ? e[k] : 0;
        if (se > sd)
            return false;
    }
    return sd == se;
}

auto reachable_by_moves(const Terms & d) -> std::set<Terms>
{
    std::set<Terms> seen{d};
    std::queue<Terms> todo;
    todo.push(d);
    while (! todo.empty()) {
        Terms cur = todo.front();
        todo.pop();
        Terms padded = cur;
        padded.push_back(0);
        for (std::size_t i = 0; i < padded.size(); ++i) {
            for (std::size_t j = 0; j < padded.size(); ++j) {
                if (padded[i] < padded[j] + 2)
                    continue;
                Terms next = padded;
                --next[i];
                ++next[j];
                std::sort(next.rbegin(), next.rend());
                while (! next.empty() && next.back() == 0)
                    next.pop_back();
                if (seen.insert(next).second)
                    todo.push(next);
            }
        }
    }
    return seen;
}

namespace {

void realize(const Terms & terms, bool first_only, std::vector<SmallGraph> & out)
{
    const int n = static_cast<int>(terms.size());
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    Terms left = terms;
    // pairs still undecided that touch each vertex
    Terms open(static_cast<std::size_t>(n), n - 1);
    SmallGraph g(n);
    std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
        if (k == pairs.size()) {
            out.push_back(g);
            return first_only;
        }
        auto [u, v] = pairs[k];
        auto & lu = left[static_cast<std::size_t>(u)];
        auto & lv = left[static_cast<std::size_t>(v)];
        auto & ou = open[static_cast<std::size_t>(u)];
        auto & ov = open[static_cast<std::size_t>(v)];
        --ou;
        --ov;
        bool stop = false;
        if (lu > 0 && lv > 0) {
            --lu;
            --lv;
            g.add_edge(u, v);
            if (lu <= ou && lv <= ov)
                stop = rec(k + 1);
            g.remove_edge(u, v);
            ++lu;
            ++lv;
        }
        if (! stop && lu <= ou && lv <= ov)
            stop = rec(k + 1);
        ++ou;
        ++ov;
        return stop;
    };
    for (int x : terms)
        if (x < 0 || x > n - 1)
            return;
    rec(0);
}

} // namespace

auto labelled_realizations(const Terms & terms) -> std::vector<SmallGraph>
{
    std::vector<SmallGraph> out;
    realize(terms, false, out);
    return out;
}

auto has_realization(const Terms & terms) -> bool
{
    std::vector<SmallGraph> out;
    realize(terms, true, out);
    return ! out.empty();
}

auto degrees(const SmallGraph & g) -> Terms
{
    Terms out;
    for (int v = 0; v < g.order(); ++v)
        out.push_back(g.degree(v));
    std::sort(out.rbegin(), out.rend());
    return out;
}

auto isomorphic(const SmallGraph & g, const SmallGraph & h) -> bool
{
    if (g.order() != h.order() || g.edge_count() != h.edge_count() || degrees(g) != degrees(h))
        return false;
    const int n = g.order();
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == n)
            return true;
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)] || g.degree(v) != h.degree(w))
                continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = g.adjacent(u, v) == h.adjacent(image[static_cast<std::size_t>(u)], w);
            if (! ok)
                continue;
            image[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = true;
            if (rec(v + 1))
                return true;
            used[static_cast<std::size_t>(w)] = false;
        }
        return false;
    };
    return rec(0);
}

auto iso_classes(const std::vector<SmallGraph> & graphs) -> std::vector<SmallGraph>
{
    std::vector<SmallGraph> reps;
    for (const auto & g : graphs)
        if (std::none_of(reps.begin(), reps.end(), [&](const SmallGraph & r) { return isomorphic(g, r); }))
            reps.push_back(g);
    return reps;
}

auto contains_induced(const SmallGraph & host, const SmallGraph & pattern) -> bool
{
    const int k = pattern.order();
    const int n = host.order();
    if (k > n)
        return false;
    if (k == 0)
        return true;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        if (std::popcount(mask) != k)
            continue;
        if (isomorphic(domorder::induced_subgraph(host, mask), pattern))
            return true;
    }
    return false;
}

auto burnside_graph_count(int n) -> std::int64_t
{
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t total = 0, group = 0;
    do {
        // cycles of the induced permutation on unordered pairs
        std::vector<std::vector<bool>> seen(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
        int cycles = 0;
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (seen[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
                    continue;
                ++cycles;
                int x = a, y = b;
                while (! seen[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = true;
                    seen[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = true;
                    x = perm[static_cast<std::size_t>(x)];
                    y = perm[static_cast<std::size_t>(y)];
                }
            }
        }
        total += std::int64_t{1} << cycles;
        ++group;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / group;
}

auto unlabelled_graph_count(int n) -> std::int64_t
{
    if (n > 5)
        return burnside_graph_count(n);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    std::vector<SmallGraph> all;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs.size()); ++mask) {
        SmallGraph g(n);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((mask >> k) & 1U)
                g.add_edge(pairs[k].first, pairs[k].second);
        all.push_back(g);
    }
    return static_cast<std::int64_t>(iso_classes(all).size());
}

} // namespace fixture

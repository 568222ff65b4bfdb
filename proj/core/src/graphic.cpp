#include "domorder/graphic.hpp"

#include "domorder/canonical.hpp"
#include "domorder/error.hpp"
#include "domorder/induced.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace domorder {

namespace {

auto eg_sorted(std::span<const int> d) -> bool
{
    const auto n = d.size();
    long total = 0;
    for (int t : d) {
        if (t < 0)
            return false;
        total += t;
    }
    if (total % 2 != 0)
        return false;
    long prefix = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        prefix += d[k - 1];
        long rhs = static_cast<long>(k) * static_cast<long>(k - 1);
        for (std::size_t i = k; i < n; ++i)
            rhs += std::min<long>(d[i], static_cast<long>(k));
        if (prefix > rhs)
            return false;
    }
    return true;
}

class RealizationWalker {
public:
    RealizationWalker(const Partition & d, const std::function<bool(const SmallGraph &)> & visit,
                      const RealizationLimits & limits) :
        n_(static_cast<int>(d.size())), graph_(n_), visit_(visit), limits_(limits)
    {
        for (int v = 0; v < n_; ++v)
            rem_[static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(v)];
    }

    auto run() -> bool
    {
        vertex(0);
        return ! stopped_;
    }

private:
    using Class = std::vector<int>;

    void vertex(int i)
    {
        while (i < n_ && rem(i) == 0)
            ++i;
        if (i == n_) {
            if (++leaves_ > limits_.max_leaves)
                throw ResourceError("realization walk exceeded " + std::to_string(limits_.max_leaves) + " labelled graphs");
            if (! visit_(graph_))
                stopped_ = true;
            return;
        }

        // Later vertices with equal residual degree and equal adjacency to the processed prefix
        // are interchangeable; within such a class neighbours are taken as a prefix.
        std::vector<Class> classes;
        for (int j = i + 1; j < n_; ++j) {
            if (rem(j) == 0)
                continue;
            auto it = std::find_if(classes.begin(), classes.end(), [&](const Class & c) {
                return rem(c.front()) == rem(j) && graph_.row(c.front()) == graph_.row(j);
            });
            if (it == classes.end())
                classes.push_back({j});
            else
                it->push_back(j);
        }
        choose(i, classes, 0, rem(i));
    }

    void choose(int i, const std::vector<Class> & classes, std::size_t k, int need)
    {
        if (stopped_)
            return;
        if (need == 0) {
            if (residual_graphic(i)) {
                int saved = rem(i);
                rem(i) = 0;
                vertex(i + 1);
                rem(i) = saved;
            }
            return;
        }
        if (k == classes.size())
            return;
        std::size_t capacity = 0;
        for (std::size_t c = k; c < classes.size(); ++c)
            capacity += classes[c].size();
        if (capacity < static_cast<std::size_t>(need))
            return;

        const Class & cls = classes[k];
        int most = std::min<int>(need, static_cast<int>(cls.size()));
        for (int take = most; take >= 0 && ! stopped_; --take) {
            for (int t = 0; t < take; ++t) {
                graph_.add_edge(i, cls[static_cast<std::size_t>(t)]);
                --rem(cls[static_cast<std::size_t>(t)]);
            }
            choose(i, classes, k + 1, need - take);
            for (int t = 0; t < take; ++t) {
                graph_.remove_edge(i, cls[static_cast<std::size_t>(t)]);
                ++rem(cls[static_cast<std::size_t>(t)]);
            }
        }
    }

    // Remaining edges all lie among vertices after i, so completion is possible exactly when
    // their residual degrees are graphic.
    auto residual_graphic(int i) -> bool
    {
        std::array<int, SmallGraph::max_vertices> buf{};
        std::size_t k = 0;
        for (int j = i + 1; j < n_; ++j)
            buf[k++] = rem(j);
        std::sort(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(k), std::greater<>());
        return eg_sorted(std::span<const int>(buf.data(), k));
    }

    auto rem(int v) -> int & { return rem_[static_cast<std::size_t>(v)]; }

    int n_;
    SmallGraph graph_;
    std::array<int, SmallGraph::max_vertices> rem_{};
    const std::function<bool(const SmallGraph &)> & visit_;
    const RealizationLimits & limits_;
    std::uint64_t leaves_ = 0;
    bool stopped_ = false;
};

void check_realizable(const Partition & d, const RealizationLimits & limits)
{
    if (! is_graphic(d))
        throw DomainError("sequence " + d.to_string() + " is not graphic");
    if (std::cmp_greater(d.size(), limits.max_vertices))
        throw ResourceError("sequence " + d.to_string() + " has " + std::to_string(d.size())
                            + " terms; the vertex cap is " + std::to_string(limits.max_vertices));
}

} // namespace

auto is_graphic(std::span<const int> degrees) -> bool
{
    std::vector<int> d(degrees.begin(), degrees.end());
    std::sort(d.begin(), d.end(), std::greater<>());
    return eg_sorted(d);
}

auto is_graphic(const Partition & d) -> bool
{
    return eg_sorted(d.terms());
}

auto is_graphic(const DegreeSequence & d) -> bool
{
    return eg_sorted(d.terms());
}

auto is_threshold(const Partition & d) -> bool
{
    if (! is_graphic(d))
        throw DomainError("sequence " + d.to_string() + " is not graphic");
    auto ups = up_neighbors(d);
    return std::none_of(ups.begin(), ups.end(), [](const Partition & q) { return is_graphic(q); });
}

auto for_each_labeled_realization(const Partition & d, const std::function<bool(const SmallGraph &)> & visit,
                                  const RealizationLimits & limits) -> bool
{
    check_realizable(d, limits);
    RealizationWalker walker(d, visit, limits);
    return walker.run();
}

auto realizations(const Partition & d, std::optional<std::size_t> limit, const RealizationLimits & limits) -> RealizationSet
{
    std::set<SmallGraph> forms;
    bool truncated = false;
    for_each_labeled_realization(
        d,
        [&](const SmallGraph & g) {
            forms.insert(canonical_form(g));
            if (limit && forms.size() > *limit) {
                truncated = true;
                return false;
            }
            return true;
        },
        limits);

    RealizationSet out{d, {forms.begin(), forms.end()}, ! truncated};
    if (truncated)
        out.graphs.resize(*limit);
    return out;
}

auto find_potential_witness(const Partition & d, const ForbiddenSet & forbidden, const RealizationLimits & limits)
    -> std::optional<InducedWitness>
{
    std::optional<InducedWitness> found;
    for_each_labeled_realization(
        d,
        [&](const SmallGraph & g) {
            if (auto member = first_induced_member(g, forbidden.members())) {
                found = InducedWitness{canonical_form(g), *member};
                return false;
            }
            return true;
        },
        limits);
    return found;
}

auto potentially_f(const Partition & d, const ForbiddenSet & forbidden, const RealizationLimits & limits) -> bool
{
    return find_potential_witness(d, forbidden, limits).has_value();
}

auto forcibly_f_free(const Partition & d, const ForbiddenSet & forbidden, const RealizationLimits & limits) -> bool
{
    return ! potentially_f(d, forbidden, limits);
}

} // namespace domorder

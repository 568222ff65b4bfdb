#include "domorder/induced.hpp"

#include <algorithm>
#include <numeric>

namespace domorder {

namespace {

class InducedMatcher {
public:
    InducedMatcher(const SmallGraph & host, const SmallGraph & pattern) : host_(host), pattern_(pattern)
    {
        const int np = pattern.order(), nh = host.order();
        order_.resize(static_cast<std::size_t>(np));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });

        // A host vertex can play p only if it has room for p's neighbours and non-neighbours.
        feasible_.resize(static_cast<std::size_t>(np));
        for (int p = 0; p < np; ++p)
            for (int h = 0; h < nh; ++h)
                if (host.degree(h) >= pattern.degree(p)
                    && nh - 1 - host.degree(h) >= np - 1 - pattern.degree(p))
                    feasible_[static_cast<std::size_t>(p)] |= VertexMask{1} << h;
        image_.assign(static_cast<std::size_t>(np), -1);
    }

    auto run() -> bool { return extend(0, 0); }
    [[nodiscard]] auto image() const -> const std::vector<int> & { return image_; }

private:
    auto extend(std::size_t depth, VertexMask used) -> bool
    {
        if (depth == order_.size())
            return true;
        int p = order_[depth];
        VertexMask cand = feasible_[static_cast<std::size_t>(p)] & ~used;
        for (std::size_t j = 0; j < depth && cand; ++j) {
            int q = order_[j];
            int hq = image_[static_cast<std::size_t>(q)];
            cand &= pattern_.adjacent(p, q) ? host_.row(hq) : ~host_.row(hq);
        }
        for (; cand; cand &= cand - 1) {
            int h = std::countr_zero(cand);
            image_[static_cast<std::size_t>(p)] = h;
            if (extend(depth + 1, used | (VertexMask{1} << h)))
                return true;
        }
        image_[static_cast<std::size_t>(p)] = -1;
        return false;
    }

    const SmallGraph & host_;
    const SmallGraph & pattern_;
    std::vector<int> order_;
    std::vector<VertexMask> feasible_;
    std::vector<int> image_;
};

} // namespace

auto find_induced(const SmallGraph & host, const SmallGraph & pattern) -> std::optional<std::vector<int>>
{
    if (pattern.order() > host.order() || pattern.edge_count() > host.edge_count())
        return std::nullopt;
    InducedMatcher matcher(host, pattern);
    if (! matcher.run())
        return std::nullopt;
    return matcher.image();
}

auto contains_induced(const SmallGraph & host, const SmallGraph & pattern) -> bool
{
    return find_induced(host, pattern).has_value();
}

auto first_induced_member(const SmallGraph & g, std::span<const SmallGraph> forbidden) -> std::optional<std::size_t>
{
    for (std::size_t i = 0; i < forbidden.size(); ++i)
        if (contains_induced(g, forbidden[i]))
            return i;
    return std::nullopt;
}

auto is_f_free(const SmallGraph & g, std::span<const SmallGraph> forbidden) -> bool
{
    return ! first_induced_member(g, forbidden).has_value();
}

} // namespace domorder

#include "domorder/dominance_order.hpp"

#include "domorder/error.hpp"
#include "domorder/graphic.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace domorder {

DominanceOrder::DominanceOrder(int total, bool graphic_only, std::vector<Partition> nodes) :
    total_(total), graphic_only_(graphic_only), nodes_(std::move(nodes))
{
    std::sort(nodes_.begin(), nodes_.end(), std::greater<>());
    nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
    const auto n = nodes_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (nodes_[i].sum() != total)
            throw DomainError("node " + nodes_[i].to_string() + " does not sum to " + std::to_string(total));
        index_.emplace(nodes_[i], static_cast<int>(i));
    }

    // Single-box down-moves inside the node set generate the order; the covers are what remains
    // after transitive reduction. Moves always go to a larger index, so a reverse sweep sees
    // every successor's reachability before its own.
    std::vector<std::vector<int>> moves(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto & q : down_neighbors(nodes_[i]))
            if (auto it = index_.find(q); it != index_.end())
                moves[i].push_back(it->second);
        std::sort(moves[i].begin(), moves[i].end());
    }

    words_ = (n + 63) / 64;
    reach_.assign(n * words_, 0);
    auto row = [&](std::size_t i) { return reach_.begin() + static_cast<std::ptrdiff_t>(i * words_); };
    auto test = [&](std::size_t i, std::size_t j) { return (reach_[i * words_ + j / 64] >> (j % 64)) & 1U; };

    up_.resize(n);
    down_.resize(n);
    for (std::size_t i = n; i-- > 0;) {
        for (int j : moves[i]) {
            auto r = row(i);
            auto s = row(static_cast<std::size_t>(j));
            for (std::size_t w = 0; w < words_; ++w)
                r[static_cast<std::ptrdiff_t>(w)] |= s[static_cast<std::ptrdiff_t>(w)];
        }
        for (int j : moves[i]) {
            // j is a cover unless another successor already reaches it
            if (! test(i, static_cast<std::size_t>(j))) {
                down_[i].push_back(j);
                up_[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
            }
        }
        for (int j : moves[i])
            reach_[i * words_ + static_cast<std::size_t>(j) / 64] |= std::uint64_t{1} << (static_cast<std::size_t>(j) % 64);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (int j : down_[i])
            covers_.emplace_back(static_cast<int>(i), j);
    for (auto & ups : up_)
        std::sort(ups.begin(), ups.end());
}

auto DominanceOrder::index_of(const Partition & p) const -> std::optional<int>
{
    if (auto it = index_.find(p); it != index_.end())
        return it->second;
    return std::nullopt;
}

auto DominanceOrder::above(int upper, int lower) const -> bool
{
    auto i = static_cast<std::size_t>(upper), j = static_cast<std::size_t>(lower);
    return (reach_[i * words_ + j / 64] >> (j % 64)) & 1U;
}

auto DominanceOrder::to_json() const -> std::string
{
    nlohmann::json doc;
    doc["total"] = total_;
    doc["graphic_only"] = graphic_only_;
    auto & nodes = doc["nodes"] = nlohmann::json::array();
    for (const auto & p : nodes_)
        nodes.push_back(p.to_exponent_string());
    auto & covers = doc["covers"] = nlohmann::json::array();
    for (auto [u, l] : covers_)
        covers.push_back({u, l});
    return doc.dump();
}

auto DominanceOrder::to_dot() const -> std::string
{
    std::ostringstream out;
    out << "digraph dominance_" << total_ << " {\n";
    out << "  rankdir=TB;\n";
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        out << "  n" << i << " [label=\"" << nodes_[i].to_exponent_string() << "\"];\n";
    for (auto [u, l] : covers_)
        out << "  n" << u << " -> n" << l << ";\n";
    out << "}\n";
    return out.str();
}

auto build_dominance_order(int total, bool graphic_only, int sum_cap) -> DominanceOrder
{
    if (total < 2 || total % 2 != 0)
        throw DomainError("dominance orders need an even total >= 2, got " + std::to_string(total));
    if (total > sum_cap)
        throw ResourceError("total " + std::to_string(total) + " exceeds the cap of " + std::to_string(sum_cap));
    auto nodes = partitions_of(total);
    if (graphic_only)
        std::erase_if(nodes, [](const Partition & p) { return ! is_graphic(p); });
    return DominanceOrder(total, graphic_only, std::move(nodes));
}

} // namespace domorder

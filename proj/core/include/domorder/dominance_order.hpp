#pragma once

#include "domorder/partition.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace domorder {

/// Largest sum build_dominance_order accepts unless told otherwise.
inline constexpr int default_sum_cap = 30;

/// Partitions of a fixed even total under majorization, with Hasse (cover) edges. Nodes are in
/// lexicographically decreasing order, which is a linear extension: an upper node always has a
/// smaller index than anything below it.
class DominanceOrder {
public:
    using Cover = std::pair<int, int>; // (upper, lower)

    DominanceOrder(int total, bool graphic_only, std::vector<Partition> nodes);

    [[nodiscard]] auto total() const noexcept -> int { return total_; }
    [[nodiscard]] auto graphic_only() const noexcept -> bool { return graphic_only_; }
    [[nodiscard]] auto nodes() const noexcept -> const std::vector<Partition> & { return nodes_; }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return nodes_.size(); }
    [[nodiscard]] auto covers() const noexcept -> const std::vector<Cover> & { return covers_; }
    [[nodiscard]] auto index_of(const Partition & p) const -> std::optional<int>;

    /// Nodes covering node i, ascending index.
    [[nodiscard]] auto upper_covers(int i) const -> const std::vector<int> & { return up_[static_cast<std::size_t>(i)]; }
    /// Nodes covered by node i, ascending index.
    [[nodiscard]] auto lower_covers(int i) const -> const std::vector<int> & { return down_[static_cast<std::size_t>(i)]; }
    /// Strictly above in the order (reachability along covers).
    [[nodiscard]] auto above(int upper, int lower) const -> bool;

    [[nodiscard]] auto to_json() const -> std::string;
    [[nodiscard]] auto to_dot() const -> std::string;

private:
    int total_;
    bool graphic_only_;
    std::vector<Partition> nodes_;
    std::unordered_map<Partition, int> index_;
    std::vector<Cover> covers_;
    std::vector<std::vector<int>> up_;
    std::vector<std::vector<int>> down_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> reach_; // row i: bit j set when i is strictly above j
};

/// DomainError for odd or non-positive totals; ResourceError above sum_cap.
[[nodiscard]] auto build_dominance_order(int total, bool graphic_only, int sum_cap = default_sum_cap) -> DominanceOrder;

} // namespace domorder

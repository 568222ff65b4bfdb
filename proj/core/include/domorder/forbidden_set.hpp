#pragma once

#include "domorder/canonical.hpp"
#include "domorder/graph.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace domorder {

/// A finite set of forbidden induced subgraphs, deduplicated up to isomorphism. Members keep
/// their first-seen order so member indices in certificates are stable.
class ForbiddenSet {
public:
    ForbiddenSet() = default;
    explicit ForbiddenSet(std::vector<SmallGraph> members, std::string name = {});

    [[nodiscard]] auto members() const noexcept -> std::span<const SmallGraph> { return members_; }
    [[nodiscard]] auto codes() const noexcept -> std::span<const CanonicalCode> { return codes_; }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return members_.size(); }
    [[nodiscard]] auto empty() const noexcept -> bool { return members_.empty(); }
    [[nodiscard]] auto operator[](std::size_t i) const -> const SmallGraph & { return members_[i]; }

    /// Label given at construction, or "{A, B, ...}" built from member descriptions.
    [[nodiscard]] auto name() const -> std::string;
    /// Order-independent identity: sorted graph6 strings of the canonical forms.
    [[nodiscard]] auto key() const -> const std::string & { return key_; }

    /// No member is an induced subgraph of another member.
    [[nodiscard]] auto is_reduced() const -> bool;
    /// Drops every member that has another member as an induced subgraph. The F-free graphs are
    /// unchanged.
    [[nodiscard]] auto reduced() const -> ForbiddenSet;

    [[nodiscard]] auto contains_member(const SmallGraph & g) const -> bool;

    friend auto operator==(const ForbiddenSet & a, const ForbiddenSet & b) -> bool { return a.key_ == b.key_; }

private:
    std::vector<SmallGraph> members_;
    std::vector<CanonicalCode> codes_;
    std::string label_;
    std::string key_;
};

/// Parses the comma-separated graph-expression list syntax, e.g. "{2K2, P4, diamond}".
[[nodiscard]] auto parse_forbidden_set(std::string_view text) -> ForbiddenSet;

[[nodiscard]] auto is_f_free(const SmallGraph & g, const ForbiddenSet & set) -> bool;

} // namespace domorder

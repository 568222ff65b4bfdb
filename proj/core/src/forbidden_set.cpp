#include "domorder/forbidden_set.hpp"

#include "domorder/graph6.hpp"
#include "domorder/graph_expr.hpp"
#include "domorder/induced.hpp"

#include <algorithm>

namespace domorder {

ForbiddenSet::ForbiddenSet(std::vector<SmallGraph> members, std::string name) : label_(std::move(name))
{
    for (auto & g : members) {
        auto code = canonical_code(g);
        if (std::find(codes_.begin(), codes_.end(), code) != codes_.end())
            continue;
        members_.push_back(g);
        codes_.push_back(std::move(code));
    }
    std::vector<std::string> parts;
    for (const auto & code : codes_)
        parts.push_back(to_graph6(code.form()));
    std::sort(parts.begin(), parts.end());
    for (const auto & part : parts) {
        if (! key_.empty())
            key_ += ',';
        key_ += part;
    }
}

auto ForbiddenSet::name() const -> std::string
{
    if (! label_.empty())
        return label_;
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i)
            out += ", ";
        out += describe(members_[i]);
    }
    return out + "}";
}

auto ForbiddenSet::is_reduced() const -> bool
{
    for (std::size_t i = 0; i < members_.size(); ++i)
        for (std::size_t j = 0; j < members_.size(); ++j)
            if (i != j && contains_induced(members_[j], members_[i]))
                return false;
    return true;
}

auto ForbiddenSet::reduced() const -> ForbiddenSet
{
    // Members are pairwise non-isomorphic, so containment is a strict partial order and keeping
    // the minimal elements is well defined.
    std::vector<SmallGraph> keep;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < members_.size() && minimal; ++j)
            if (i != j && contains_induced(members_[i], members_[j]))
                minimal = false;
        if (minimal)
            keep.push_back(members_[i]);
    }
    return ForbiddenSet(std::move(keep));
}

auto ForbiddenSet::contains_member(const SmallGraph & g) const -> bool
{
    return std::find(codes_.begin(), codes_.end(), canonical_code(g)) != codes_.end();
}

auto parse_forbidden_set(std::string_view text) -> ForbiddenSet
{
    return ForbiddenSet(parse_graph_list(text));
}

auto is_f_free(const SmallGraph & g, const ForbiddenSet & set) -> bool
{
    return is_f_free(g, set.members());
}

} // namespace domorder

#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace domorder {

/// A nonincreasing list of positive integers. Used both as a degree sequence and as the row
/// profile of a Ferrers diagram (row i holds terms()[i] boxes).
class Partition {
public:
    Partition() = default;

    /// Terms in any order; they are sorted nonincreasing. Throws DomainError on a term < 1.
    explicit Partition(std::vector<int> terms);
    Partition(std::initializer_list<int> terms);

    [[nodiscard]] auto terms() const noexcept -> std::span<const int> { return terms_; }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return terms_.size(); }
    [[nodiscard]] auto empty() const noexcept -> bool { return terms_.empty(); }
    [[nodiscard]] auto sum() const noexcept -> int { return sum_; }
    [[nodiscard]] auto operator[](std::size_t i) const -> int { return terms_[i]; }
    [[nodiscard]] auto largest() const noexcept -> int { return terms_.empty() ? 0 : terms_.front(); }

    /// "3^1 2^3 1^1": every run written as base^multiplicity.
    [[nodiscard]] auto to_exponent_string() const -> std::string;
    /// "32221": only meaningful when every term is a single digit.
    [[nodiscard]] auto to_compact_string() const -> std::string;
    /// Compact form for short digit sequences, exponent form once a term exceeds 9 or a run
    /// is longer than four ("32221", "2^5", "5^6 2^1").
    [[nodiscard]] auto to_string() const -> std::string;

    friend auto operator==(const Partition &, const Partition &) -> bool = default;
    /// Lexicographic on terms. Lexicographic order is a linear extension of majorization.
    friend auto operator<=>(const Partition & a, const Partition & b) -> std::strong_ordering
    {
        return a.terms_ <=> b.terms_;
    }

private:
    std::vector<int> terms_;
    int sum_ = 0;
};

/// A nonincreasing degree list that may end in zeros (isolated vertices). The positive prefix is
/// a Partition; zeros are kept as a count.
class DegreeSequence {
public:
    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<int> degrees);

    [[nodiscard]] auto terms() const noexcept -> std::span<const int> { return terms_; }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return terms_.size(); }
    [[nodiscard]] auto sum() const noexcept -> int { return sum_; }
    [[nodiscard]] auto zero_count() const noexcept -> int { return zeros_; }
    [[nodiscard]] auto positive() const -> Partition;
    [[nodiscard]] auto to_string() const -> std::string;

    friend auto operator==(const DegreeSequence &, const DegreeSequence &) -> bool = default;

private:
    std::vector<int> terms_;
    int sum_ = 0;
    int zeros_ = 0;
};

/// Accepts digit-compact form ("32221") or whitespace/comma separated exponent form
/// ("5^6 2^1", "5^6 2", "2^{5}", "(3,2,2,1)"). Throws ParseError.
[[nodiscard]] auto parse_partition(std::string_view text) -> Partition;

/// d majorizes e: equal sums and every prefix sum of e bounded by the matching prefix sum of d.
[[nodiscard]] auto majorizes(const Partition & d, const Partition & e) -> bool;

/// Strict majorization.
[[nodiscard]] auto strictly_majorizes(const Partition & d, const Partition & e) -> bool;

/// All distinct partitions reached by moving one Ferrers box of d to a lower row (possibly a new
/// row). Lexicographically decreasing.
[[nodiscard]] auto down_neighbors(const Partition & d) -> std::vector<Partition>;

/// All distinct partitions q with d in down_neighbors(q). Lexicographically decreasing.
[[nodiscard]] auto up_neighbors(const Partition & d) -> std::vector<Partition>;

/// Degree sequence of the complement of any realization of e padded with isolated vertices up to
/// on_vertices vertices. Zeros are retained. Throws DomainError when e does not fit.
[[nodiscard]] auto complement_sequence(const Partition & e, int on_vertices) -> DegreeSequence;
[[nodiscard]] auto complement_sequence(const DegreeSequence & e, int on_vertices) -> DegreeSequence;

/// Every partition of total, lexicographically decreasing.
[[nodiscard]] auto partitions_of(int total) -> std::vector<Partition>;

/// Builds a partition from (value, multiplicity) runs; convenient for the families used in the
/// lemma checks, where multiplicities may be zero.
[[nodiscard]] auto partition_from_runs(std::initializer_list<std::pair<int, int>> runs) -> Partition;

} // namespace domorder

template <>
struct std::hash<domorder::Partition> {
    auto operator()(const domorder::Partition & p) const noexcept -> std::size_t
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int t : p.terms())
            h = (h ^ static_cast<std::size_t>(t)) * 0x100000001b3ULL;
        return h;
    }
};

#include "domorder/partition.hpp"

#include "domorder/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>
#include <set>

namespace domorder {

namespace {

auto sorted_desc(std::vector<int> v) -> std::vector<int>
{
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

// Run-length view: (value, multiplicity) pairs in nonincreasing value order.
auto runs_of(std::span<const int> terms) -> std::vector<std::pair<int, int>>
{
    std::vector<std::pair<int, int>> runs;
    for (int t : terms) {
        if (! runs.empty() && runs.back().first == t)
            ++runs.back().second;
        else
            runs.emplace_back(t, 1);
    }
    return runs;
}

auto parse_int(std::string_view s, std::string_view context) -> int
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw ParseError("bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
    return value;
}

auto strip_braces(std::string_view s) -> std::string_view
{
    if (s.size() >= 2 && s.front() == '{' && s.back() == '}')
        return s.substr(1, s.size() - 2);
    return s;
}

// Replace one occurrence of `from` by `to` and re-sort.
auto moved(std::span<const int> terms, int from, int to) -> Partition
{
    std::vector<int> v(terms.begin(), terms.end());
    bool removed = false, added = false;
    for (auto & t : v) {
        if (! removed && t == from) {
            --t;
            removed = true;
        }
        else if (! added && t == to) {
            ++t;
            added = true;
        }
    }
    if (! added)
        v.push_back(1);
    std::erase(v, 0);
    return Partition(std::move(v));
}

} // namespace

Partition::Partition(std::vector<int> terms) : terms_(sorted_desc(std::move(terms)))
{
    if (! terms_.empty() && terms_.back() < 1)
        throw DomainError("partition terms must be positive");
    sum_ = std::accumulate(terms_.begin(), terms_.end(), 0);
}

Partition::Partition(std::initializer_list<int> terms) : Partition(std::vector<int>(terms)) {}

auto Partition::to_exponent_string() const -> std::string
{
    std::string out;
    for (auto [value, mult] : runs_of(terms_)) {
        if (! out.empty())
            out += ' ';
        out += std::to_string(value) + "^" + std::to_string(mult);
    }
    return out;
}

auto Partition::to_compact_string() const -> std::string
{
    std::string out;
    for (int t : terms_) {
        if (t > 9)
            throw DomainError("compact form needs single-digit terms");
        out += static_cast<char>('0' + t);
    }
    return out;
}

auto Partition::to_string() const -> std::string
{
    if (terms_.empty())
        return "()";
    auto runs = runs_of(terms_);
    bool compact = terms_.front() <= 9
        && std::all_of(runs.begin(), runs.end(), [](auto r) { return r.second <= 4; });
    return compact ? to_compact_string() : to_exponent_string();
}

DegreeSequence::DegreeSequence(std::vector<int> degrees) : terms_(sorted_desc(std::move(degrees)))
{
    if (! terms_.empty() && terms_.back() < 0)
        throw DomainError("degrees must be nonnegative");
    sum_ = std::accumulate(terms_.begin(), terms_.end(), 0);
    zeros_ = static_cast<int>(std::count(terms_.begin(), terms_.end(), 0));
}

auto DegreeSequence::positive() const -> Partition
{
    return Partition(std::vector<int>(terms_.begin(), terms_.end() - zeros_));
}

auto DegreeSequence::to_string() const -> std::string
{
    std::string out = "(";
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(terms_[i]);
    }
    return out + ")";
}

auto parse_partition(std::string_view text) -> Partition
{
    auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (! text.empty() && is_space(text.front()))
        text.remove_prefix(1);
    while (! text.empty() && is_space(text.back()))
        text.remove_suffix(1);
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
        text = text.substr(1, text.size() - 2);
    if (text.empty())
        throw ParseError("empty partition");

    bool tokenized = text.find_first_of("^, \t\n") != std::string_view::npos;
    std::vector<int> terms;
    if (! tokenized) {
        for (char c : text) {
            if (! std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("unexpected character '" + std::string(1, c) + "' in '" + std::string(text) + "'");
            if (c == '0')
                throw ParseError("zero term in '" + std::string(text) + "'");
            terms.push_back(c - '0');
        }
        return Partition(std::move(terms));
    }

    std::size_t pos = 0;
    while (pos < text.size()) {
        if (is_space(text[pos]) || text[pos] == ',') {
            ++pos;
            continue;
        }
        std::size_t end = pos;
        while (end < text.size() && ! is_space(text[end]) && text[end] != ',')
            ++end;
        std::string_view token = text.substr(pos, end - pos);
        pos = end;

        int base = 0, mult = 1;
        if (auto caret = token.find('^'); caret != std::string_view::npos) {
            base = parse_int(strip_braces(token.substr(0, caret)), text);
            mult = parse_int(strip_braces(token.substr(caret + 1)), text);
            if (mult < 1)
                throw ParseError("multiplicity must be positive in '" + std::string(text) + "'");
        }
        else
            base = parse_int(token, text);
        if (base < 1)
            throw ParseError("terms must be positive in '" + std::string(text) + "'");
        terms.insert(terms.end(), static_cast<std::size_t>(mult), base);
    }
    if (terms.empty())
        throw ParseError("empty partition");
    return Partition(std::move(terms));
}

auto majorizes(const Partition & d, const Partition & e) -> bool
{
    if (d.sum() != e.sum())
        return false;
    int pd = 0, pe = 0;
    for (std::size_t k = 0; k < std::min(d.size(), e.size()); ++k) {
        pd += d[k];
        pe += e[k];
        if (pe > pd)
            return false;
    }
    return true;
}

auto strictly_majorizes(const Partition & d, const Partition & e) -> bool
{
    return d != e && majorizes(d, e);
}

auto down_neighbors(const Partition & d) -> std::vector<Partition>
{
    // Moving a box from a row of length x to a row of length y (y = 0 opens a new row) changes
    // the multiset only when x >= y + 2; equal-length rows are interchangeable.
    std::set<int> values(d.terms().begin(), d.terms().end());
    std::set<Partition, std::greater<>> out;
    for (int x : values) {
        for (int y : values)
            if (x >= y + 2)
                out.insert(moved(d.terms(), x, y));
        if (x >= 2)
            out.insert(moved(d.terms(), x, 0));
    }
    return {out.begin(), out.end()};
}

auto up_neighbors(const Partition & d) -> std::vector<Partition>
{
    // Move one box from a row of length b to a row of length a >= b (distinct rows).
    auto runs = runs_of(d.terms());
    std::set<Partition, std::greater<>> out;
    for (auto [a, ma] : runs)
        for (auto [b, mb] : runs) {
            if (b > a || (a == b && ma < 2))
                continue;
            std::vector<int> v(d.terms().begin(), d.terms().end());
            auto ia = std::find(v.begin(), v.end(), a);
            ++*ia;
            auto ib = std::find(std::make_reverse_iterator(v.end()), std::make_reverse_iterator(v.begin()), b);
            --*ib;
            std::erase(v, 0);
            out.insert(Partition(std::move(v)));
        }
    return {out.begin(), out.end()};
}

auto complement_sequence(const DegreeSequence & e, int on_vertices) -> DegreeSequence
{
    if (std::cmp_greater(e.size(), on_vertices))
        throw DomainError("sequence " + e.to_string() + " has more than " + std::to_string(on_vertices) + " terms");
    if (! e.terms().empty() && e.terms().front() > on_vertices - 1)
        throw DomainError("term " + std::to_string(e.terms().front()) + " exceeds " + std::to_string(on_vertices - 1));
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(on_vertices));
    for (int t : e.terms())
        out.push_back(on_vertices - 1 - t);
    out.resize(static_cast<std::size_t>(on_vertices), on_vertices - 1);
    return DegreeSequence(std::move(out));
}

auto complement_sequence(const Partition & e, int on_vertices) -> DegreeSequence
{
    return complement_sequence(DegreeSequence(std::vector<int>(e.terms().begin(), e.terms().end())), on_vertices);
}

auto partitions_of(int total) -> std::vector<Partition>
{
    std::vector<Partition> out;
    if (total < 1)
        return out;
    std::vector<int> current;
    std::function<void(int, int)> extend = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int t = std::min(remaining, cap); t >= 1; --t) {
            current.push_back(t);
            extend(remaining - t, t);
            current.pop_back();
        }
    };
    extend(total, total);
    return out;
}

auto partition_from_runs(std::initializer_list<std::pair<int, int>> runs) -> Partition
{
    std::vector<int> terms;
    for (auto [value, mult] : runs) {
        if (mult < 0)
            throw DomainError("negative multiplicity");
        terms.insert(terms.end(), static_cast<std::size_t>(mult), value);
    }
    return Partition(std::move(terms));
}

} // namespace domorder

#include "domorder/graph_expr.hpp"

#include "domorder/canonical.hpp"
#include "domorder/error.hpp"
#include "domorder/graph6.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace domorder {

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    auto parse() -> SmallGraph
    {
        SmallGraph g = parse_expr();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return g;
    }

private:
    [[noreturn]] void fail(const std::string & why) const
    {
        throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    auto peek() -> char
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    auto accept(char c) -> bool
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    // "v" as a whole word.
    auto accept_join() -> bool
    {
        if (peek() != 'v')
            return false;
        if (pos_ + 1 < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_ + 1])))
            return false;
        ++pos_;
        return true;
    }

    auto number() -> int
    {
        skip_space();
        std::size_t start = pos_;
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1000)
                fail("number too large");
            ++pos_;
        }
        if (pos_ == start)
            fail("expected a number");
        return static_cast<int>(value);
    }

    auto word() -> std::string
    {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    auto parse_expr() -> SmallGraph
    {
        SmallGraph g = parse_union();
        while (accept_join())
            g = join(g, parse_union());
        return g;
    }

    auto parse_union() -> SmallGraph
    {
        SmallGraph g = parse_term();
        while (accept('+'))
            g = disjoint_union(g, parse_term());
        return g;
    }

    auto parse_term() -> SmallGraph
    {
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            int copies = number();
            accept('*');
            return disjoint_copies(parse_factor(), copies);
        }
        return parse_factor();
    }

    auto parse_factor() -> SmallGraph
    {
        char c = peek();
        if (c == '(') {
            ++pos_;
            SmallGraph g = parse_expr();
            if (! accept(')'))
                fail("expected ')'");
            return g;
        }
        if (c == 'K' || c == 'C' || c == 'P') {
            ++pos_;
            int n = number();
            switch (c) {
            case 'K':
                return complete_graph(n);
            case 'C':
                if (n < 3)
                    fail("C" + std::to_string(n) + " is not a cycle");
                return cycle_graph(n);
            default:
                if (n < 1)
                    fail("P0 is not a path");
                return path_graph(n);
            }
        }
        if (text_.substr(pos_).starts_with("g6:")) {
            pos_ += 3;
            std::size_t start = pos_;
            while (pos_ < text_.size() && text_[pos_] >= 63 && text_[pos_] <= 126)
                ++pos_;
            return from_graph6(text_.substr(start, pos_ - start));
        }
        std::size_t start = pos_;
        std::string name = word();
        if (name == "diamond")
            return diamond_graph();
        if (name == "paw")
            return SmallGraph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
        if (name == "claw")
            return SmallGraph(4, {{0, 1}, {0, 2}, {0, 3}});
        if (name == "bull")
            return SmallGraph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}});
        if (name == "co") {
            if (! accept('('))
                fail("expected '(' after co");
            SmallGraph g = parse_expr();
            if (! accept(')'))
                fail("expected ')'");
            return complement(g);
        }
        pos_ = start;
        fail(name.empty() ? "expected a graph" : "unknown graph '" + name + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

auto named_connected(const SmallGraph & g) -> std::string;

auto wrap(const std::string & s) -> std::string
{
    return s.find_first_of(" +") == std::string::npos ? s : "(" + s + ")";
}

auto describe_impl(const SmallGraph & g) -> std::string
{
    if (g.order() == 0)
        return "K0";
    auto comps = components(g);
    if (comps.size() == 1)
        return named_connected(g);

    struct Group {
        SmallGraph form;
        int count;
    };
    std::vector<Group> groups;
    for (VertexMask mask : comps) {
        SmallGraph form = canonical_form(induced_subgraph(g, mask));
        auto it = std::find_if(groups.begin(), groups.end(), [&](const Group & gr) { return gr.form == form; });
        if (it == groups.end())
            groups.push_back({form, 1});
        else
            ++it->count;
    }
    std::sort(groups.begin(), groups.end(), [](const Group & a, const Group & b) {
        if (a.form.order() != b.form.order())
            return a.form.order() > b.form.order();
        if (a.form.edge_count() != b.form.edge_count())
            return a.form.edge_count() > b.form.edge_count();
        return a.form < b.form;
    });
    std::string out;
    for (const auto & [form, count] : groups) {
        if (! out.empty())
            out += '+';
        std::string name = named_connected(form);
        if (count > 1)
            out += std::to_string(count) + (name.find(' ') == std::string::npos ? name : "(" + name + ")");
        else
            out += name.find(' ') == std::string::npos ? name : "(" + name + ")";
    }
    return out;
}

auto named_connected(const SmallGraph & g) -> std::string
{
    const int n = g.order();
    const int m = g.edge_count();
    if (n == 1)
        return "K1";
    if (m == n * (n - 1) / 2)
        return "K" + std::to_string(n);
    if (n >= 4 && is_regular_of(g, 2))
        return "C" + std::to_string(n);
    if (m == n - 1 && max_degree(g) <= 2)
        return "P" + std::to_string(n);
    static const std::vector<std::pair<std::string, SmallGraph>> specials = [] {
        std::vector<std::pair<std::string, SmallGraph>> out;
        for (const char * name : {"diamond", "paw", "claw", "bull"})
            out.emplace_back(name, canonical_form(build_named(name)));
        return out;
    }();
    SmallGraph form = canonical_form(g);
    for (const auto & [name, special] : specials)
        if (special == form)
            return name;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1)
            return "K1 v " + wrap(describe_impl(delete_vertex(g, v)));
    SmallGraph co = complement(g);
    if (! is_connected(co))
        return "co(" + describe_impl(co) + ")";
    return "g6:" + to_graph6(form);
}

} // namespace

auto build_named(std::string_view expr) -> SmallGraph
{
    return ExprParser(expr).parse();
}

auto parse_graph_list(std::string_view text) -> std::vector<SmallGraph>
{
    auto trim = [](std::string_view s) {
        while (! s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (! s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.size() >= 2 && text.front() == '{' && text.back() == '}')
        text = trim(text.substr(1, text.size() - 2));
    if (text.empty())
        throw ParseError("empty graph list");

    std::vector<SmallGraph> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        char c = i < text.size() ? text[i] : ',';
        if (c == '(')
            ++depth;
        else if (c == ')')
            --depth;
        else if (c == ',' && depth == 0) {
            auto item = trim(text.substr(start, i - start));
            if (item.empty())
                throw ParseError("empty entry in graph list '" + std::string(text) + "'");
            out.push_back(build_named(item));
            start = i + 1;
        }
    }
    return out;
}

auto describe(const SmallGraph & g) -> std::string
{
    return describe_impl(g);
}

} // namespace domorder

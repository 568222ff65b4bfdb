#include "domorder/graph6.hpp"

#include "domorder/error.hpp"

#include <cctype>

namespace domorder {

auto to_graph6(const SmallGraph & g) -> std::string
{
    const int n = g.order();
    std::string out(1, static_cast<char>(n + 63));
    int value = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(value + 63);
                value = filled = 0;
            }
        }
    if (filled > 0)
        out += static_cast<char>((value << (6 - filled)) + 63);
    return out;
}

auto from_graph6(std::string_view text) -> SmallGraph
{
    constexpr std::string_view header = ">>graph6<<";
    while (! text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    while (! text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    if (text.starts_with(header))
        text.remove_prefix(header.size());
    if (text.empty())
        throw ParseError("empty graph6 string");
    for (char c : text)
        if (c < 63 || c > 126)
            throw ParseError("invalid graph6 byte in '" + std::string(text) + "'");

    int n = text[0] - 63;
    if (n == 63)
        throw ResourceError("graph6 order above " + std::to_string(SmallGraph::max_vertices));
    if (n > SmallGraph::max_vertices)
        throw ResourceError("graph6 order " + std::to_string(n) + " above " + std::to_string(SmallGraph::max_vertices));

    const int bits = n * (n - 1) / 2;
    const std::size_t expected = 1 + static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() != expected)
        throw ParseError("graph6 string '" + std::string(text) + "' has wrong length for order " + std::to_string(n));

    SmallGraph g(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = text[1 + static_cast<std::size_t>(k / 6)] - 63;
            if ((byte >> (5 - k % 6)) & 1)
                g.add_edge(i, j);
        }
    for (; k % 6 != 0; ++k) {
        int byte = text[1 + static_cast<std::size_t>(k / 6)] - 63;
        if ((byte >> (5 - k % 6)) & 1)
            throw ParseError("nonzero graph6 padding in '" + std::string(text) + "'");
    }
    return g;
}

} // namespace domorder

#include "tdc/io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "tdc/errors.hpp"

namespace tdc {

namespace {

bool is_blank(std::string_view s)
{
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            return false;
    return true;
}

// Parses a whole line of whitespace-separated nonnegative integers.
std::vector<long> parse_ints(std::string_view line, std::size_t line_no)
{
    std::vector<long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(line[i])))
            throw ParseError("expected a nonnegative integer", line_no, i);
        long value = 0;
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
            value = value * 10 + (line[i] - '0');
            if (value > Graph::max_vertices * 1000L)
                throw ParseError("integer out of range", line_no, i);
            ++i;
        }
        out.push_back(value);
    }
    return out;
}

} // namespace

Graph from_edge_list(std::string_view text)
{
    std::size_t pos = 0;
    std::size_t line_no = 0;
    long n = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<VertexSet> seen;

    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        ++line_no;
        if (!is_blank(line)) {
            auto nums = parse_ints(line, line_no);
            if (n < 0) {
                if (nums.size() != 1)
                    throw ParseError("first line must hold the vertex count alone", line_no, 0);
                n = nums[0];
                if (n > Graph::max_vertices)
                    throw ParseError("vertex count exceeds " + std::to_string(Graph::max_vertices),
                                     line_no, 0);
                seen.assign(static_cast<std::size_t>(n), 0);
            }
            else {
                if (nums.size() != 2)
                    throw ParseError("edge line must hold exactly two vertices", line_no, 0);
                long u = nums[0], v = nums[1];
                if (u >= n || v >= n)
                    throw ParseError("vertex out of range 0.." + std::to_string(n - 1), line_no, 0);
                if (u == v)
                    throw ParseError("self-loop", line_no, 0);
                if ((seen[static_cast<std::size_t>(u)] >> v) & 1u)
                    throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v),
                                     line_no, 0);
                seen[static_cast<std::size_t>(u)] |= VertexSet{1} << v;
                seen[static_cast<std::size_t>(v)] |= VertexSet{1} << u;
                edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
            }
        }
        if (nl == std::string_view::npos)
            break;
        pos = nl + 1;
    }
    if (n < 0)
        throw ParseError("empty input", 1, 0);
    return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g)
{
    std::ostringstream os;
    os << g.order() << '\n';
    for (auto [u, v] : g.edge_list())
        os << u << ' ' << v << '\n';
    return os.str();
}

Graph from_graph6(std::string_view text)
{
    // Strip one trailing newline; anything else must be payload bytes.
    if (!text.empty() && text.back() == '\n')
        text.remove_suffix(1);
    if (!text.empty() && text.back() == '\r')
        text.remove_suffix(1);
    if (text.empty())
        throw ParseError("empty graph6 string", 1, 0);
    if (text.front() == '>')
        throw ParseError("header lines are not accepted", 1, 0);
    if (text.front() == 126)
        throw ParseError("multi-byte order fields (n > 62) are not supported", 1, 0);

    int n = text.front() - 63;
    if (n < 0 || n > 62)
        throw ParseError("order byte out of range", 1, 0);

    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t expected = 1 + (nbits + 5) / 6;
    if (text.size() != expected)
        throw ParseError("expected " + std::to_string(expected) + " bytes for order "
                         + std::to_string(n) + ", got " + std::to_string(text.size()),
                         1, text.size() < expected ? text.size() : expected);

    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            std::size_t byte_idx = 1 + bit / 6;
            char c = text[byte_idx];
            if (c < 63 || c > 126)
                throw ParseError("byte out of graph6 range", 1, byte_idx);
            int sextet = c - 63;
            if ((sextet >> (5 - bit % 6)) & 1)
                edges.emplace_back(i, j);
        }
    }
    // Padding bits must be zero.
    for (; bit % 6 != 0; ++bit) {
        std::size_t byte_idx = 1 + bit / 6;
        int sextet = text[byte_idx] - 63;
        if ((sextet >> (5 - bit % 6)) & 1)
            throw ParseError("nonzero padding bit", 1, byte_idx);
    }
    for (std::size_t i = 1; i < text.size(); ++i)
        if (text[i] < 63 || text[i] > 126)
            throw ParseError("byte out of graph6 range", 1, i);
    return Graph(n, edges);
}

std::string to_graph6(const Graph& g)
{
    int n = g.order();
    if (n > 62)
        throw InvalidParameter("graph6 output supports n <= 62");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int sextet = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            sextet = (sextet << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + sextet));
                sextet = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>(63 + (sextet << (6 - filled))));
    return out;
}

} // namespace tdc

#include "spexlab/graph6.hpp"

#include <cstdint>

#include "spexlab/error.hpp"

namespace spexlab {

namespace {

constexpr int kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::uint64_t kMaxOrder = (std::uint64_t{1} << 36) - 1;

void encode_order(std::uint64_t n, std::string& out)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kOffset));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
    }
}

int sextet(std::string_view s, std::size_t pos, std::size_t base)
{
    const int c = static_cast<unsigned char>(s[pos]);
    if (c < kOffset || c > kOffset + 63)
        throw ParseError("byte out of graph6 range (" + std::to_string(c) + ")", base + pos);
    return c - kOffset;
}

} // namespace

std::string graph6_encode(const Graph& g)
{
    const int n = g.order();
    std::string out;
    encode_order(static_cast<std::uint64_t>(n), out);

    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kOffset));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
    return out;
}

Graph graph6_decode(std::string_view text)
{
    std::size_t base = 0;
    if (text.starts_with(kHeader)) {
        text.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw ParseError("empty graph6 string", base);

    std::size_t pos = 0;
    std::uint64_t n = 0;
    const int first = sextet(text, 0, base);
    if (first < 63) {
        n = static_cast<std::uint64_t>(first);
        pos = 1;
    } else if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126) {
        if (text.size() < 8)
            throw ParseError("truncated 8-byte order header", base + text.size());
        for (std::size_t i = 2; i < 8; ++i)
            n = (n << 6) | static_cast<std::uint64_t>(sextet(text, i, base));
        pos = 8;
    } else {
        if (text.size() < 4)
            throw ParseError("truncated 4-byte order header", base + text.size());
        for (std::size_t i = 1; i < 4; ++i)
            n = (n << 6) | static_cast<std::uint64_t>(sextet(text, i, base));
        pos = 4;
    }
    if (n > kMaxOrder || n > static_cast<std::uint64_t>(INT32_MAX))
        throw ParseError("order " + std::to_string(n) + " out of range", base);

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t expected = (bits + 5) / 6;
    const std::uint64_t have = text.size() - pos;
    if (have != expected) {
        throw ParseError("expected " + std::to_string(expected) + " edge bytes for order " +
                             std::to_string(n) + ", found " + std::to_string(have),
                         base + (have < expected ? text.size() : pos + expected));
    }

    const int order = static_cast<int>(n);
    GraphBuilder b(order);
    std::uint64_t k = 0;
    for (int j = 1; j < order; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const std::size_t at = pos + k / 6;
            const int val = sextet(text, at, base);
            if ((val >> (5 - k % 6)) & 1)
                b.add_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        const std::size_t at = pos + bits / 6;
        const int val = sextet(text, at, base);
        const int pad = 6 - static_cast<int>(bits % 6);
        if ((val & ((1 << pad) - 1)) != 0)
            throw ParseError("non-zero padding bits", base + at);
    }
    return std::move(b).build();
}

std::vector<Graph> read_graph6_lines(std::istream& in)
{
    std::vector<Graph> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (line.empty())
            continue;
        try {
            out.push_back(graph6_decode(line));
        } catch (const ParseError& e) {
            throw InvalidInput("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

} // namespace spexlab

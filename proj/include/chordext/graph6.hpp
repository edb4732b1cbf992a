#pragma once

// graph6 encoding as defined by nauty's formats.txt: an order prefix N(n)
// followed by the upper triangle of the adjacency matrix, column by column
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per byte with 63
// added to each byte.

#include "errors.hpp"
#include "graph.hpp"

#include <string>
#include <string_view>

namespace chordext {

inline std::string encode_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }

    int chunk = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
    return out;
}

/// Decodes one graph6 string. An optional ">>graph6<<" header and a trailing
/// newline are accepted. Throws ParseError with the offending byte offset.
inline Graph decode_graph6(std::string_view s)
{
    constexpr std::string_view header = ">>graph6<<";
    std::size_t pos = 0;
    if (s.starts_with(header)) pos = header.size();
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);

    auto byte_at = [&](std::size_t i) {
        if (i >= s.size()) throw ParseError("graph6 input truncated", i);
        int b = static_cast<unsigned char>(s[i]);
        if (b < 63 || b > 126) throw ParseError("byte outside graph6 range 63..126", i);
        return b - 63;
    };

    long long n = 0;
    if (pos >= s.size()) throw ParseError("empty graph6 input", pos);
    if (byte_at(pos) < 63) {
        n = byte_at(pos);
        pos += 1;
    } else if (pos + 1 < s.size() && static_cast<unsigned char>(s[pos + 1]) == 126) {
        for (int k = 0; k < 6; ++k) n = (n << 6) | byte_at(pos + 2 + k);
        pos += 8;
    } else {
        for (int k = 0; k < 3; ++k) n = (n << 6) | byte_at(pos + 1 + k);
        pos += 4;
    }
    if (n > kMaxOrder) throw ParseError("graph order " + std::to_string(n) + " exceeds supported maximum", pos);

    const long long bits = n * (n - 1) / 2;
    const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() != expected) {
        throw ParseError("graph6 payload length " + std::to_string(s.size() - pos) + " does not match order " +
                             std::to_string(n),
                         std::min(s.size(), expected));
    }

    std::vector<Edge> edges;
    long long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int b = byte_at(pos + static_cast<std::size_t>(k / 6));
            if ((b >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    if (k % 6 != 0) {
        int last = byte_at(expected - 1);
        if (last & ((1 << (6 - k % 6)) - 1)) throw ParseError("nonzero padding bits", expected - 1);
    }
    return Graph(static_cast<int>(n), edges);
}

} // namespace chordext

#ifndef BALANCE_GRAPH6_HPP
#define BALANCE_GRAPH6_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include "balance/graph.hpp"

// graph6 text format: 6-bit big-endian packing of the upper adjacency
// triangle in column order (x01, x02, x12, x03, ...), each 6-bit group
// offset by 63 into the printable range 63..126. The vertex count is one
// byte n+63 for n <= 62, or '~' followed by three bytes for n <= 258047.

namespace balance {

namespace detail {

inline constexpr int kMaxParseVertices = 10000;

inline bool g6_printable(unsigned char c) { return c >= 63 && c <= 126; }

inline std::string_view strip_g6_header(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    return text;
}

} // namespace detail

inline Graph parse_graph6(std::string_view text) {
    using namespace detail;
    // tolerate a trailing newline, nothing else
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    text = strip_g6_header(text);
    if (text.empty()) throw parse_error("graph6: empty input");

    std::size_t pos = 0;
    auto take = [&]() -> unsigned {
        if (pos >= text.size()) throw parse_error("graph6: truncated input");
        unsigned char c = (unsigned char)text[pos++];
        if (!g6_printable(c)) throw parse_error("graph6: non-printable byte");
        return (unsigned)c - 63;
    };

    long long n;
    if ((unsigned char)text[0] != 126) {
        n = (long long)take();
    } else {
        ++pos; // consume '~'
        if (pos < text.size() && (unsigned char)text[pos] == 126)
            throw parse_error("graph6: 8-byte vertex count form not supported");
        long long a = (long long)take(), b = (long long)take(), c = (long long)take();
        n = (a << 12) | (b << 6) | c;
        if (n <= 62) throw parse_error("graph6: malformed length header (non-canonical long form)");
    }
    if (n == 0) throw parse_error("graph6: empty graph rejected");
    if (n > detail::kMaxParseVertices) throw parse_error("graph6: vertex count too large");

    Graph g((int)n);
    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    long long bit = 0;
    int col = 1, rowv = 0;
    for (long long i = 0; i < nbytes; ++i) {
        unsigned group = take();
        for (int b = 5; b >= 0; --b, ++bit) {
            bool set = (group >> b) & 1;
            if (bit < nbits) {
                if (set) g.add_edge(rowv, col);
                if (++rowv == col) {
                    rowv = 0;
                    ++col;
                }
            } else if (set) {
                throw parse_error("graph6: nonzero padding bits");
            }
        }
    }
    if (pos != text.size()) throw parse_error("graph6: trailing garbage");
    return g;
}

inline std::string write_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 258047) throw std::invalid_argument("graph6: vertex count exceeds the 3-byte form");
    std::string out;
    if (n <= 62) {
        out.push_back((char)(n + 63));
    } else {
        out.push_back((char)126);
        out.push_back((char)(((n >> 12) & 63) + 63));
        out.push_back((char)(((n >> 6) & 63) + 63));
        out.push_back((char)((n & 63) + 63));
    }
    unsigned group = 0;
    int nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            group = (group << 1) | (g.has_edge(row, col) ? 1u : 0u);
            if (++nbits == 6) {
                out.push_back((char)(group + 63));
                group = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back((char)((group << (6 - nbits)) + 63));
    return out;
}

// Plain edge-list format: first line is the vertex count, then one
// "u v" pair per line, 0-indexed. Loops and duplicate edges are rejected.
inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    long long n = -1;
    Graph g;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n <= 0 || n > detail::kMaxParseVertices)
                throw parse_error("edge list: bad vertex count on line 1");
            std::string rest;
            if (ls >> rest) throw parse_error("edge list: trailing tokens on line 1");
            g = Graph((int)n);
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v)) throw parse_error("edge list: bad edge on line " + std::to_string(lineno));
        std::string rest;
        if (ls >> rest) throw parse_error("edge list: trailing tokens on line " + std::to_string(lineno));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("edge list: vertex index out of range on line " + std::to_string(lineno));
        if (u == v) throw parse_error("edge list: loop on line " + std::to_string(lineno));
        if (g.has_edge((int)u, (int)v))
            throw parse_error("edge list: duplicate edge on line " + std::to_string(lineno));
        g.add_edge((int)u, (int)v);
    }
    if (n < 0) throw parse_error("edge list: empty input");
    return g;
}

} // namespace balance

#endif

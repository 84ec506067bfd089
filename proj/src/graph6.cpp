#include "tstar/graph.hpp"

#include <stdexcept>

namespace tstar {

namespace {

constexpr std::uint64_t kMaxOrder = 68719476735ULL; // 2^36 - 1 per the format

void append_sextets(std::string& out, std::uint64_t value, int count) {
    for (int i = count - 1; i >= 0; --i)
        out.push_back(static_cast<char>(63 + ((value >> (6 * i)) & 63)));
}

} // namespace

std::string graph6_encode(const Graph& g) {
    const std::uint64_t v = g.order();
    if (v > kMaxOrder)
        throw std::invalid_argument("graph6_encode: graph too large for the format");
    std::string out;
    if (v <= 62) {
        out.push_back(static_cast<char>(63 + v));
    } else if (v <= 258047) {
        out.push_back('~');
        append_sextets(out, v, 3);
    } else {
        out.push_back('~');
        out.push_back('~');
        append_sextets(out, v, 6);
    }

    // upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    int fill = 0;
    unsigned chunk = 0;
    for (std::size_t col = 1; col < v; ++col) {
        for (std::size_t row = 0; row < col; ++row) {
            chunk = (chunk << 1) | (g.adjacent(row, col) ? 1u : 0u);
            if (++fill == 6) {
                out.push_back(static_cast<char>(63 + chunk));
                fill = 0;
                chunk = 0;
            }
        }
    }
    if (fill != 0)
        out.push_back(static_cast<char>(63 + (chunk << (6 - fill))));
    return out;
}

Graph graph6_decode(std::string_view s) {
    std::size_t pos = 0;
    const auto need = [&](std::size_t n) {
        if (s.size() - pos < n)
            throw std::invalid_argument("graph6_decode: truncated input");
    };
    const auto sextet = [&]() -> std::uint64_t {
        need(1);
        const unsigned char c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6_decode: byte outside printable range");
        return c - 63;
    };

    need(1);
    std::uint64_t v;
    if (s[pos] == '~') {
        ++pos;
        need(1);
        if (s[pos] == '~') {
            ++pos;
            v = 0;
            for (int i = 0; i < 6; ++i)
                v = (v << 6) | sextet();
        } else {
            v = 0;
            for (int i = 0; i < 3; ++i)
                v = (v << 6) | sextet();
        }
    } else {
        v = sextet();
        if (v > 62)
            throw std::invalid_argument("graph6_decode: malformed size header");
    }

    const std::uint64_t bits = v * (v - (v > 0 ? 1 : 0)) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (s.size() - pos != bytes)
        throw std::invalid_argument("graph6_decode: body length mismatch");

    GraphBuilder b(static_cast<std::size_t>(v));
    std::uint64_t bitpos = 0;
    std::size_t col = 1, row = 0;
    for (std::uint64_t i = 0; i < bytes; ++i) {
        const std::uint64_t chunk = sextet();
        for (int k = 5; k >= 0; --k, ++bitpos) {
            const bool bit = (chunk >> k) & 1;
            if (bitpos < bits) {
                if (bit) {
                    b.add_edge(row, col);
                }
                if (++row == col) {
                    row = 0;
                    ++col;
                }
            } else if (bit) {
                throw std::invalid_argument("graph6_decode: nonzero trailing bits");
            }
        }
    }
    return std::move(b).build();
}

} // namespace tstar

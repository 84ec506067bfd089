#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tstar {

// Immutable simple graph on dense vertex ids with bitset adjacency rows.
class Graph {
public:
    Graph() = default;
    // rows: v rows of words_per_row() packed words each; must be symmetric
    // with a zero diagonal and no bits at or beyond column v.
    Graph(std::size_t v, std::vector<std::uint64_t> rows);

    std::size_t order() const { return v_; }
    std::size_t words_per_row() const { return w_; }

    bool adjacent(std::size_t u, std::size_t w) const;
    std::size_t degree(std::size_t u) const;
    // |N(u) ∩ N(w)|, bitset AND + popcount
    std::size_t common_neighbors(std::size_t u, std::size_t w) const;

    bool is_regular() const { return regular_degree().has_value(); }
    std::optional<std::size_t> regular_degree() const;
    bool connected() const; // breadth-first traversal; empty graph counts as connected
    std::size_t edge_count() const;

    std::span<const std::uint64_t> row(std::size_t u) const;
    std::vector<std::size_t> neighbors(std::size_t u) const;

    // New graph with vertex i renamed perm[i]; perm must be a permutation.
    Graph relabeled(std::span<const std::size_t> perm) const;

    bool operator==(const Graph& o) const { return v_ == o.v_ && rows_ == o.rows_; }

private:
    void check_vertex(std::size_t u) const;

    std::size_t v_ = 0;
    std::size_t w_ = 0;
    std::vector<std::uint64_t> rows_;
};

// Incremental edge insertion; produces an immutable Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t v);
    void add_edge(std::size_t u, std::size_t w); // u != w; idempotent
    void add_clique(std::span<const std::size_t> vs);
    Graph build() &&;

private:
    std::size_t v_ = 0;
    std::size_t w_ = 0;
    std::vector<std::uint64_t> rows_;
};

// graph6 interchange format, one graph per line.  Encoding uses the
// canonical upper-triangle bit order in 6-bit chunks offset by 63, with the
// long-form size headers for v > 62.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view s);

} // namespace tstar

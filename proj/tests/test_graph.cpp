#include <doctest.h>

#include "tstar/graph.hpp"

#include <random>
#include <set>
#include <stdexcept>

using namespace tstar;

namespace {

Graph cycle(std::size_t n) {
    GraphBuilder b(n);
    for (std::size_t i = 0; i < n; ++i)
        b.add_edge(i, (i + 1) % n);
    return std::move(b).build();
}

Graph random_graph(std::size_t n, double p, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(p);
    GraphBuilder b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng))
                b.add_edge(i, j);
    return std::move(b).build();
}

} // namespace

TEST_CASE("5-cycle basics") {
    const Graph g = cycle(5);
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 5);
    CHECK(g.common_neighbors(0, 1) == 0);
    CHECK(g.common_neighbors(0, 2) == 1);
    CHECK(g.regular_degree() == 2);
    CHECK(g.connected());
    CHECK(g.neighbors(0) == std::vector<std::size_t>{1, 4});
}

TEST_CASE("connectivity") {
    GraphBuilder b(4);
    b.add_edge(0, 1);
    b.add_edge(2, 3);
    const Graph g = std::move(b).build();
    CHECK_FALSE(g.connected());
    CHECK(cycle(7).connected());
}

TEST_CASE("common_neighbors against a naive oracle") {
    for (const std::uint32_t seed : {1u, 2u, 3u}) {
        const Graph g = random_graph(61, 0.3, seed);
        for (std::size_t u = 0; u < g.order(); u += 3) {
            for (std::size_t w = u + 1; w < g.order(); w += 2) {
                std::set<std::size_t> nu, common;
                for (const std::size_t x : g.neighbors(u))
                    nu.insert(x);
                for (const std::size_t x : g.neighbors(w))
                    if (nu.count(x))
                        common.insert(x);
                CHECK(g.common_neighbors(u, w) == common.size());
            }
        }
    }
}

TEST_CASE("graph validation") {
    // asymmetric rows are rejected
    std::vector<std::uint64_t> rows(3, 0);
    rows[0] = 0b010; // 0 ~ 1 but not 1 ~ 0
    CHECK_THROWS_AS(Graph(3, rows), std::invalid_argument);
    // diagonal bit
    rows.assign(3, 0);
    rows[1] = 0b010;
    CHECK_THROWS_AS(Graph(3, rows), std::invalid_argument);
    // stray bits beyond the vertex range
    rows.assign(3, 0);
    rows[2] = 0b1000;
    CHECK_THROWS_AS(Graph(3, rows), std::invalid_argument);
    // vertex range checks
    const Graph g = cycle(4);
    CHECK_THROWS_AS(g.degree(4), std::out_of_range);
    CHECK_THROWS_AS(g.adjacent(0, 9), std::out_of_range);
    GraphBuilder b(2);
    CHECK_THROWS_AS(b.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(b.add_edge(0, 5), std::out_of_range);
}

TEST_CASE("relabeling") {
    const Graph g = random_graph(20, 0.4, 7);
    std::vector<std::size_t> ident(20);
    for (std::size_t i = 0; i < 20; ++i)
        ident[i] = i;
    CHECK(g.relabeled(ident) == g);

    std::vector<std::size_t> rev(20);
    for (std::size_t i = 0; i < 20; ++i)
        rev[i] = 19 - i;
    const Graph h = g.relabeled(rev);
    CHECK(h.edge_count() == g.edge_count());
    for (std::size_t u = 0; u < 20; ++u)
        CHECK(h.degree(19 - u) == g.degree(u));

    std::vector<std::size_t> bad(20, 0);
    CHECK_THROWS_AS(g.relabeled(bad), std::invalid_argument);
}

TEST_CASE("graph6 fixed encodings") {
    // triangle -> "Bw", hand-encoded per the published format definition
    GraphBuilder b(3);
    b.add_clique(std::vector<std::size_t>{0, 1, 2});
    CHECK(graph6_encode(std::move(b).build()) == "Bw");
    // one isolated vertex -> "@"
    CHECK(graph6_encode(Graph(1, std::vector<std::uint64_t>(1, 0))) == "@");
    // empty graph on 0 vertices -> "?"
    CHECK(graph6_encode(Graph(0, {})) == "?");
    // 5-cycle: "Dhc", cross-checked against an external encoder
    CHECK(graph6_encode(cycle(5)) == "Dhc");
}

TEST_CASE("graph6 round trips") {
    for (const std::size_t n : {1, 2, 5, 40, 61, 62, 63, 64, 70, 129}) {
        const Graph g = random_graph(n, 0.35, static_cast<std::uint32_t>(n));
        const std::string enc = graph6_encode(g);
        CHECK(graph6_decode(enc) == g);
        if (n > 62)
            CHECK(enc[0] == '~'); // long-form size header
    }
}

TEST_CASE("graph6 decode rejects malformed input") {
    CHECK_THROWS_AS(graph6_decode(""), std::invalid_argument);
    // body byte below 63
    CHECK_THROWS_AS(graph6_decode(std::string("B") + char(62)), std::invalid_argument);
    // byte above 126
    CHECK_THROWS_AS(graph6_decode(std::string("B") + char(127)), std::invalid_argument);
    // truncated body
    CHECK_THROWS_AS(graph6_decode("D"), std::invalid_argument);
    // overlong body
    CHECK_THROWS_AS(graph6_decode("Bww"), std::invalid_argument);
    // nonzero trailing padding: triangle has 3 bits used, pad must be zero
    CHECK_THROWS_AS(graph6_decode("Bx"), std::invalid_argument);
    // truncated long-form header
    CHECK_THROWS_AS(graph6_decode("~B"), std::invalid_argument);
}

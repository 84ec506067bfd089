#include "tstar/graph.hpp"
#include "tstar/common.hpp"

#include <bit>
#include <stdexcept>

namespace tstar {

namespace {
std::size_t words_for(std::size_t v) {
    return (v + 63) / 64;
}
} // namespace

Graph::Graph(std::size_t v, std::vector<std::uint64_t> rows)
    : v_(v), w_(words_for(v)), rows_(std::move(rows)) {
    if (rows_.size() != v_ * w_)
        throw std::invalid_argument("Graph: row storage size mismatch");
    for (std::size_t u = 0; u < v_; ++u) {
        if (adjacent(u, u))
            throw std::invalid_argument("Graph: nonzero diagonal");
        // stray bits beyond column v
        if (v_ % 64 != 0 && w_ > 0 &&
            (rows_[u * w_ + w_ - 1] >> (v_ % 64)) != 0)
            throw std::invalid_argument("Graph: bits beyond vertex range");
    }
    for (std::size_t u = 0; u < v_; ++u)
        for (std::size_t k = 0; k < w_; ++k)
            for (std::uint64_t bits = rows_[u * w_ + k]; bits; bits &= bits - 1) {
                const std::size_t w = k * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                if (!adjacent(w, u))
                    throw std::invalid_argument("Graph: adjacency not symmetric");
            }
}

void Graph::check_vertex(std::size_t u) const {
    if (u >= v_)
        throw std::out_of_range("Graph: vertex out of range");
}

bool Graph::adjacent(std::size_t u, std::size_t w) const {
    check_vertex(u);
    check_vertex(w);
    return (rows_[u * w_ + w / 64] >> (w % 64)) & 1;
}

std::size_t Graph::degree(std::size_t u) const {
    check_vertex(u);
    std::size_t d = 0;
    for (std::size_t k = 0; k < w_; ++k)
        d += static_cast<std::size_t>(std::popcount(rows_[u * w_ + k]));
    return d;
}

std::size_t Graph::common_neighbors(std::size_t u, std::size_t w) const {
    check_vertex(u);
    check_vertex(w);
    std::size_t c = 0;
    for (std::size_t k = 0; k < w_; ++k)
        c += static_cast<std::size_t>(
            std::popcount(rows_[u * w_ + k] & rows_[w * w_ + k]));
    return c;
}

std::optional<std::size_t> Graph::regular_degree() const {
    if (v_ == 0)
        return 0;
    const std::size_t d = degree(0);
    for (std::size_t u = 1; u < v_; ++u)
        if (degree(u) != d)
            return std::nullopt;
    return d;
}

bool Graph::connected() const {
    if (v_ == 0)
        return true;
    std::vector<std::uint64_t> seen(w_, 0), frontier(w_, 0);
    seen[0] = frontier[0] = 1;
    std::size_t reached = 1;
    while (true) {
        std::vector<std::uint64_t> next(w_, 0);
        bool any = false;
        for (std::size_t k = 0; k < w_; ++k)
            for (std::uint64_t bits = frontier[k]; bits; bits &= bits - 1) {
                const std::size_t u = k * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                for (std::size_t j = 0; j < w_; ++j) {
                    const std::uint64_t fresh = rows_[u * w_ + j] & ~seen[j];
                    if (fresh) {
                        next[j] |= fresh;
                        seen[j] |= fresh;
                        reached += static_cast<std::size_t>(std::popcount(fresh));
                        any = true;
                    }
                }
            }
        if (!any)
            break;
        frontier = std::move(next);
    }
    return reached == v_;
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (std::size_t u = 0; u < v_; ++u)
        total += degree(u);
    return total / 2;
}

std::span<const std::uint64_t> Graph::row(std::size_t u) const {
    check_vertex(u);
    return {rows_.data() + u * w_, w_};
}

std::vector<std::size_t> Graph::neighbors(std::size_t u) const {
    check_vertex(u);
    std::vector<std::size_t> ns;
    for (std::size_t k = 0; k < w_; ++k)
        for (std::uint64_t bits = rows_[u * w_ + k]; bits; bits &= bits - 1)
            ns.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    return ns;
}

Graph Graph::relabeled(std::span<const std::size_t> perm) const {
    if (perm.size() != v_)
        throw std::invalid_argument("Graph::relabeled: permutation size mismatch");
    std::vector<char> hit(v_, 0);
    for (const std::size_t p : perm) {
        if (p >= v_ || hit[p])
            throw std::invalid_argument("Graph::relabeled: not a permutation");
        hit[p] = 1;
    }
    GraphBuilder b(v_);
    for (std::size_t u = 0; u < v_; ++u)
        for (const std::size_t w : neighbors(u))
            if (u < w)
                b.add_edge(perm[u], perm[w]);
    return std::move(b).build();
}

GraphBuilder::GraphBuilder(std::size_t v)
    : v_(v), w_(words_for(v)), rows_(v * w_, 0) {}

void GraphBuilder::add_edge(std::size_t u, std::size_t w) {
    if (u >= v_ || w >= v_)
        throw std::out_of_range("GraphBuilder: vertex out of range");
    if (u == w)
        throw std::invalid_argument("GraphBuilder: loops not allowed");
    rows_[u * w_ + w / 64] |= std::uint64_t{1} << (w % 64);
    rows_[w * w_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void GraphBuilder::add_clique(std::span<const std::size_t> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            add_edge(vs[i], vs[j]);
}

Graph GraphBuilder::build() && {
    return Graph(v_, std::move(rows_));
}

} // namespace tstar

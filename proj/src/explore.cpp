#include "tstar/explore.hpp"
#include "tstar/common.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace tstar {

namespace {

using Words = std::vector<std::uint64_t>;

Words row_and(const Graph& g, std::size_t u, std::size_t w) {
    const auto ru = g.row(u), rw = g.row(w);
    Words out(ru.size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = ru[k] & rw[k];
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> to_hist(const std::map<std::size_t, std::size_t>& m) {
    return {m.begin(), m.end()};
}

} // namespace

std::uint64_t Fingerprint::hash() const {
    // FNV-1a over the serialized tuple
    std::uint64_t h = 1469598103934665603ULL;
    const auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(clique_count);
    for (const auto& [a, b] : edge_hist) {
        mix(a);
        mix(b);
    }
    mix(0xfeedULL);
    for (const auto& [a, b] : triangle_hist) {
        mix(a);
        mix(b);
    }
    return h;
}

Fingerprint fingerprint(const Graph& g, std::size_t clique_size) {
    if (clique_size < 2)
        throw std::invalid_argument("fingerprint: clique size must be >= 2");
    Fingerprint fp;

    // count cliques of the given size and how many contain each edge
    std::unordered_map<std::uint64_t, std::size_t> per_edge;
    std::vector<std::size_t> cur;
    const std::size_t n = g.order();

    // ascending-order clique enumeration
    const std::function<void(Words, std::size_t)> rec = [&](Words cand, std::size_t need) {
        if (need == 0) {
            ++fp.clique_count;
            for (std::size_t i = 0; i < cur.size(); ++i)
                for (std::size_t j = i + 1; j < cur.size(); ++j)
                    ++per_edge[(static_cast<std::uint64_t>(cur[i]) << 32) | cur[j]];
            return;
        }
        std::size_t avail = 0;
        for (const std::uint64_t w : cand)
            avail += static_cast<std::size_t>(std::popcount(w));
        while (avail >= need) {
            std::size_t v = 0;
            bool any = false;
            for (std::size_t k = 0; k < cand.size() && !any; ++k)
                if (cand[k]) {
                    v = k * 64 + static_cast<std::size_t>(std::countr_zero(cand[k]));
                    any = true;
                }
            if (!any)
                return;
            cand[v / 64] &= ~(std::uint64_t{1} << (v % 64));
            --avail;
            Words next = cand;
            const auto rv = g.row(v);
            for (std::size_t k = 0; k < next.size(); ++k)
                next[k] &= rv[k];
            cur.push_back(v);
            rec(std::move(next), need - 1);
            cur.pop_back();
        }
    };
    Words all(g.words_per_row(), 0);
    for (std::size_t v = 0; v < n; ++v)
        all[v / 64] |= std::uint64_t{1} << (v % 64);
    rec(std::move(all), clique_size);

    std::map<std::size_t, std::size_t> eh;
    for (std::size_t u = 0; u < n; ++u)
        for (const std::size_t w : g.neighbors(u))
            if (u < w)
                ++eh[per_edge.count((static_cast<std::uint64_t>(u) << 32) | w)
                         ? per_edge[(static_cast<std::uint64_t>(u) << 32) | w]
                         : 0];
    fp.edge_hist = to_hist(eh);

    std::map<std::size_t, std::size_t> th;
    for (std::size_t u = 0; u < n; ++u) {
        std::size_t tri = 0;
        for (const std::size_t w : g.neighbors(u))
            tri += g.common_neighbors(u, w);
        ++th[tri / 2];
    }
    fp.triangle_hist = to_hist(th);
    return fp;
}

std::vector<PartitionSpec> find_generic_partitions(const Graph& g, std::size_t c,
                                                   std::size_t limit, std::uint64_t seed) {
    if (c < 2)
        throw std::invalid_argument("find_generic_partitions: c must be >= 2");
    std::vector<PartitionSpec> found;
    if (limit == 0 || g.order() < 2 * c)
        return found;
    const std::size_t n = g.order();

    // Candidate classes: starting from each non-adjacent pair, collect the
    // vertices pairwise non-adjacent to the pair whose common neighborhood
    // with each matches the pair's own.  Greedy internal-consistency filter.
    std::set<std::vector<std::size_t>> classes;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t w = u + 1; w < n; ++w) {
            if (g.adjacent(u, w))
                continue;
            const Words s = row_and(g, u, w);
            std::vector<std::size_t> cls{u, w};
            for (std::size_t v = 0; v < n; ++v) {
                if (v == u || v == w)
                    continue;
                bool ok = true;
                for (const std::size_t m : cls) {
                    if (g.adjacent(v, m) || row_and(g, v, m) != s) {
                        ok = false;
                        break;
                    }
                }
                if (ok)
                    cls.push_back(v);
            }
            if (cls.size() >= c) {
                std::sort(cls.begin(), cls.end());
                classes.insert(std::move(cls));
            }
        }
    }

    // candidate c-sets: whole classes of size c, or lex-first c-subsets of
    // larger classes (bounded)
    std::vector<std::vector<std::size_t>> candidates;
    const std::size_t subset_budget = std::max<std::size_t>(64, 4 * limit);
    for (const auto& cls : classes) {
        if (cls.size() == c) {
            candidates.push_back(cls);
            continue;
        }
        // lex enumeration of c-subsets, capped
        std::vector<std::size_t> idx(c);
        for (std::size_t i = 0; i < c; ++i)
            idx[i] = i;
        std::size_t emitted = 0;
        while (emitted < subset_budget) {
            std::vector<std::size_t> sub(c);
            for (std::size_t i = 0; i < c; ++i)
                sub[i] = cls[idx[i]];
            candidates.push_back(std::move(sub));
            ++emitted;
            // next combination
            std::size_t i = c;
            while (i-- > 0) {
                if (idx[i] + (c - i) < cls.size()) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < c; ++j)
                        idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) {
                    emitted = subset_budget;
                    break;
                }
            }
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // deterministic seeded exploration order over candidate pairs
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> order(candidates.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);

    for (std::size_t a = 0; a < order.size() && found.size() < limit; ++a) {
        for (std::size_t b = a + 1; b < order.size() && found.size() < limit; ++b) {
            const auto& c1 = candidates[std::min(order[a], order[b])];
            const auto& c2 = candidates[std::max(order[a], order[b])];
            std::vector<std::size_t> inter;
            std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(),
                                  std::back_inserter(inter));
            if (!inter.empty())
                continue;
            PartitionSpec ps{c1, c2};
            if (verify_wqh_hypotheses(g, ps).pass)
                found.push_back(std::move(ps));
        }
    }
    return found;
}

Census explore(const Graph& root, std::size_t depth, std::size_t limit_per_level, std::size_t c,
               std::size_t clique_size, std::uint64_t seed) {
    const SrgCheckResult rc = srg_check(root);
    if (!rc.is_srg)
        throw std::invalid_argument("explore: root graph is not strongly regular");

    Census census;
    census.root_params = rc.params;
    census.entries.push_back(CensusEntry{fingerprint(root, clique_size), root, 0});

    std::vector<std::size_t> frontier{0};
    for (std::size_t level = 1; level <= depth; ++level) {
        std::vector<std::size_t> next;
        for (const std::size_t gi : frontier) {
            const Graph g = census.entries[gi].graph; // copy: entries may grow
            const auto partitions = find_generic_partitions(g, c, limit_per_level, seed);
            for (const PartitionSpec& ps : partitions) {
                const Graph g2 = apply_switch(g, ps);
                ++census.switches_applied;
                const SrgCheckResult r2 = srg_check(g2);
                if (!r2.is_srg || !(r2.params == census.root_params))
                    continue; // switching preserves the parameters; defensive gate
                Fingerprint fp = fingerprint(g2, clique_size);
                const bool known =
                    std::any_of(census.entries.begin(), census.entries.end(),
                                [&](const CensusEntry& e) { return e.fp == fp; });
                if (!known) {
                    census.entries.push_back(CensusEntry{std::move(fp), g2, level});
                    next.push_back(census.entries.size() - 1);
                }
            }
        }
        frontier = std::move(next);
    }
    return census;
}

} // namespace tstar

#include "tstar/analysis.hpp"
#include "tstar/common.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace tstar {

namespace {

using Words = std::vector<std::uint64_t>;

std::size_t bits_count(const Words& a) {
    std::size_t n = 0;
    for (const std::uint64_t w : a)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

void bits_and_row(Words& a, std::span<const std::uint64_t> row) {
    for (std::size_t k = 0; k < a.size(); ++k)
        a[k] &= row[k];
}

bool bits_test(const Words& a, std::size_t i) {
    return (a[i / 64] >> (i % 64)) & 1;
}

void bits_clear(Words& a, std::size_t i) {
    a[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

void bits_set(Words& a, std::size_t i) {
    a[i / 64] |= std::uint64_t{1} << (i % 64);
}

bool bits_empty(const Words& a) {
    for (const std::uint64_t w : a)
        if (w)
            return false;
    return true;
}

template <typename Fn>
void bits_for_each(const Words& a, Fn&& fn) {
    for (std::size_t k = 0; k < a.size(); ++k)
        for (std::uint64_t w = a[k]; w; w &= w - 1)
            fn(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
}

Words common_row(const Graph& g, std::size_t u, std::size_t w) {
    const auto ru = g.row(u), rw = g.row(w);
    Words out(ru.size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = ru[k] & rw[k];
    return out;
}

// branch and bound with greedy coloring; early exit once best >= cap
struct MaxCliqueSearch {
    const Graph& g;
    std::size_t best;
    std::size_t cap;

    void expand(Words p, std::size_t size) {
        if (best >= cap)
            return;
        if (bits_empty(p)) {
            best = std::max(best, size);
            return;
        }
        // greedy coloring of the candidate set; color = upper bound offset
        std::vector<std::pair<std::size_t, std::size_t>> order; // (vertex, color)
        Words rest = p;
        std::size_t color = 0;
        while (!bits_empty(rest)) {
            ++color;
            Words cls = rest;
            while (!bits_empty(cls)) {
                std::size_t v = 0;
                for (std::size_t k = 0; k < cls.size(); ++k)
                    if (cls[k]) {
                        v = k * 64 + static_cast<std::size_t>(std::countr_zero(cls[k]));
                        break;
                    }
                bits_clear(cls, v);
                bits_clear(rest, v);
                order.emplace_back(v, color);
                // drop v's neighbors from this color class
                const auto rv = g.row(v);
                for (std::size_t k = 0; k < cls.size(); ++k)
                    cls[k] &= ~rv[k];
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            const auto [v, c] = order[i];
            if (size + c <= best)
                return;
            Words next = p;
            bits_and_row(next, g.row(v));
            expand(std::move(next), size + 1);
            if (best >= cap)
                return;
            bits_clear(p, v);
        }
    }
};

void enumerate_exact(const Graph& g, Words p, std::vector<std::size_t>& cur, std::size_t need,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (need == 0) {
        fn(cur);
        return;
    }
    if (bits_count(p) < need)
        return;
    while (!bits_empty(p)) {
        if (bits_count(p) < need)
            return;
        std::size_t v = 0;
        for (std::size_t k = 0; k < p.size(); ++k)
            if (p[k]) {
                v = k * 64 + static_cast<std::size_t>(std::countr_zero(p[k]));
                break;
            }
        bits_clear(p, v);
        Words next = p;
        bits_and_row(next, g.row(v));
        cur.push_back(v);
        enumerate_exact(g, std::move(next), cur, need - 1, fn);
        cur.pop_back();
    }
}

void bron_kerbosch(const Graph& g, std::vector<std::size_t>& r, Words p, Words x,
                   const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (bits_empty(p) && bits_empty(x)) {
        fn(r);
        return;
    }
    // pivot: maximize |P ∩ N(u)| over P ∪ X
    std::size_t pivot = 0, best_cover = 0;
    bool have = false;
    const auto consider = [&](std::size_t u) {
        Words tmp = p;
        bits_and_row(tmp, g.row(u));
        const std::size_t c = bits_count(tmp);
        if (!have || c > best_cover) {
            have = true;
            best_cover = c;
            pivot = u;
        }
    };
    bits_for_each(p, consider);
    bits_for_each(x, consider);

    Words cand = p;
    {
        const auto rp = g.row(pivot);
        for (std::size_t k = 0; k < cand.size(); ++k)
            cand[k] &= ~rp[k];
    }
    bits_for_each(cand, [&](std::size_t v) {
        Words np = p, nx = x;
        bits_and_row(np, g.row(v));
        bits_and_row(nx, g.row(v));
        r.push_back(v);
        bron_kerbosch(g, r, std::move(np), std::move(nx), fn);
        r.pop_back();
        bits_clear(p, v);
        bits_set(x, v);
    });
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a * b % p; // p < 2^31, operands reduced
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::int64_t isqrt64(std::int64_t n) {
    if (n < 0)
        return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

} // namespace

bool SrgParams::feasible() const {
    const auto vv = static_cast<std::int64_t>(v), kk = static_cast<std::int64_t>(k);
    const auto ll = static_cast<std::int64_t>(lambda), mm = static_cast<std::int64_t>(mu);
    return kk * (kk - ll - 1) == (vv - kk - 1) * mm;
}

SrgCheckResult srg_check(const Graph& g) {
    const std::size_t v = g.order();
    const std::size_t e = g.edge_count();
    if (v < 2 || e == 0 || e == v * (v - 1) / 2)
        throw std::invalid_argument("srg_check: graph must be neither complete nor edgeless");

    SrgCheckResult res;
    const auto k = g.regular_degree();
    if (!k) {
        res.reason = "not regular";
        return res;
    }

    std::optional<std::size_t> lambda, mu;
    for (std::size_t u = 0; u < v; ++u) {
        for (std::size_t w = u + 1; w < v; ++w) {
            const std::size_t c = g.common_neighbors(u, w);
            auto& slot = g.adjacent(u, w) ? lambda : mu;
            if (!slot) {
                slot = c;
            } else if (*slot != c) {
                res.violating_pair = {u, w};
                res.reason = g.adjacent(u, w) ? "lambda not constant" : "mu not constant";
                return res;
            }
        }
    }
    res.is_srg = true;
    res.params = SrgParams{v, *k, lambda.value_or(0), mu.value_or(0)};
    return res;
}

SrgParams srg_from_geometry(std::size_t s, std::size_t t, std::size_t alpha) {
    if (alpha == 0)
        throw std::invalid_argument("srg_from_geometry: alpha must be positive");
    const std::size_t num = (s + 1) * (s * t + alpha);
    if (num % alpha != 0)
        throw std::invalid_argument("srg_from_geometry: v not integral");
    return SrgParams{num / alpha, s * (t + 1), s - 1 + t * (alpha - 1), alpha * (t + 1)};
}

SpectrumResult srg_spectrum(const SrgParams& p) {
    SpectrumResult res;
    const auto v = static_cast<std::int64_t>(p.v);
    const auto k = static_cast<std::int64_t>(p.k);
    const std::int64_t diff = static_cast<std::int64_t>(p.lambda) - static_cast<std::int64_t>(p.mu);
    const std::int64_t disc = diff * diff + 4 * (k - static_cast<std::int64_t>(p.mu));
    if (disc <= 0)
        return res; // infeasible
    const std::int64_t sq = isqrt64(disc);
    if (sq * sq != disc) {
        res.status = SpectrumStatus::conference;
        return res;
    }
    if ((diff + sq) % 2 != 0)
        return res;
    const std::int64_t r = (diff + sq) / 2;
    const std::int64_t s = (diff - sq) / 2;
    const std::int64_t m = 2 * k + (v - 1) * diff;
    if (sq == 0 || m % sq != 0)
        return res;
    const std::int64_t f2 = (v - 1) - m / sq;
    if (f2 < 0 || f2 % 2 != 0)
        return res;
    const std::int64_t f = f2 / 2;
    const std::int64_t g = (v - 1) - f;
    if (g < 0 || 1 + f + g != v || k + f * r + g * s != 0)
        return res;
    res.status = SpectrumStatus::ok;
    res.spectrum = Spectrum{k, r, s, static_cast<std::size_t>(f), static_cast<std::size_t>(g)};
    return res;
}

std::vector<std::vector<std::uint64_t>> char_poly_mod(const Graph& g,
                                                      std::span<const std::uint64_t> primes) {
    const std::size_t n = g.order();
    std::vector<std::vector<std::uint64_t>> out;
    for (const std::uint64_t p : primes) {
        if (p % 2 == 0 || p <= n)
            throw std::invalid_argument("char_poly_mod: primes must be odd and > v");
        if (p >= (std::uint64_t{1} << 31))
            throw std::invalid_argument("char_poly_mod: primes must fit in 31 bits");

        // adjacency matrix mod p
        std::vector<std::uint64_t> m(n * n, 0);
        for (std::size_t u = 0; u < n; ++u)
            for (const std::size_t w : g.neighbors(u))
                m[u * n + w] = 1;
        const auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& {
            return m[i * n + j];
        };

        // similarity reduction to upper Hessenberg form
        for (std::size_t j = 0; n > 2 && j < n - 2; ++j) {
            std::size_t piv = 0;
            bool found = false;
            for (std::size_t i = j + 1; i < n; ++i)
                if (at(i, j) != 0) {
                    piv = i;
                    found = true;
                    break;
                }
            if (!found)
                continue;
            if (piv != j + 1) {
                for (std::size_t k = 0; k < n; ++k)
                    std::swap(at(piv, k), at(j + 1, k));
                for (std::size_t k = 0; k < n; ++k)
                    std::swap(at(k, piv), at(k, j + 1));
            }
            const std::uint64_t inv = powmod(at(j + 1, j), p - 2, p);
            for (std::size_t i = j + 2; i < n; ++i) {
                const std::uint64_t f = mulmod(at(i, j), inv, p);
                if (f == 0)
                    continue;
                const std::uint64_t nf = p - f;
                for (std::size_t k = 0; k < n; ++k)
                    at(i, k) = (at(i, k) + mulmod(nf, at(j + 1, k), p)) % p;
                for (std::size_t k = 0; k < n; ++k)
                    at(k, j + 1) = (at(k, j + 1) + mulmod(f, at(k, i), p)) % p;
            }
        }

        // characteristic polynomials of the leading principal blocks
        std::vector<std::vector<std::uint64_t>> polys(n + 1);
        polys[0] = {1};
        for (std::size_t mm = 1; mm <= n; ++mm) {
            const std::uint64_t d = at(mm - 1, mm - 1) % p;
            std::vector<std::uint64_t> pm(mm + 1, 0);
            const auto& prev = polys[mm - 1];
            for (std::size_t i = 0; i < prev.size(); ++i) {
                pm[i + 1] = (pm[i + 1] + prev[i]) % p;               // x * prev
                pm[i] = (pm[i] + mulmod(p - 1, mulmod(d, prev[i], p), p)) % p; // -d * prev
            }
            std::uint64_t prod = 1;
            for (std::size_t k = mm - 1; k-- > 0;) {
                prod = mulmod(prod, at(k + 1, k), p);
                if (prod == 0)
                    break;
                const std::uint64_t coeff = mulmod(at(k, mm - 1), prod, p);
                if (coeff == 0)
                    continue;
                const std::uint64_t neg = p - coeff;
                const auto& pk = polys[k];
                for (std::size_t i = 0; i < pk.size(); ++i)
                    pm[i] = (pm[i] + mulmod(neg, pk[i], p)) % p;
            }
            polys[mm] = std::move(pm);
        }
        out.push_back(std::move(polys[n]));
    }
    return out;
}

std::size_t max_clique_through_edge(const Graph& g, std::size_t u, std::size_t w,
                                    std::size_t cap) {
    if (!g.adjacent(u, w))
        throw std::invalid_argument("max_clique_through_edge: not an edge");
    MaxCliqueSearch search{g, 0, cap > 2 ? cap - 2 : 0};
    search.expand(common_row(g, u, w), 0);
    return search.best + 2;
}

std::vector<std::vector<std::size_t>> cliques_of_size_through_edge(const Graph& g, std::size_t u,
                                                                   std::size_t w,
                                                                   std::size_t size) {
    if (!g.adjacent(u, w))
        throw std::invalid_argument("cliques_of_size_through_edge: not an edge");
    if (size < 2)
        throw std::invalid_argument("cliques_of_size_through_edge: size must be >= 2");
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    enumerate_exact(g, common_row(g, u, w), cur, size - 2,
                    [&](const std::vector<std::size_t>& rest) {
                        std::vector<std::size_t> clique{u, w};
                        clique.insert(clique.end(), rest.begin(), rest.end());
                        std::sort(clique.begin(), clique.end());
                        out.push_back(std::move(clique));
                    });
    return out;
}

void for_each_maximal_clique(const Graph& g,
                             const std::function<void(const std::vector<std::size_t>&)>& fn) {
    const std::size_t n = g.order();
    if (n == 0)
        return;
    Words p(g.words_per_row(), 0), x(g.words_per_row(), 0);
    for (std::size_t v = 0; v < n; ++v)
        bits_set(p, v);
    std::vector<std::size_t> r;
    bron_kerbosch(g, r, std::move(p), std::move(x), fn);
}

GeometricityReport geometricity_report(const Graph& g, std::size_t t) {
    if (t < 1)
        throw std::invalid_argument("geometricity_report: t must be >= 1");
    GeometricityReport rep;
    rep.t = t;
    for (std::size_t u = 0; u < g.order(); ++u) {
        for (const std::size_t w : g.neighbors(u)) {
            if (w <= u)
                continue;
            const std::size_t mc = max_clique_through_edge(g, u, w, t + 1);
            const std::size_t capped = std::min(mc, t + 1);
            ++rep.edge_clique_histogram[capped];
            ++rep.edges_checked;
            if (mc < t + 1)
                rep.failing_edges.emplace_back(u, w);
        }
    }
    for_each_maximal_clique(g, [&](const std::vector<std::size_t>& c) {
        if (c.size() >= t + 1)
            ++rep.pencil_count;
    });
    return rep;
}

WitnessReport proposition_witness(const Space& s, const SwitchingConfig& cfg, const LineSet& ls,
                                  const Graph& gamma, const Graph& gamma_prime) {
    WitnessReport rep;
    rep.r = cfg.m1.base; // least-index point of M1
    rep.l1 = s.line_canonicalize(rep.r, cfg.q1);
    rep.l2 = s.line_canonicalize(rep.r, cfg.q2);
    rep.l1_id = ls.id_of(rep.l1);
    rep.l2_id = ls.id_of(rep.l2);

    rep.lines_outside_planes =
        !s.line_in_plane(rep.l1, cfg.m1) && !s.line_in_plane(rep.l1, cfg.m2) &&
        !s.line_in_plane(rep.l2, cfg.m1) && !s.line_in_plane(rep.l2, cfg.m2);

    rep.adjacent_before =
        s.lines_meet(rep.l1, rep.l2) && gamma.adjacent(rep.l1_id, rep.l2_id);
    rep.adjacent_after = gamma_prime.adjacent(rep.l1_id, rep.l2_id);

    // ids of the lines contained in M2
    std::vector<std::size_t> m2_lines;
    for (const ProjPoint& d : ls.dirs())
        if (std::binary_search(cfg.k_line.pts.begin(), cfg.k_line.pts.end(), d))
            for (const AffLine& a : s.plane_lines_with_direction(cfg.m2, d))
                m2_lines.push_back(ls.id_of(a));
    rep.no_common_neighbor_in_m2 = true;
    for (const std::size_t id : m2_lines)
        if (gamma_prime.adjacent(id, rep.l1_id) && gamma_prime.adjacent(id, rep.l2_id)) {
            rep.no_common_neighbor_in_m2 = false;
            break;
        }

    const std::size_t t = cfg.t;
    rep.max_clique_after = max_clique_through_edge(gamma_prime, rep.l1_id, rep.l2_id, t + 1);
    rep.clique_bound_ok = rep.max_clique_after <= t;

    const auto cliques = cliques_of_size_through_edge(gamma, rep.l1_id, rep.l2_id, t + 1);
    rep.pencil_cliques_before = cliques.size();
    if (cliques.size() == 1) {
        // the unique clique must be the pencil of R
        std::vector<std::size_t> pencil;
        const std::size_t r_idx = s.aff_index(rep.r);
        for (std::size_t di = 0; di < ls.dirs().size(); ++di)
            pencil.push_back(ls.id_through(di, r_idx));
        std::sort(pencil.begin(), pencil.end());
        rep.unique_pencil_before = cliques[0] == pencil;
    }

    rep.pass = rep.lines_outside_planes && rep.adjacent_before && rep.adjacent_after &&
               rep.no_common_neighbor_in_m2 && rep.clique_bound_ok && rep.unique_pencil_before;
    return rep;
}

} // namespace tstar

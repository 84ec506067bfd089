#include "tstar/switching.hpp"
#include "tstar/common.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tstar {

namespace {

// the single point two distinct projective lines share
ProjPoint line_meet(const ProjLine& a, const ProjLine& b) {
    std::vector<ProjPoint> common;
    std::set_intersection(a.pts.begin(), a.pts.end(), b.pts.begin(), b.pts.end(),
                          std::back_inserter(common));
    if (common.size() != 1)
        throw InternalError("line_meet: lines do not meet in one point");
    return common[0];
}

std::vector<ProjPoint> points_on_line_in(const Arc& k, const ProjLine& l) {
    std::vector<ProjPoint> r;
    for (const ProjPoint& p : l.pts)
        if (k.contains(p))
            r.push_back(p);
    return r;
}

void verify_config(const Space& s, const Arc& k, const SwitchingConfig& cfg) {
    const auto on_k_line = [&](const ProjPoint& p) {
        return std::binary_search(cfg.k_line.pts.begin(), cfg.k_line.pts.end(), p);
    };
    if (points_on_line_in(k, cfg.k_line).size() < 2)
        throw InternalError("SwitchingConfig: kLine is not a secant");
    if (!on_k_line(cfg.p) || !k.contains(cfg.p))
        throw InternalError("SwitchingConfig: P not on kLine ∩ K");
    if (!k.contains(cfg.q1) || !k.contains(cfg.q2) || on_k_line(cfg.q1) || on_k_line(cfg.q2) ||
        cfg.q1 == cfg.q2)
        throw InternalError("SwitchingConfig: Q pair not in K \\ kLine");
    const ProjPoint x = line_meet(s.proj_line_through(cfg.q1, cfg.q2), cfg.k_line);
    if (k.contains(x))
        throw InternalError("SwitchingConfig: <Q1,Q2> meets kLine inside K");
    if (cfg.m1 == cfg.m2 || cfg.m1.at_infinity != cfg.k_line || cfg.m2.at_infinity != cfg.k_line)
        throw InternalError("SwitchingConfig: planes invalid");
    if (cfg.t != k.size() - 1)
        throw InternalError("SwitchingConfig: t != |K| - 1");
    if (cfg.t <= std::size_t{cfg.q} * (cfg.alpha - 1))
        throw InternalError("SwitchingConfig: threshold violated");
}

} // namespace

SwitchingConfig find_switching_config(const Space& s, const Arc& k, std::size_t alpha,
                                      const ConfigOverrides& ov,
                                      std::vector<std::string>* warnings) {
    if (k.points.empty())
        throw std::invalid_argument("find_switching_config: empty arc");
    if (alpha < 1)
        throw std::invalid_argument("find_switching_config: alpha must be >= 1");
    const std::size_t t = k.size() - 1;
    if (t <= std::size_t{s.q()} * (alpha - 1))
        throw ThresholdFailError("find_switching_config: t = " + std::to_string(t) +
                                 " <= q(alpha-1) = " + std::to_string(s.q() * (alpha - 1)));

    // secants in canonical line order
    std::vector<std::size_t> secants;
    std::size_t max_meet = 0;
    const auto& lines = s.proj_lines();
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::size_t n = points_on_line_in(k, lines[li]).size();
        max_meet = std::max(max_meet, n);
        if (n >= 2)
            secants.push_back(li);
    }
    if (secants.empty())
        throw NoSecantError("find_switching_config: arc has no secant");
    if (max_meet >= 1 && max_meet - 1 != alpha && warnings)
        warnings->push_back("supplied alpha " + std::to_string(alpha) +
                            " differs from geometric alpha " + std::to_string(max_meet - 1));

    std::vector<std::size_t> secant_choices;
    if (ov.secant) {
        if (*ov.secant >= secants.size())
            throw std::invalid_argument("find_switching_config: secant override out of range");
        secant_choices.push_back(*ov.secant);
    } else {
        secant_choices.resize(secants.size());
        for (std::size_t i = 0; i < secants.size(); ++i)
            secant_choices[i] = i;
    }

    for (const std::size_t si : secant_choices) {
        const ProjLine& k_line = lines[secants[si]];
        std::vector<ProjPoint> rest; // K \ kLine, sorted
        for (const ProjPoint& p : k.points)
            if (!std::binary_search(k_line.pts.begin(), k_line.pts.end(), p))
                rest.push_back(p);
        if (rest.size() < 2)
            continue;

        std::optional<std::pair<std::size_t, std::size_t>> pair;
        const auto pair_ok = [&](std::size_t i, std::size_t j) {
            const ProjPoint x = line_meet(s.proj_line_through(rest[i], rest[j]), k_line);
            return !k.contains(x);
        };
        if (ov.q_pair) {
            const auto [i, j] = *ov.q_pair;
            if (i >= rest.size() || j >= rest.size() || i == j)
                throw std::invalid_argument("find_switching_config: q pair override out of range");
            if (!pair_ok(std::min(i, j), std::max(i, j)))
                throw std::invalid_argument(
                    "find_switching_config: q pair override fails the span condition");
            pair = {std::min(i, j), std::max(i, j)};
        } else {
            for (std::size_t i = 0; i < rest.size() && !pair; ++i)
                for (std::size_t j = i + 1; j < rest.size(); ++j)
                    if (pair_ok(i, j)) {
                        pair = {i, j};
                        break;
                    }
        }
        if (!pair)
            continue;

        const std::vector<ProjPoint> on_k = points_on_line_in(k, k_line);
        const std::size_t pi = ov.p.value_or(0);
        if (pi >= on_k.size())
            throw std::invalid_argument("find_switching_config: P override out of range");

        const std::vector<AffPlane> planes = s.planes_through_infinite_line(k_line);
        const auto [mi, mj] = ov.planes.value_or(std::pair<std::size_t, std::size_t>{0, 1});
        if (mi >= planes.size() || mj >= planes.size() || mi == mj)
            throw std::invalid_argument("find_switching_config: plane override invalid");

        SwitchingConfig cfg;
        cfg.k_line = k_line;
        cfg.p = on_k[pi];
        cfg.q1 = rest[pair->first];
        cfg.q2 = rest[pair->second];
        cfg.m1 = planes[mi];
        cfg.m2 = planes[mj];
        cfg.t = t;
        cfg.alpha = alpha;
        cfg.q = s.q();
        cfg.secant_index = si;
        cfg.p_index = pi;
        cfg.q_pair_index = *pair;
        cfg.plane_index = {mi, mj};
        verify_config(s, k, cfg);
        return cfg;
    }
    throw NoValidPairError("find_switching_config: no Q pair over any secant");
}

PartitionSpec build_partition(const Space& s, const SwitchingConfig& cfg, const LineSet& l) {
    PartitionSpec ps;
    for (const AffLine& a : s.plane_lines_with_direction(cfg.m1, cfg.p))
        ps.c1.push_back(l.id_of(a));
    for (const AffLine& a : s.plane_lines_with_direction(cfg.m2, cfg.p))
        ps.c2.push_back(l.id_of(a));
    std::sort(ps.c1.begin(), ps.c1.end());
    std::sort(ps.c2.begin(), ps.c2.end());
    if (ps.c1.size() != s.q() || ps.c2.size() != s.q())
        throw InternalError("build_partition: parallel class size != q");
    return ps;
}

namespace {

struct Masks {
    std::size_t w = 0;
    std::vector<std::uint64_t> c1, c2, both;
    bool valid = false;
};

Masks make_masks(const Graph& g, const PartitionSpec& ps) {
    Masks m;
    m.w = g.words_per_row();
    m.c1.assign(m.w, 0);
    m.c2.assign(m.w, 0);
    m.both.assign(m.w, 0);
    for (const std::size_t v : ps.c1) {
        if (v >= g.order())
            return m;
        m.c1[v / 64] |= std::uint64_t{1} << (v % 64);
    }
    for (const std::size_t v : ps.c2) {
        if (v >= g.order())
            return m;
        m.c2[v / 64] |= std::uint64_t{1} << (v % 64);
    }
    std::size_t n1 = 0, n2 = 0, nu = 0;
    for (std::size_t k = 0; k < m.w; ++k) {
        m.both[k] = m.c1[k] | m.c2[k];
        n1 += static_cast<std::size_t>(std::popcount(m.c1[k]));
        n2 += static_cast<std::size_t>(std::popcount(m.c2[k]));
        nu += static_cast<std::size_t>(std::popcount(m.both[k]));
    }
    // duplicates or overlap collapse the popcounts
    m.valid = n1 == ps.c1.size() && n2 == ps.c2.size() && nu == n1 + n2;
    return m;
}

std::size_t masked_degree(const Graph& g, std::size_t u, const std::vector<std::uint64_t>& mask) {
    const auto r = g.row(u);
    std::size_t d = 0;
    for (std::size_t k = 0; k < mask.size(); ++k)
        d += static_cast<std::size_t>(std::popcount(r[k] & mask[k]));
    return d;
}

bool induced_regular(const Graph& g, const std::vector<std::size_t>& vs,
                     const std::vector<std::uint64_t>& mask, std::size_t& degree_out) {
    bool first = true;
    for (const std::size_t v : vs) {
        const std::size_t d = masked_degree(g, v, mask);
        if (first) {
            degree_out = d;
            first = false;
        } else if (d != degree_out) {
            return false;
        }
    }
    return true;
}

} // namespace

WqhReport verify_wqh_hypotheses(const Graph& g, const PartitionSpec& ps) {
    WqhReport rep;
    const Masks m = make_masks(g, ps);
    rep.valid = m.valid;
    if (!rep.valid)
        return rep;

    rep.sizes_equal = ps.c1.size() == ps.c2.size();
    rep.c1_regular = induced_regular(g, ps.c1, m.c1, rep.c1_degree);
    rep.c2_regular = induced_regular(g, ps.c2, m.c2, rep.c2_degree);
    std::vector<std::size_t> both = ps.c1;
    both.insert(both.end(), ps.c2.begin(), ps.c2.end());
    rep.union_regular = induced_regular(g, both, m.both, rep.union_degree);
    rep.degrees_equal = rep.c1_regular && rep.c2_regular && rep.c1_degree == rep.c2_degree;

    const std::size_t s1 = ps.c1.size(), s2 = ps.c2.size();
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (((m.both[x / 64] >> (x % 64)) & 1) != 0)
            continue; // in C1 ∪ C2
        const std::size_t n1 = masked_degree(g, x, m.c1);
        const std::size_t n2 = masked_degree(g, x, m.c2);
        if ((n1 == s1 && n2 == 0 && s1 > 0) || (n2 == s2 && n1 == 0 && s2 > 0))
            ++rep.switchable;
        else if (n1 != n2)
            rep.violations.push_back(x);
    }
    rep.pass = rep.valid && rep.sizes_equal && rep.c1_regular && rep.c2_regular &&
               rep.union_regular && rep.degrees_equal && rep.violations.empty();
    return rep;
}

std::vector<std::size_t> switched_vertices(const Graph& g, const PartitionSpec& ps) {
    const Masks m = make_masks(g, ps);
    if (!m.valid)
        throw std::invalid_argument("switched_vertices: malformed partition");
    const std::size_t s1 = ps.c1.size(), s2 = ps.c2.size();
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (((m.both[x / 64] >> (x % 64)) & 1) != 0)
            continue;
        const std::size_t n1 = masked_degree(g, x, m.c1);
        const std::size_t n2 = masked_degree(g, x, m.c2);
        if ((n1 == s1 && n2 == 0 && s1 > 0) || (n2 == s2 && n1 == 0 && s2 > 0))
            out.push_back(x);
    }
    return out;
}

Graph apply_switch(const Graph& g, const PartitionSpec& ps) {
    const WqhReport rep = verify_wqh_hypotheses(g, ps);
    if (!rep.pass)
        throw HypothesesNotVerified("apply_switch: switching hypotheses do not hold");

    const Masks m = make_masks(g, ps);
    const std::size_t w = g.words_per_row();
    std::vector<std::uint64_t> rows;
    rows.reserve(g.order() * w);
    for (std::size_t u = 0; u < g.order(); ++u) {
        const auto r = g.row(u);
        rows.insert(rows.end(), r.begin(), r.end());
    }

    std::vector<std::size_t> both = ps.c1;
    both.insert(both.end(), ps.c2.begin(), ps.c2.end());
    for (const std::size_t x : switched_vertices(g, ps)) {
        for (std::size_t k = 0; k < w; ++k)
            rows[x * w + k] ^= m.both[k];
        for (const std::size_t y : both)
            rows[y * w + x / 64] ^= std::uint64_t{1} << (x % 64);
    }
    return Graph(g.order(), std::move(rows));
}

} // namespace tstar

#include "tstar/report.hpp"

#include <sstream>

namespace tstar {

using nlohmann::json;

json json_of(const ProjPoint& p) {
    return json::array({p.c[0], p.c[1], p.c[2]});
}

json json_of(const AffPoint& p) {
    return json::array({p.c[0], p.c[1], p.c[2]});
}

json json_of(const AffLine& l) {
    return json{{"base", json_of(l.base)}, {"dir", json_of(l.dir)}};
}

json json_of(const SrgParams& p) {
    return json{{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

json json_of(const SpectrumResult& s) {
    switch (s.status) {
    case SpectrumStatus::ok:
        return json{{"status", "ok"},
                    {"eigenvalues", json::array({s.spectrum.k, s.spectrum.r, s.spectrum.s})},
                    {"multiplicities", json::array({1, s.spectrum.f, s.spectrum.g})}};
    case SpectrumStatus::conference:
        return json{{"status", "conference"}};
    default:
        return json{{"status", "infeasible"}};
    }
}

json json_of(const IntersectionProfile& p) {
    json hist = json::object();
    for (const auto& [size, count] : p.histogram)
        hist[std::to_string(size)] = count;
    json j{{"histogram", hist}, {"secants", p.secants.size()}, {"ok", p.ok}};
    if (p.offending_line)
        j["offending_line"] = *p.offending_line;
    return j;
}

json json_of(const SwitchingConfig& c) {
    json kl = json::array();
    for (const ProjPoint& p : c.k_line.pts)
        kl.push_back(json_of(p));
    return json{{"k_line", kl},
                {"p", json_of(c.p)},
                {"q1", json_of(c.q1)},
                {"q2", json_of(c.q2)},
                {"m1_base", json_of(c.m1.base)},
                {"m2_base", json_of(c.m2.base)},
                {"t", c.t},
                {"alpha", c.alpha},
                {"q", c.q},
                {"secant_index", c.secant_index},
                {"p_index", c.p_index},
                {"q_pair_index", json::array({c.q_pair_index.first, c.q_pair_index.second})},
                {"plane_index", json::array({c.plane_index.first, c.plane_index.second})}};
}

json json_of(const WqhReport& r) {
    return json{{"valid", r.valid},
                {"sizes_equal", r.sizes_equal},
                {"c1_regular", r.c1_regular},
                {"c2_regular", r.c2_regular},
                {"union_regular", r.union_regular},
                {"degrees_equal", r.degrees_equal},
                {"c1_degree", r.c1_degree},
                {"c2_degree", r.c2_degree},
                {"union_degree", r.union_degree},
                {"violations", r.violations},
                {"switchable", r.switchable},
                {"pass", r.pass}};
}

json json_of(const GeometricityReport& r) {
    json fe = json::array();
    for (const auto& [u, w] : r.failing_edges)
        fe.push_back(json::array({u, w}));
    json hist = json::object();
    for (const auto& [size, count] : r.edge_clique_histogram)
        hist[std::to_string(size)] = count;
    return json{{"t", r.t},
                {"edges_checked", r.edges_checked},
                {"failing_edges", fe},
                {"failing_edge_count", r.failing_edges.size()},
                {"pencil_count", r.pencil_count},
                {"edge_clique_histogram", hist},
                {"geometric", r.geometric()}};
}

json json_of(const WitnessReport& r) {
    return json{{"l1_id", r.l1_id},
                {"l2_id", r.l2_id},
                {"l1", json_of(r.l1)},
                {"l2", json_of(r.l2)},
                {"r", json_of(r.r)},
                {"lines_outside_planes", r.lines_outside_planes},
                {"adjacent_before", r.adjacent_before},
                {"adjacent_after", r.adjacent_after},
                {"no_common_neighbor_in_m2", r.no_common_neighbor_in_m2},
                {"max_clique_after", r.max_clique_after},
                {"clique_bound_ok", r.clique_bound_ok},
                {"pencil_cliques_before", r.pencil_cliques_before},
                {"unique_pencil_before", r.unique_pencil_before},
                {"pass", r.pass}};
}

json json_of(const Fingerprint& f) {
    std::ostringstream hs;
    hs << std::hex << f.hash();
    json eh = json::array(), th = json::array();
    for (const auto& [a, b] : f.edge_hist)
        eh.push_back(json::array({a, b}));
    for (const auto& [a, b] : f.triangle_hist)
        th.push_back(json::array({a, b}));
    return json{{"clique_count", f.clique_count},
                {"edge_histogram", eh},
                {"triangle_histogram", th},
                {"hash", hs.str()}};
}

} // namespace tstar

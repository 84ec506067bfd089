// Command-line front end: builds the line graph of the lines through an arc
// at infinity, applies partition switching, and runs the exact verification
// suite.  graph6 goes to standard output when no --out directory is given;
// JSON reports go to the directory, or to standard error otherwise.

#include "tstar/analysis.hpp"
#include "tstar/arc.hpp"
#include "tstar/common.hpp"
#include "tstar/explore.hpp"
#include "tstar/gf2h.hpp"
#include "tstar/graph.hpp"
#include "tstar/linrep.hpp"
#include "tstar/report.hpp"
#include "tstar/switching.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace tstar;
using nlohmann::json;

constexpr std::uint64_t kDefaultPrimes[3] = {2147483647ULL, 2147483629ULL, 2147483587ULL};

struct CommonOpts {
    int h = 0;
    int m = 0;
    std::string arc_path;
    std::optional<std::size_t> alpha;
    std::optional<std::string> out_dir;
    bool skip_srg = false;

    // configuration overrides
    std::optional<std::size_t> secant;
    std::optional<std::size_t> ppoint;
    std::vector<std::size_t> qpair;  // 2 entries when set
    std::vector<std::size_t> pplane; // 2 entries when set
};

void add_build_opts(CLI::App* cmd, CommonOpts& o, bool with_overrides) {
    cmd->add_option("--h", o.h, "field extension degree, q = 2^h")->required();
    cmd->add_option("--m", o.m, "Denniston arc exponent, 0 < m < h");
    cmd->add_option("--arc", o.arc_path, "arc input file instead of a Denniston arc");
    auto* alpha = cmd->add_option("--alpha", "alpha of the geometry (default: degree - 1)");
    alpha->each([&o](const std::string& v) { o.alpha = std::stoull(v); });
    cmd->add_option("--out", "output directory")->each([&o](const std::string& v) {
        o.out_dir = v;
    });
    cmd->add_flag("--skip-srg", o.skip_srg, "skip the strong-regularity check");
    if (with_overrides) {
        cmd->add_option("--secant", "secant index override")->each([&o](const std::string& v) {
            o.secant = std::stoull(v);
        });
        cmd->add_option("--ppoint", "index of P within kLine ∩ K")->each([&o](const std::string& v) {
            o.ppoint = std::stoull(v);
        });
        cmd->add_option("--qpair", o.qpair, "indices of Q1 Q2 within K \\ kLine")->expected(2);
        cmd->add_option("--pplane", o.pplane, "indices of the planes M1 M2")->expected(2);
    }
}

ConfigOverrides overrides_of(const CommonOpts& o) {
    ConfigOverrides ov;
    ov.secant = o.secant;
    ov.p = o.ppoint;
    if (o.qpair.size() == 2)
        ov.q_pair = {o.qpair[0], o.qpair[1]};
    if (o.pplane.size() == 2)
        ov.planes = {o.pplane[0], o.pplane[1]};
    return ov;
}

struct Pipeline {
    Space space;
    Arc arc;
    std::size_t alpha = 0;
    int profile_degree = 0;
    IntersectionProfile profile;
    std::vector<std::string> warnings;
};

Pipeline make_pipeline(const CommonOpts& o) {
    if (o.h < 1)
        throw std::invalid_argument("--h must be at least 1");
    const bool denniston = o.arc_path.empty();
    if (denniston && o.m == 0)
        throw std::invalid_argument("either --m or --arc is required");
    if (!denniston && o.m != 0)
        throw std::invalid_argument("--m and --arc are mutually exclusive");

    Space space(Field::create(o.h));
    std::vector<std::string> warnings;
    Arc arc = denniston ? denniston_arc(space, o.m) : load_arc(o.arc_path, space, &warnings);

    // profile against the declared degree, or against the largest observed
    // intersection for loaded arcs
    int degree = arc.declared_degree.value_or(0);
    IntersectionProfile profile = verify_maximal_arc(space, arc, degree > 0 ? degree : 1);
    if (degree == 0) {
        degree = static_cast<int>(profile.geometric_alpha() + 1);
        profile = verify_maximal_arc(space, arc, degree);
    }
    const std::size_t alpha =
        o.alpha.value_or(degree > 1 ? static_cast<std::size_t>(degree - 1)
                                    : profile.geometric_alpha());
    return Pipeline{std::move(space), std::move(arc), alpha, degree, std::move(profile),
                    std::move(warnings)};
}

json field_json(const Field& f) {
    return json{{"h", f.h()}, {"q", f.q()}, {"modulus", f.modulus()}};
}

json arc_json(const Pipeline& p) {
    json j{{"size", p.arc.size()},
           {"degree", p.profile_degree},
           {"profile", json_of(p.profile)}};
    if (p.arc.declared_degree)
        j["lambda"] = find_irreducible_lambda(p.space.field());
    return j;
}

void emit_graph(const Graph& g, const std::optional<std::string>& out_dir,
                const std::string& name) {
    if (out_dir) {
        std::filesystem::create_directories(*out_dir);
        std::ofstream f(*out_dir + "/" + name);
        f << graph6_encode(g) << "\n";
    } else {
        std::cout << graph6_encode(g) << "\n";
    }
}

void emit_report(const json& j, const std::optional<std::string>& out_dir) {
    if (out_dir) {
        std::filesystem::create_directories(*out_dir);
        std::ofstream f(*out_dir + "/report.json");
        f << j.dump(2) << "\n";
    } else {
        std::cerr << j.dump(2) << "\n";
    }
}

json graph_json(const Graph& g) {
    json j{{"vertices", g.order()}, {"edges", g.edge_count()}};
    if (const auto d = g.regular_degree())
        j["degree"] = *d;
    return j;
}

int cmd_build(const CommonOpts& o) {
    const Pipeline p = make_pipeline(o);
    const LineSet lines(p.space, p.arc);
    const Graph gamma = build_line_graph(p.space, lines);

    json rep{{"field", field_json(p.space.field())},
             {"arc", arc_json(p)},
             {"graph", graph_json(gamma)},
             {"warnings", p.warnings}};
    bool pass = p.profile.ok;
    if (!o.skip_srg) {
        const SrgCheckResult r = srg_check(gamma);
        if (r.is_srg)
            rep["params"] = json_of(r.params);
        else
            rep["srg_failure"] = r.reason;
        pass = pass && r.is_srg;
    }
    emit_graph(gamma, o.out_dir, "gamma.g6");
    emit_report(rep, o.out_dir);
    return pass ? 0 : 1;
}

std::size_t flipped_pairs(const Graph& a, const Graph& b) {
    std::size_t bits = 0;
    for (std::size_t u = 0; u < a.order(); ++u) {
        const auto ra = a.row(u), rb = b.row(u);
        for (std::size_t k = 0; k < ra.size(); ++k)
            bits += static_cast<std::size_t>(std::popcount(ra[k] ^ rb[k]));
    }
    return bits / 2;
}

int cmd_switch(const CommonOpts& o) {
    Pipeline p = make_pipeline(o);
    const LineSet lines(p.space, p.arc);
    const Graph gamma = build_line_graph(p.space, lines);
    const SwitchingConfig cfg =
        find_switching_config(p.space, p.arc, p.alpha, overrides_of(o), &p.warnings);
    const PartitionSpec ps = build_partition(p.space, cfg, lines);
    const WqhReport wqh = verify_wqh_hypotheses(gamma, ps);
    const Graph gamma_prime = apply_switch(gamma, ps); // refuses unless wqh passes

    json rep{{"field", field_json(p.space.field())},
             {"arc", arc_json(p)},
             {"graph", graph_json(gamma_prime)},
             {"config", json_of(cfg)},
             {"hypotheses", json_of(wqh)},
             {"footprint",
              json{{"switched_vertices", switched_vertices(gamma, ps).size()},
                   {"flipped_pairs", flipped_pairs(gamma, gamma_prime)}}},
             {"warnings", p.warnings}};
    bool pass = wqh.pass;
    if (!o.skip_srg) {
        const SrgCheckResult r = srg_check(gamma_prime);
        if (r.is_srg)
            rep["params"] = json_of(r.params);
        else
            rep["srg_failure"] = r.reason;
        pass = pass && r.is_srg;
    }
    emit_graph(gamma_prime, o.out_dir, "gamma_prime.g6");
    emit_report(rep, o.out_dir);
    return pass ? 0 : 1;
}

int cmd_verify(const std::string& in_path, std::size_t t, const CommonOpts& o, bool have_hm) {
    std::ifstream in(in_path);
    if (!in)
        throw std::invalid_argument("cannot open " + in_path);

    std::optional<PartitionSpec> ps;
    if (have_hm) {
        const Pipeline p = make_pipeline(o);
        const LineSet lines(p.space, p.arc);
        const SwitchingConfig cfg =
            find_switching_config(p.space, p.arc, p.alpha, overrides_of(o), nullptr);
        ps = build_partition(p.space, cfg, lines);
    }

    json graphs = json::array();
    bool all_pass = true;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const Graph g = graph6_decode(line);
        json entry{{"graph", graph_json(g)}};
        const SrgCheckResult r = srg_check(g);
        bool pass = r.is_srg;
        if (r.is_srg)
            entry["params"] = json_of(r.params);
        else
            entry["srg_failure"] = r.reason;
        const GeometricityReport geo = geometricity_report(g, t);
        entry["geometric"] = geo.geometric();
        entry["failing_edges"] = json_of(geo)["failing_edges"];
        entry["geometricity"] = json_of(geo);
        pass = pass && geo.geometric();
        if (ps) {
            const WqhReport wqh = verify_wqh_hypotheses(g, *ps);
            entry["hypotheses"] = json_of(wqh);
            pass = pass && wqh.pass;
        }
        entry["pass"] = pass;
        graphs.push_back(std::move(entry));
        all_pass = all_pass && pass;
    }
    emit_report(json{{"t", t}, {"graphs", graphs}, {"pass", all_pass}}, o.out_dir);
    return all_pass ? 0 : 1;
}

int cmd_witness(const CommonOpts& o) {
    Pipeline p = make_pipeline(o);
    const LineSet lines(p.space, p.arc);
    const Graph gamma = build_line_graph(p.space, lines);
    const SwitchingConfig cfg =
        find_switching_config(p.space, p.arc, p.alpha, overrides_of(o), &p.warnings);
    const PartitionSpec ps = build_partition(p.space, cfg, lines);
    const Graph gamma_prime = apply_switch(gamma, ps);
    const WitnessReport wr = proposition_witness(p.space, cfg, lines, gamma, gamma_prime);

    emit_report(json{{"field", field_json(p.space.field())},
                     {"config", json_of(cfg)},
                     {"witness", json_of(wr)},
                     {"warnings", p.warnings}},
                o.out_dir);
    return wr.pass ? 0 : 1;
}

int cmd_spectrum(const CommonOpts& o, const std::string& in_path,
                 std::vector<std::uint64_t> primes) {
    if (primes.empty())
        primes.assign(std::begin(kDefaultPrimes), std::end(kDefaultPrimes));

    std::optional<Graph> g;
    json rep;
    if (!in_path.empty()) {
        std::ifstream in(in_path);
        if (!in)
            throw std::invalid_argument("cannot open " + in_path);
        std::string line;
        if (!std::getline(in, line))
            throw std::invalid_argument("empty graph6 file");
        g = graph6_decode(line);
    } else {
        const Pipeline p = make_pipeline(o);
        const LineSet lines(p.space, p.arc);
        g = build_line_graph(p.space, lines);
        rep["field"] = field_json(p.space.field());
    }

    rep["graph"] = graph_json(*g);
    const SrgCheckResult r = srg_check(*g);
    if (!r.is_srg) {
        rep["srg_failure"] = r.reason;
        emit_report(rep, o.out_dir);
        return 1;
    }
    rep["params"] = json_of(r.params);
    rep["spectrum"] = json_of(srg_spectrum(r.params));

    const auto polys = char_poly_mod(*g, primes);
    json coeffs = json::object();
    for (std::size_t i = 0; i < primes.size(); ++i)
        coeffs[std::to_string(primes[i])] = polys[i];
    rep["charpoly_mod"] = json{{"primes", primes}, {"coefficients", coeffs}};
    emit_report(rep, o.out_dir);
    return 0;
}

int cmd_explore(const CommonOpts& o, std::size_t depth, std::size_t limit, std::uint64_t seed,
                std::size_t c_override) {
    const Pipeline p = make_pipeline(o);
    const LineSet lines(p.space, p.arc);
    const Graph gamma = build_line_graph(p.space, lines);
    const std::size_t c = c_override > 0 ? c_override : p.space.q();
    const std::size_t clique_size = p.arc.size(); // t + 1

    const Census census = explore(gamma, depth, limit, c, clique_size, seed);

    json entries = json::array();
    for (const CensusEntry& e : census.entries) {
        std::ostringstream hs;
        hs << std::hex << e.fp.hash();
        entries.push_back(json{{"hash", hs.str()},
                               {"depth", e.depth},
                               {"fingerprint", json_of(e.fp)}});
    }
    const json summary{{"root_params", json_of(census.root_params)},
                       {"depth", depth},
                       {"limit_per_level", limit},
                       {"c", c},
                       {"seed", seed},
                       {"switches_applied", census.switches_applied},
                       {"distinct", census.entries.size()},
                       {"entries", entries}};

    if (o.out_dir) {
        std::filesystem::create_directories(*o.out_dir);
        for (const CensusEntry& e : census.entries) {
            std::ostringstream hs;
            hs << std::hex << e.fp.hash();
            std::ofstream f(*o.out_dir + "/" + hs.str() + ".g6");
            f << graph6_encode(e.graph) << "\n";
        }
        std::ofstream f(*o.out_dir + "/census.json");
        f << summary.dump(2) << "\n";
    } else {
        for (const CensusEntry& e : census.entries)
            std::cout << graph6_encode(e.graph) << "\n";
        std::cerr << summary.dump(2) << "\n";
    }
    return 0;
}

int cmd_export(const CommonOpts& o) {
    const Pipeline p = make_pipeline(o);
    const LineSet lines(p.space, p.arc);
    json dirs = json::array();
    for (const ProjPoint& d : lines.dirs())
        dirs.push_back(json_of(d));
    json table = json::array();
    for (std::size_t id = 0; id < lines.size(); ++id)
        table.push_back(json_of(lines.line(id)));
    const json j{{"field", field_json(p.space.field())},
                 {"q", p.space.q()},
                 {"dirs", dirs},
                 {"lines", table}};
    if (o.out_dir) {
        std::filesystem::create_directories(*o.out_dir);
        std::ofstream f(*o.out_dir + "/lines.json");
        f << j.dump(2) << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"line graphs of linear representations, partition switching, exact SRG checks"};
    app.require_subcommand(1);

    CommonOpts build_o, switch_o, verify_o, witness_o, spectrum_o, explore_o, export_o;

    auto* build = app.add_subcommand("build", "construct the line graph and verify it");
    add_build_opts(build, build_o, false);

    auto* swtch = app.add_subcommand("switch", "apply partition switching, emit the new graph");
    add_build_opts(swtch, switch_o, true);

    auto* verify = app.add_subcommand("verify", "check graph6 input: SRG, geometricity, hypotheses");
    std::string verify_in;
    std::size_t verify_t = 0;
    verify->add_option("--in", verify_in, "graph6 file, one graph per line")->required();
    verify->add_option("--t", verify_t, "t of the geometry; pencils are (t+1)-cliques")->required();
    verify->add_option("--h", verify_o.h, "rebuild context to also check switching hypotheses");
    verify->add_option("--m", verify_o.m, "Denniston exponent for the context");
    verify->add_option("--arc", verify_o.arc_path, "arc file for the context");
    verify->add_option("--alpha", "alpha for the context")->each([&verify_o](const std::string& v) {
        verify_o.alpha = std::stoull(v);
    });
    verify->add_option("--out", "output directory")->each([&verify_o](const std::string& v) {
        verify_o.out_dir = v;
    });

    auto* witness = app.add_subcommand("witness", "verify the non-geometricity witness edge");
    add_build_opts(witness, witness_o, true);

    auto* spectrum = app.add_subcommand("spectrum", "spectrum and modular characteristic polynomial");
    std::string spectrum_in;
    std::vector<std::uint64_t> primes;
    spectrum->add_option("--in", spectrum_in, "graph6 file (else build from --h/--m)");
    spectrum->add_option("--h", spectrum_o.h, "field extension degree");
    spectrum->add_option("--m", spectrum_o.m, "Denniston exponent");
    spectrum->add_option("--arc", spectrum_o.arc_path, "arc input file");
    spectrum->add_option("--primes", primes, "odd primes > v, comma separated")->delimiter(',');
    spectrum->add_option("--out", "output directory")->each([&spectrum_o](const std::string& v) {
        spectrum_o.out_dir = v;
    });

    auto* explore_cmd = app.add_subcommand("explore", "bounded repeated-switching census");
    std::size_t depth = 1, limit = 32, c_override = 0;
    std::uint64_t seed = 0;
    add_build_opts(explore_cmd, explore_o, false);
    explore_cmd->add_option("--depth", depth, "switching depth");
    explore_cmd->add_option("--limit", limit, "partitions per graph per level");
    explore_cmd->add_option("--seed", seed, "search seed");
    explore_cmd->add_option("--c", c_override, "partition cell size (default q)");

    auto* export_cmd = app.add_subcommand("export", "dump the vertex-id to line tables as JSON");
    add_build_opts(export_cmd, export_o, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (build->parsed())
            return cmd_build(build_o);
        if (swtch->parsed())
            return cmd_switch(switch_o);
        if (verify->parsed())
            return cmd_verify(verify_in, verify_t, verify_o,
                              verify_o.h > 0 && (verify_o.m > 0 || !verify_o.arc_path.empty()));
        if (witness->parsed())
            return cmd_witness(witness_o);
        if (spectrum->parsed())
            return cmd_spectrum(spectrum_o, spectrum_in, primes);
        if (explore_cmd->parsed())
            return cmd_explore(explore_o, depth, limit, seed, c_override);
        if (export_cmd->parsed())
            return cmd_export(export_o);
    } catch (const HypothesesNotVerified& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const NoSecantError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const NoValidPairError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ThresholdFailError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

#pragma once

#include "tstar/geometry.hpp"
#include "tstar/graph.hpp"
#include "tstar/linrep.hpp"
#include "tstar/switching.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tstar {

struct SrgParams {
    std::size_t v = 0, k = 0, lambda = 0, mu = 0;
    // k(k - lambda - 1) = (v - k - 1) mu
    bool feasible() const;
    bool operator==(const SrgParams&) const = default;
};

struct SrgCheckResult {
    bool is_srg = false;
    SrgParams params;                                          // set when is_srg
    std::optional<std::pair<std::size_t, std::size_t>> violating_pair;
    std::string reason;                                        // set when !is_srg
};

// Verifies regularity, then constant common-neighbor counts over all vertex
// pairs (lambda on edges, mu on non-edges).  Complete and edgeless graphs
// are rejected.
SrgCheckResult srg_check(const Graph& g);

// ((s+1)(st+alpha)/alpha, s(t+1), s-1+t(alpha-1), alpha(t+1)); throws when v
// is not integral.
SrgParams srg_from_geometry(std::size_t s, std::size_t t, std::size_t alpha);

struct Spectrum {
    std::int64_t k = 0, r = 0, s = 0; // eigenvalues, k > r > s
    std::size_t f = 0, g = 0;         // multiplicities of r, s
};

enum class SpectrumStatus {
    ok,
    conference, // restricted eigenvalues irrational; half-case parameters
    infeasible,
};

struct SpectrumResult {
    SpectrumStatus status = SpectrumStatus::infeasible;
    Spectrum spectrum; // valid when status == ok
};

SpectrumResult srg_spectrum(const SrgParams& p);

// Characteristic polynomial of the adjacency matrix modulo each prime, via
// Hessenberg reduction over the prime field.  Coefficients ascending, size
// v+1, monic.  Primes must be odd and > v.
std::vector<std::vector<std::uint64_t>> char_poly_mod(const Graph& g,
                                                      std::span<const std::uint64_t> primes);

// Size of the largest clique containing the edge {u, w}, exact branch and
// bound over N(u) ∩ N(w) with greedy-coloring bounds.  Stops growing once
// the result reaches cap; any returned value >= cap certifies "at least cap".
std::size_t max_clique_through_edge(const Graph& g, std::size_t u, std::size_t w,
                                    std::size_t cap);

// All cliques of exactly the given size containing the edge {u, w}, as
// sorted vertex lists.
std::vector<std::vector<std::size_t>> cliques_of_size_through_edge(const Graph& g, std::size_t u,
                                                                   std::size_t w,
                                                                   std::size_t size);

// Bron–Kerbosch maximal clique enumeration with pivoting.
void for_each_maximal_clique(const Graph& g,
                             const std::function<void(const std::vector<std::size_t>&)>& fn);

struct GeometricityReport {
    std::size_t t = 0;
    std::size_t edges_checked = 0;
    std::vector<std::pair<std::size_t, std::size_t>> failing_edges; // in no (t+1)-clique
    std::size_t pencil_count = 0; // maximal cliques of size >= t+1
    std::map<std::size_t, std::size_t> edge_clique_histogram; // capped max-clique size -> #edges

    bool geometric() const { return failing_edges.empty(); }
};

// Decides, for every edge, membership in some (t+1)-clique, and counts the
// (t+1)-cliques.
GeometricityReport geometricity_report(const Graph& g, std::size_t t);

struct WitnessReport {
    std::size_t l1_id = 0, l2_id = 0;
    AffLine l1, l2;
    AffPoint r; // base point of M1

    bool lines_outside_planes = false;
    bool adjacent_before = false; // geometric meet and line-graph edge
    bool adjacent_after = false;
    bool no_common_neighbor_in_m2 = false;
    std::size_t max_clique_after = 0; // capped at t+1
    bool clique_bound_ok = false;     // max_clique_after <= t
    std::size_t pencil_cliques_before = 0;
    bool unique_pencil_before = false; // exactly one (t+1)-clique, the pencil at R

    bool pass = false;
};

// The witness pair: L_i joins the base point R of M1 to Q_i.  Checks the
// witness edge survives the switch unchanged, has no common neighbor among
// M2's lines, lies in a unique (t+1)-clique before the switch and in none
// after.
WitnessReport proposition_witness(const Space& s, const SwitchingConfig& cfg, const LineSet& ls,
                                  const Graph& gamma, const Graph& gamma_prime);

} // namespace tstar

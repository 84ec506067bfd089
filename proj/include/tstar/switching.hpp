#pragma once

#include "tstar/arc.hpp"
#include "tstar/geometry.hpp"
#include "tstar/graph.hpp"
#include "tstar/linrep.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tstar {

// The tuple driving one switch: a secant kLine of K, a point P of K on it,
// Q1, Q2 in K off it whose span meets kLine outside K, and two distinct
// planes through kLine.
struct SwitchingConfig {
    ProjLine k_line;
    ProjPoint p;
    ProjPoint q1, q2;
    AffPlane m1, m2;
    std::size_t t = 0;     // |K| - 1
    std::size_t alpha = 0; // supplied, not inferred
    std::uint32_t q = 0;

    // indices of the choices, for reports and reproducibility
    std::size_t secant_index = 0; // into the secant list of the profile
    std::size_t p_index = 0;      // into kLine ∩ K
    std::pair<std::size_t, std::size_t> q_pair_index{0, 0}; // into K \ kLine
    std::pair<std::size_t, std::size_t> plane_index{0, 1};  // into the q planes
};

// Explicit choice overrides; any field left empty falls back to the
// deterministic least-index selection.
struct ConfigOverrides {
    std::optional<std::size_t> secant;
    std::optional<std::size_t> p;
    std::optional<std::pair<std::size_t, std::size_t>> q_pair;
    std::optional<std::pair<std::size_t, std::size_t>> planes;
};

// Deterministic least-index configuration search.  Throws ThresholdFailError
// when t <= q(alpha-1), NoSecantError when K has no secant, NoValidPairError
// when no secant admits a Q-pair.  Every invariant of the returned config is
// re-verified, not assumed.
SwitchingConfig find_switching_config(const Space& s, const Arc& k, std::size_t alpha,
                                      const ConfigOverrides& ov = {},
                                      std::vector<std::string>* warnings = nullptr);

// C1, C2 as sorted vertex-id sets; D is implicitly the rest.
struct PartitionSpec {
    std::vector<std::size_t> c1, c2;
};

// C_i = the q lines of direction P inside M_i.
PartitionSpec build_partition(const Space& s, const SwitchingConfig& cfg, const LineSet& l);

struct WqhReport {
    bool valid = false;        // well-formed: disjoint, in range, no duplicates
    bool sizes_equal = false;
    bool c1_regular = false, c2_regular = false, union_regular = false;
    bool degrees_equal = false;
    std::size_t c1_degree = 0, c2_degree = 0, union_degree = 0;
    std::vector<std::size_t> violations; // x in D with unbalanced, partial neighborhoods
    std::size_t switchable = 0;          // #x with N(x) ∩ (C1 ∪ C2) equal to C1 or C2
    bool pass = false;
};

// Checks the switching hypotheses: induced regularity on C1, C2 and C1 ∪ C2,
// equal sizes and induced degrees, and for every x in D either balanced
// neighbor counts or a neighborhood meeting C1 ∪ C2 in exactly C1 or C2.
WqhReport verify_wqh_hypotheses(const Graph& g, const PartitionSpec& ps);

// Vertices whose adjacency to C1 ∪ C2 the switch interchanges.
std::vector<std::size_t> switched_vertices(const Graph& g, const PartitionSpec& ps);

// Interchanges adjacency and nonadjacency between each switchable x in D and
// C1 ∪ C2.  Refuses to run unless verify_wqh_hypotheses passes.
Graph apply_switch(const Graph& g, const PartitionSpec& ps);

} // namespace tstar

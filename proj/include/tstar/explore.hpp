#pragma once

#include "tstar/analysis.hpp"
#include "tstar/graph.hpp"
#include "tstar/switching.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace tstar {

// Isomorphism-invariant summary of a graph, relative to a clique size:
// the number of cliques of that size, the distribution over edges of how
// many such cliques contain each edge, and the per-vertex triangle count
// distribution.
struct Fingerprint {
    std::size_t clique_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edge_hist;     // cliques-on-edge -> #edges
    std::vector<std::pair<std::size_t, std::size_t>> triangle_hist; // triangles-at-vertex -> #vertices

    bool operator==(const Fingerprint&) const = default;
    std::uint64_t hash() const;
};

Fingerprint fingerprint(const Graph& g, std::size_t clique_size);

// Seeded search for partitions passing the switching hypotheses with
// |C1| = |C2| = c.  Candidates are parallel-class-like sets: pairwise
// non-adjacent vertices every two of which share the same common
// neighborhood.  Deterministic for a fixed seed; may under-discover.
std::vector<PartitionSpec> find_generic_partitions(const Graph& g, std::size_t c,
                                                   std::size_t limit, std::uint64_t seed = 0);

struct CensusEntry {
    Fingerprint fp;
    Graph graph;
    std::size_t depth = 0;
};

struct Census {
    SrgParams root_params;
    std::vector<CensusEntry> entries; // insertion order; entry 0 is the root
    std::size_t switches_applied = 0;
};

// Breadth-first repeated switching to the given depth, deduplicating by
// fingerprint.  Every retained graph is checked against the root's strongly
// regular parameters.  The fingerprint-distinct count is a lower bound on
// the number of isomorphism classes.
Census explore(const Graph& root, std::size_t depth, std::size_t limit_per_level, std::size_t c,
               std::size_t clique_size, std::uint64_t seed = 0);

} // namespace tstar

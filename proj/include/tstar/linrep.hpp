#pragma once

#include "tstar/arc.hpp"
#include "tstar/geometry.hpp"
#include "tstar/graph.hpp"

#include <cstdint>
#include <vector>

namespace tstar {

// The lines of AG(3,q) whose point at infinity lies in K, with a dense id
// scheme: id = dirIndex * q^2 + baseIndex, baseIndex the rank of the line's
// canonical base within its parallel class.
class LineSet {
public:
    LineSet(const Space& s, const Arc& k);

    std::size_t size() const { return lines_.size(); } // |K| * q^2
    std::uint32_t q() const { return q_; }

    const AffLine& line(std::size_t id) const { return lines_.at(id); }
    const std::vector<ProjPoint>& dirs() const { return dirs_; }
    std::size_t dir_index(const ProjPoint& d) const;

    std::size_t id_of(const AffLine& l) const;
    // id of the unique line with direction dirs()[dir_idx] through the
    // affine point with the given index
    std::size_t id_through(std::size_t dir_idx, std::size_t aff_idx) const;

private:
    std::uint32_t q_ = 0;
    std::size_t n3_ = 0;
    std::vector<ProjPoint> dirs_;
    std::vector<AffLine> lines_;
    std::vector<std::uint32_t> line_through_; // dir_idx * q^3 + aff_idx -> id
};

// Line graph of the lines in L: vertices are line ids, edges join meeting
// lines.  Built by cliquifying the pencil of every affine point; two meeting
// lines share exactly one point, so this generates the edge set exactly once.
Graph build_line_graph(const Space& s, const LineSet& l);

// Same graph from the pairwise meet predicate; quadratic, kept as an
// independent construction path.
Graph build_line_graph_pairwise(const Space& s, const LineSet& l);

} // namespace tstar

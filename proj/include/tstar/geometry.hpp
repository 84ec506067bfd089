#pragma once

#include "tstar/gf2h.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

namespace tstar {

// Point of PG(2,q): nonzero coordinate triple, normalized so the leftmost
// nonzero coordinate is 1.  Normalized triples compare coordinate-wise.
struct ProjPoint {
    std::array<FieldElem, 3> c{0, 0, 0};
    auto operator<=>(const ProjPoint&) const = default;
};

// Line of PG(2,q): its q+1 points, sorted.
struct ProjLine {
    std::vector<ProjPoint> pts;
    auto operator<=>(const ProjLine&) const = default;
};

// Point of AG(3,q).
struct AffPoint {
    std::array<FieldElem, 3> c{0, 0, 0};
    auto operator<=>(const AffPoint&) const = default;
};

// Line of AG(3,q) in canonical form: base is the lexicographically least of
// the q points {base + t*dir}, dir the point at infinity.
struct AffLine {
    AffPoint base;
    ProjPoint dir;
    auto operator<=>(const AffLine&) const = default;
};

// Plane of AG(3,q), identified by its lexicographically least point and its
// line at infinity.
struct AffPlane {
    AffPoint base;
    ProjLine at_infinity;
    auto operator<=>(const AffPlane&) const = default;
};

// AG(3,q) together with its plane at infinity PG(2,q).  Points and lines of
// the infinite plane are enumerated once, in a fixed canonical order, so they
// can be addressed by dense indices.  Immutable; all queries pure.
class Space {
public:
    explicit Space(Field f);

    const Field& field() const { return f_; }
    std::uint32_t q() const { return f_.q(); }

    // --- PG(2,q), the plane at infinity ---
    const std::vector<ProjPoint>& proj_points() const { return ppoints_; }
    std::size_t proj_index(const ProjPoint& p) const;
    const std::vector<ProjLine>& proj_lines() const { return plines_; }
    std::size_t proj_line_index(const ProjLine& l) const;

    ProjPoint proj_normalize(const std::array<FieldElem, 3>& v) const;
    // Full projective span of two distinct points: q+1 sorted points.
    ProjLine proj_line_through(const ProjPoint& a, const ProjPoint& b) const;

    // --- AG(3,q) ---
    std::size_t point_count() const { return n3_; }
    std::size_t aff_index(const AffPoint& p) const;
    AffPoint aff_point(std::size_t idx) const;

    AffLine line_canonicalize(const AffPoint& p, const ProjPoint& d) const;
    std::vector<AffPoint> line_points(const AffLine& l) const;

    // True iff two distinct lines share an affine point; identical lines are
    // rejected.
    bool lines_meet(const AffLine& l1, const AffLine& l2) const;

    // The q pairwise disjoint planes with the given line at infinity, sorted
    // by base point; they partition AG(3,q).
    std::vector<AffPlane> planes_through_infinite_line(const ProjLine& li) const;

    // The parallel class of direction d inside plane m: q canonical lines
    // covering every plane point once.  d must lie on m's line at infinity.
    std::vector<AffLine> plane_lines_with_direction(const AffPlane& m, const ProjPoint& d) const;

    bool plane_contains(const AffPlane& m, const AffPoint& p) const;
    bool line_in_plane(const AffLine& l, const AffPlane& m) const;

private:
    FieldElem det3(const std::array<FieldElem, 3>& a,
                   const std::array<FieldElem, 3>& b,
                   const std::array<FieldElem, 3>& c) const;

    Field f_;
    std::size_t n3_ = 0; // q^3
    std::vector<ProjPoint> ppoints_;
    std::vector<ProjLine> plines_;
};

} // namespace tstar

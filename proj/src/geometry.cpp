#include "tstar/geometry.hpp"
#include "tstar/common.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tstar {

Space::Space(Field f) : f_(std::move(f)) {
    const std::uint64_t q = f_.q();
    n3_ = static_cast<std::size_t>(q * q * q);

    // points of PG(2,q): (0:0:1), (0:1:c), (1:a:b) -- already in sorted order
    ppoints_.reserve(static_cast<std::size_t>(q * q + q + 1));
    ppoints_.push_back(ProjPoint{{0, 0, 1}});
    for (FieldElem c = 0; c < q; ++c)
        ppoints_.push_back(ProjPoint{{0, 1, c}});
    for (FieldElem a = 0; a < q; ++a)
        for (FieldElem b = 0; b < q; ++b)
            ppoints_.push_back(ProjPoint{{1, a, b}});
    if (!std::is_sorted(ppoints_.begin(), ppoints_.end()))
        throw InternalError("Space: projective point order broken");

    // lines of PG(2,q) via dual coordinates, then sorted by point list
    std::set<ProjLine> lines;
    for (const ProjPoint& d : ppoints_) {
        ProjLine l;
        for (const ProjPoint& p : ppoints_) {
            const FieldElem s = f_.add(f_.add(f_.mul(d.c[0], p.c[0]), f_.mul(d.c[1], p.c[1])),
                                       f_.mul(d.c[2], p.c[2]));
            if (s == 0)
                l.pts.push_back(p);
        }
        if (l.pts.size() != q + 1)
            throw InternalError("Space: projective line with wrong point count");
        lines.insert(std::move(l));
    }
    plines_.assign(lines.begin(), lines.end());
    if (plines_.size() != static_cast<std::size_t>(q * q + q + 1))
        throw InternalError("Space: wrong projective line count");
}

std::size_t Space::proj_index(const ProjPoint& p) const {
    const auto it = std::lower_bound(ppoints_.begin(), ppoints_.end(), p);
    if (it == ppoints_.end() || *it != p)
        throw std::invalid_argument("Space::proj_index: not a normalized point");
    return static_cast<std::size_t>(it - ppoints_.begin());
}

std::size_t Space::proj_line_index(const ProjLine& l) const {
    const auto it = std::lower_bound(plines_.begin(), plines_.end(), l);
    if (it == plines_.end() || *it != l)
        throw std::invalid_argument("Space::proj_line_index: unknown line");
    return static_cast<std::size_t>(it - plines_.begin());
}

ProjPoint Space::proj_normalize(const std::array<FieldElem, 3>& v) const {
    for (int i = 0; i < 3; ++i) {
        if (v[i] != 0) {
            const FieldElem s = f_.inv(v[i]);
            return ProjPoint{{f_.mul(s, v[0]), f_.mul(s, v[1]), f_.mul(s, v[2])}};
        }
    }
    throw std::invalid_argument("Space::proj_normalize: zero vector");
}

ProjLine Space::proj_line_through(const ProjPoint& a, const ProjPoint& b) const {
    if (a == b)
        throw std::invalid_argument("Space::proj_line_through: equal points");
    ProjLine l;
    l.pts.reserve(q() + 1);
    l.pts.push_back(b);
    for (FieldElem t = 0; t < q(); ++t) {
        std::array<FieldElem, 3> v;
        for (int i = 0; i < 3; ++i)
            v[i] = f_.add(a.c[i], f_.mul(t, b.c[i]));
        l.pts.push_back(proj_normalize(v));
    }
    std::sort(l.pts.begin(), l.pts.end());
    if (std::adjacent_find(l.pts.begin(), l.pts.end()) != l.pts.end())
        throw InternalError("Space::proj_line_through: span degenerate");
    return l;
}

std::size_t Space::aff_index(const AffPoint& p) const {
    const std::uint64_t q = f_.q();
    return static_cast<std::size_t>((std::uint64_t{p.c[0]} * q + p.c[1]) * q + p.c[2]);
}

AffPoint Space::aff_point(std::size_t idx) const {
    const std::uint64_t q = f_.q();
    AffPoint p;
    p.c[2] = static_cast<FieldElem>(idx % q);
    p.c[1] = static_cast<FieldElem>((idx / q) % q);
    p.c[0] = static_cast<FieldElem>(idx / (q * q));
    return p;
}

AffLine Space::line_canonicalize(const AffPoint& p, const ProjPoint& d) const {
    AffPoint best = p;
    for (FieldElem t = 1; t < q(); ++t) {
        AffPoint cand;
        for (int i = 0; i < 3; ++i)
            cand.c[i] = f_.add(p.c[i], f_.mul(t, d.c[i]));
        if (cand < best)
            best = cand;
    }
    return AffLine{best, d};
}

std::vector<AffPoint> Space::line_points(const AffLine& l) const {
    std::vector<AffPoint> pts;
    pts.reserve(q());
    for (FieldElem t = 0; t < q(); ++t) {
        AffPoint p;
        for (int i = 0; i < 3; ++i)
            p.c[i] = f_.add(l.base.c[i], f_.mul(t, l.dir.c[i]));
        pts.push_back(p);
    }
    return pts;
}

FieldElem Space::det3(const std::array<FieldElem, 3>& a,
                      const std::array<FieldElem, 3>& b,
                      const std::array<FieldElem, 3>& c) const {
    // characteristic 2: every cofactor sign is +
    const FieldElem m0 = f_.add(f_.mul(b[1], c[2]), f_.mul(b[2], c[1]));
    const FieldElem m1 = f_.add(f_.mul(b[0], c[2]), f_.mul(b[2], c[0]));
    const FieldElem m2 = f_.add(f_.mul(b[0], c[1]), f_.mul(b[1], c[0]));
    return f_.add(f_.add(f_.mul(a[0], m0), f_.mul(a[1], m1)), f_.mul(a[2], m2));
}

bool Space::lines_meet(const AffLine& l1, const AffLine& l2) const {
    if (l1 == l2)
        throw std::invalid_argument("Space::lines_meet: identical lines");
    if (l1.dir == l2.dir)
        return false; // distinct parallels
    std::array<FieldElem, 3> diff;
    for (int i = 0; i < 3; ++i)
        diff[i] = f_.add(l2.base.c[i], l1.base.c[i]);
    return det3(l1.dir.c, l2.dir.c, diff) == 0;
}

std::vector<AffPlane> Space::planes_through_infinite_line(const ProjLine& li) const {
    const std::uint32_t q = f_.q();
    const auto& u = li.pts.at(0).c;
    const auto& w = li.pts.at(1).c;

    std::vector<char> seen(n3_, 0);
    std::vector<AffPlane> planes;
    planes.reserve(q);
    for (std::size_t idx = 0; idx < n3_; ++idx) {
        if (seen[idx])
            continue;
        const AffPoint base = aff_point(idx); // least unseen point = coset base
        for (FieldElem a = 0; a < q; ++a) {
            for (FieldElem b = 0; b < q; ++b) {
                AffPoint p;
                for (int i = 0; i < 3; ++i)
                    p.c[i] = f_.add(base.c[i], f_.add(f_.mul(a, u[i]), f_.mul(b, w[i])));
                seen[aff_index(p)] = 1;
            }
        }
        planes.push_back(AffPlane{base, li});
    }
    if (planes.size() != q)
        throw InternalError("Space::planes_through_infinite_line: wrong plane count");
    return planes;
}

bool Space::plane_contains(const AffPlane& m, const AffPoint& p) const {
    std::array<FieldElem, 3> diff;
    for (int i = 0; i < 3; ++i)
        diff[i] = f_.add(p.c[i], m.base.c[i]);
    return det3(m.at_infinity.pts.at(0).c, m.at_infinity.pts.at(1).c, diff) == 0;
}

bool Space::line_in_plane(const AffLine& l, const AffPlane& m) const {
    return std::binary_search(m.at_infinity.pts.begin(), m.at_infinity.pts.end(), l.dir) &&
           plane_contains(m, l.base);
}

std::vector<AffLine> Space::plane_lines_with_direction(const AffPlane& m, const ProjPoint& d) const {
    const std::uint32_t q = f_.q();
    if (!std::binary_search(m.at_infinity.pts.begin(), m.at_infinity.pts.end(), d))
        throw std::invalid_argument("Space::plane_lines_with_direction: direction not on the plane's infinite line");

    const auto& u = m.at_infinity.pts.at(0).c;
    const auto& w = m.at_infinity.pts.at(1).c;
    std::vector<std::size_t> plane_pts;
    plane_pts.reserve(static_cast<std::size_t>(q) * q);
    for (FieldElem a = 0; a < q; ++a) {
        for (FieldElem b = 0; b < q; ++b) {
            AffPoint p;
            for (int i = 0; i < 3; ++i)
                p.c[i] = f_.add(m.base.c[i], f_.add(f_.mul(a, u[i]), f_.mul(b, w[i])));
            plane_pts.push_back(aff_index(p));
        }
    }
    std::sort(plane_pts.begin(), plane_pts.end());

    std::set<std::size_t> covered;
    std::vector<AffLine> lines;
    lines.reserve(q);
    for (const std::size_t idx : plane_pts) {
        if (covered.count(idx))
            continue;
        const AffLine l = line_canonicalize(aff_point(idx), d);
        for (const AffPoint& p : line_points(l))
            covered.insert(aff_index(p));
        lines.push_back(l);
    }
    if (lines.size() != q || covered.size() != static_cast<std::size_t>(q) * q)
        throw InternalError("Space::plane_lines_with_direction: parallel class broken");
    return lines;
}

} // namespace tstar

#include <doctest.h>

#include "tstar/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace tstar;

TEST_CASE("proj_normalize") {
    const Space s4(Field::create(2));
    CHECK(s4.proj_normalize({0, 2, 3}) == ProjPoint{{0, 1, 2}});
    CHECK(s4.proj_normalize({1, 0, 0}) == ProjPoint{{1, 0, 0}});
    const Space s8(Field::create(3));
    CHECK(s8.proj_normalize({0, 0, 5}) == ProjPoint{{0, 0, 1}});
    CHECK_THROWS_AS(s4.proj_normalize({0, 0, 0}), std::invalid_argument);
    // idempotent
    for (const ProjPoint& p : s4.proj_points())
        CHECK(s4.proj_normalize(p.c) == p);
}

TEST_CASE("projective plane counts") {
    for (const int h : {1, 2, 3}) {
        const Space s(Field::create(h));
        const std::size_t q = s.q();
        CHECK(s.proj_points().size() == q * q + q + 1);
        CHECK(s.proj_lines().size() == q * q + q + 1);
        std::map<ProjPoint, std::size_t> lines_on;
        for (const ProjLine& l : s.proj_lines()) {
            CHECK(l.pts.size() == q + 1);
            CHECK(std::is_sorted(l.pts.begin(), l.pts.end()));
            for (const ProjPoint& p : l.pts)
                ++lines_on[p];
        }
        for (const ProjPoint& p : s.proj_points())
            CHECK(lines_on[p] == q + 1); // dual regularity
        // index round trip
        for (std::size_t i = 0; i < s.proj_points().size(); ++i)
            CHECK(s.proj_index(s.proj_points()[i]) == i);
        for (std::size_t i = 0; i < s.proj_lines().size(); ++i)
            CHECK(s.proj_line_index(s.proj_lines()[i]) == i);
    }
}

TEST_CASE("proj_line_through") {
    const Space s2(Field::create(1));
    const ProjLine l = s2.proj_line_through(ProjPoint{{1, 0, 0}}, ProjPoint{{0, 1, 0}});
    CHECK(l.pts == std::vector<ProjPoint>{{{0, 1, 0}}, {{1, 0, 0}}, {{1, 1, 0}}});

    const Space s4(Field::create(2));
    const auto& pts = s4.proj_points();
    for (std::size_t i = 0; i < pts.size(); i += 5) {
        for (std::size_t j = i + 1; j < pts.size(); j += 3) {
            const ProjLine m = s4.proj_line_through(pts[i], pts[j]);
            CHECK(m.pts.size() == 5);
            CHECK(std::binary_search(m.pts.begin(), m.pts.end(), pts[i]));
            CHECK(std::binary_search(m.pts.begin(), m.pts.end(), pts[j]));
            // the registered line through the same pair is identical
            CHECK(s4.proj_lines()[s4.proj_line_index(m)] == m);
        }
    }
    CHECK_THROWS_AS(s2.proj_line_through(ProjPoint{{1, 0, 0}}, ProjPoint{{1, 0, 0}}),
                    std::invalid_argument);
}

TEST_CASE("line_canonicalize") {
    const Space s2(Field::create(1));
    const AffLine l = s2.line_canonicalize(AffPoint{{1, 0, 0}}, ProjPoint{{1, 0, 0}});
    CHECK(l.base == AffPoint{{0, 0, 0}});

    const Space s4(Field::create(2));
    const AffLine m = s4.line_canonicalize(AffPoint{{3, 1, 2}}, ProjPoint{{1, 0, 0}});
    CHECK(m.base == AffPoint{{0, 1, 2}});
    // idempotent
    CHECK(s4.line_canonicalize(m.base, m.dir) == m);
    // base is the least of the q points
    const auto pts = s4.line_points(m);
    CHECK(*std::min_element(pts.begin(), pts.end()) == m.base);
    CHECK(pts.size() == 4);
}

TEST_CASE("lines_meet basics") {
    const Space s(Field::create(2));
    const AffLine x0 = s.line_canonicalize(AffPoint{{0, 0, 0}}, ProjPoint{{1, 0, 0}});
    const AffLine y0 = s.line_canonicalize(AffPoint{{0, 0, 0}}, ProjPoint{{0, 1, 0}});
    const AffLine y1 = s.line_canonicalize(AffPoint{{0, 0, 1}}, ProjPoint{{0, 1, 0}});
    const AffLine x1 = s.line_canonicalize(AffPoint{{0, 1, 0}}, ProjPoint{{1, 0, 0}});
    CHECK(s.lines_meet(x0, y0));
    CHECK_FALSE(s.lines_meet(x0, y1));
    CHECK_FALSE(s.lines_meet(x0, x1)); // parallels
    CHECK_THROWS_AS(s.lines_meet(x0, x0), std::invalid_argument);
}

TEST_CASE("meeting lines share exactly one point") {
    const Space s(Field::create(2));
    const auto& dirs = s.proj_points();
    // sampled pairs across directions and bases
    for (std::size_t di = 0; di < dirs.size(); di += 4) {
        for (std::size_t dj = di; dj < dirs.size(); dj += 5) {
            for (std::uint32_t b1 = 0; b1 < 64; b1 += 13) {
                for (std::uint32_t b2 = 0; b2 < 64; b2 += 17) {
                    const AffLine l1 = s.line_canonicalize(s.aff_point(b1), dirs[di]);
                    const AffLine l2 = s.line_canonicalize(s.aff_point(b2), dirs[dj]);
                    if (l1 == l2)
                        continue;
                    std::set<std::size_t> common;
                    for (const AffPoint& p : s.line_points(l1))
                        common.insert(s.aff_index(p));
                    std::size_t shared = 0;
                    for (const AffPoint& p : s.line_points(l2))
                        shared += common.count(s.aff_index(p));
                    CHECK(s.lines_meet(l1, l2) == (shared == 1));
                    CHECK(shared <= 1);
                }
            }
        }
    }
}

TEST_CASE("planes through an infinite line partition the space") {
    for (const int h : {1, 2}) {
        const Space s(Field::create(h));
        const std::size_t q = s.q();
        const ProjLine li = s.proj_lines().front();
        const auto planes = s.planes_through_infinite_line(li);
        CHECK(planes.size() == q);
        // sorted by base, first base is the origin
        CHECK(planes[0].base == AffPoint{{0, 0, 0}});
        for (std::size_t i = 1; i < planes.size(); ++i)
            CHECK(planes[i - 1].base < planes[i].base);
        // every affine point lies in exactly one plane
        for (std::size_t idx = 0; idx < s.point_count(); ++idx) {
            std::size_t in = 0;
            for (const AffPlane& m : planes)
                in += s.plane_contains(m, s.aff_point(idx));
            CHECK(in == 1);
        }
        for (const AffPlane& m : planes) {
            std::size_t count = 0;
            for (std::size_t idx = 0; idx < s.point_count(); ++idx)
                count += s.plane_contains(m, s.aff_point(idx));
            CHECK(count == q * q);
        }
    }
}

TEST_CASE("parallel class of a direction inside a plane") {
    const Space s(Field::create(2));
    const ProjLine li = s.proj_lines().front();
    const auto planes = s.planes_through_infinite_line(li);
    const ProjPoint d = li.pts[1];
    for (const AffPlane& m : planes) {
        const auto lines = s.plane_lines_with_direction(m, d);
        CHECK(lines.size() == 4);
        std::set<std::size_t> covered;
        for (const AffLine& l : lines) {
            CHECK(s.line_in_plane(l, m));
            for (const AffPoint& p : s.line_points(l))
                covered.insert(s.aff_index(p));
        }
        CHECK(covered.size() == 16); // every plane point exactly once
        for (std::size_t i = 0; i < lines.size(); ++i)
            for (std::size_t j = i + 1; j < lines.size(); ++j)
                CHECK_FALSE(s.lines_meet(lines[i], lines[j]));
    }
    // direction off the infinite line is rejected
    ProjPoint off;
    for (const ProjPoint& p : s.proj_points())
        if (!std::binary_search(li.pts.begin(), li.pts.end(), p)) {
            off = p;
            break;
        }
    CHECK_THROWS_AS(s.plane_lines_with_direction(planes[0], off), std::invalid_argument);
}

TEST_CASE("q=2 planes through infinite line") {
    const Space s(Field::create(1));
    const auto planes = s.planes_through_infinite_line(s.proj_lines().front());
    CHECK(planes.size() == 2);
    const auto lines = s.plane_lines_with_direction(planes[0], planes[0].at_infinity.pts[0]);
    CHECK(lines.size() == 2);
}

TEST_CASE("pencil of directions through a point") {
    const Space s(Field::create(2));
    const AffPoint p = s.aff_point(37);
    std::set<AffLine> through;
    for (const ProjPoint& d : s.proj_points()) {
        const AffLine l = s.line_canonicalize(p, d);
        const auto pts = s.line_points(l);
        CHECK(std::find(pts.begin(), pts.end(), p) != pts.end());
        through.insert(l);
    }
    CHECK(through.size() == s.proj_points().size()); // one line per direction
}

TEST_CASE("line meets plane by direction") {
    const Space s(Field::create(2));
    const ProjLine li = s.proj_lines()[7];
    const auto planes = s.planes_through_infinite_line(li);
    const AffPlane& m = planes[1];
    for (const ProjPoint& d : s.proj_points()) {
        const AffLine l = s.line_canonicalize(s.aff_point(21), d);
        std::size_t hits = 0;
        for (const AffPoint& p : s.line_points(l))
            hits += s.plane_contains(m, p);
        const bool dir_at_inf = std::binary_search(li.pts.begin(), li.pts.end(), d);
        if (dir_at_inf)
            CHECK((hits == 0 || hits == s.q()));
        else
            CHECK(hits == 1);
    }
}

#include <doctest.h>

#include "tstar/arc.hpp"
#include "tstar/common.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace tstar;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& contents) {
        path = std::filesystem::temp_directory_path() /
               ("tstar_arc_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".txt");
        std::ofstream f(path);
        f << contents;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

} // namespace

TEST_CASE("denniston arc over GF(4), m=1: the hyperoval") {
    const Space s(Field::create(2));
    const Arc k = denniston_arc(s, 1);
    CHECK(k.size() == 6);
    CHECK(k.declared_degree == 2);
    // frozen from the oracle: normalized forms of
    // {(0:0:1),(1:0:1),(0:1:1),(w:w:1),(1:w:1),(w:1:1)}, w = 2, lambda = 2
    const std::vector<ProjPoint> expected = {
        {{0, 0, 1}}, {{0, 1, 1}}, {{1, 0, 1}}, {{1, 1, 3}}, {{1, 2, 1}}, {{1, 3, 3}}};
    CHECK(k.points == expected);
    // the same set, normalizing the raw (x:y:1) coordinates directly
    std::vector<ProjPoint> raw;
    for (const auto& t : std::vector<std::array<FieldElem, 3>>{
             {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {2, 2, 1}, {1, 2, 1}, {2, 1, 1}})
        raw.push_back(s.proj_normalize(t));
    std::sort(raw.begin(), raw.end());
    CHECK(raw == k.points);
}

TEST_CASE("denniston arc sizes for all 0 < m < h <= 4") {
    for (int h = 2; h <= 4; ++h) {
        const Space s(Field::create(h));
        for (int m = 1; m < h; ++m) {
            const Arc k = denniston_arc(s, m);
            const std::size_t expected = (s.q() + 1) * ((1u << m) - 1) + 1;
            CHECK(k.size() == expected);
        }
    }
}

TEST_CASE("intersection profile of the (2,1) arc") {
    const Space s(Field::create(2));
    const Arc k = denniston_arc(s, 1);
    const IntersectionProfile prof = verify_maximal_arc(s, k, 2);
    CHECK(prof.ok);
    CHECK_FALSE(prof.offending_line.has_value());
    CHECK(prof.histogram == std::map<std::size_t, std::size_t>{{0, 6}, {2, 15}});
    CHECK(prof.secants.size() == 15);
    CHECK(prof.geometric_alpha() == 1);
}

TEST_CASE("intersection profiles supported on {0, 2^m} for h <= 4") {
    for (int h = 2; h <= 4; ++h) {
        const Space s(Field::create(h));
        for (int m = 1; m < h; ++m) {
            const Arc k = denniston_arc(s, m);
            const IntersectionProfile prof = verify_maximal_arc(s, k, 1 << m);
            CHECK(prof.ok);
            for (const auto& [size, count] : prof.histogram)
                CHECK((size == 0 || size == (1u << m)));
            // all histogram entries total the line count
            std::size_t total = 0;
            for (const auto& [size, count] : prof.histogram)
                total += count;
            CHECK(total == s.proj_lines().size());
        }
    }
}

TEST_CASE("no arc point at infinity of the arc's own plane") {
    // the Denniston construction lives in {z = 1}; verified, not assumed
    for (int h = 2; h <= 4; ++h) {
        const Space s(Field::create(h));
        for (int m = 1; m < h; ++m)
            for (const ProjPoint& p : denniston_arc(s, m).points)
                CHECK(p.c[2] != 0);
    }
}

TEST_CASE("single point arc profile") {
    const Space s(Field::create(2));
    Arc k;
    k.q = s.q();
    k.points = {s.proj_points()[3]};
    const IntersectionProfile prof = verify_maximal_arc(s, k, 2);
    CHECK_FALSE(prof.ok);
    CHECK(prof.offending_line.has_value());
    CHECK(prof.histogram ==
          std::map<std::size_t, std::size_t>{{0, 16}, {1, 5}}); // q^2 external, q+1 tangent
}

TEST_CASE("quadratic form anisotropy and level set sizes") {
    for (const int h : {2, 3, 4}) {
        const Field f = Field::create(h);
        const FieldElem lam = find_irreducible_lambda(f);
        std::vector<std::size_t> level(f.q(), 0);
        for (FieldElem x = 0; x < f.q(); ++x)
            for (FieldElem y = 0; y < f.q(); ++y) {
                const FieldElem v =
                    f.add(f.add(f.mul(x, x), f.mul(lam, f.mul(x, y))), f.mul(y, y));
                if (v == 0)
                    CHECK((x == 0 && y == 0));
                ++level[v];
            }
        CHECK(level[0] == 1);
        for (FieldElem c = 1; c < f.q(); ++c)
            CHECK(level[c] == f.q() + 1);
    }
}

TEST_CASE("denniston arc rejects m out of range") {
    const Space s(Field::create(3));
    CHECK_THROWS_AS(denniston_arc(s, 0), std::invalid_argument);
    CHECK_THROWS_AS(denniston_arc(s, 3), std::invalid_argument);
    CHECK_THROWS_AS(denniston_arc(s, -1), std::invalid_argument);
}

TEST_CASE("load_arc") {
    const Space s(Field::create(2));

    SUBCASE("two points") {
        TempFile tf("1 0 1\n0 1 1\n");
        const Arc k = load_arc(tf.path, s);
        CHECK(k.size() == 2);
        CHECK_FALSE(k.declared_degree.has_value());
        CHECK(k.contains(ProjPoint{{1, 0, 1}}));
        CHECK(k.contains(ProjPoint{{0, 1, 1}}));
    }
    SUBCASE("comments, blank lines, unnormalized input") {
        TempFile tf("# header\n\n0 2 3  # = (0:1:2)\n");
        const Arc k = load_arc(tf.path, s);
        CHECK(k.points == std::vector<ProjPoint>{{{0, 1, 2}}});
    }
    SUBCASE("duplicate point warns and dedups") {
        TempFile tf("1 0 1\n2 0 2\n"); // (2:0:2) normalizes to (1:0:1)
        std::vector<std::string> warnings;
        const Arc k = load_arc(tf.path, s, &warnings);
        CHECK(k.size() == 1);
        CHECK(warnings.size() == 1);
    }
    SUBCASE("coordinate out of range") {
        TempFile tf("4 0 1\n");
        CHECK_THROWS_AS(load_arc(tf.path, s), std::runtime_error);
    }
    SUBCASE("malformed line") {
        TempFile tf("1 0\n");
        CHECK_THROWS_AS(load_arc(tf.path, s), std::runtime_error);
    }
    SUBCASE("zero vector") {
        TempFile tf("0 0 0\n");
        CHECK_THROWS_AS(load_arc(tf.path, s), std::runtime_error);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_arc("/nonexistent/arc.txt", s), std::runtime_error);
    }
}

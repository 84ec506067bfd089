#include <doctest.h>

#include "tstar/common.hpp"
#include "tstar/gf2h.hpp"

#include <random>

using namespace tstar;

namespace {

// Independent polynomial arithmetic over GF(2), used as the oracle.
int odeg(std::uint64_t f) {
    int d = -1;
    while (f) {
        ++d;
        f >>= 1;
    }
    return d;
}

std::uint64_t omod(std::uint64_t a, std::uint64_t b) {
    while (a && odeg(a) >= odeg(b))
        a ^= b << (odeg(a) - odeg(b));
    return a;
}

std::uint64_t omul_poly(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    for (; b; b >>= 1, a <<= 1)
        if (b & 1)
            r ^= a;
    return r;
}

// trial division by every polynomial of degree 1..deg-1 (deliberately lazier
// than the library's half-degree cut)
bool oracle_irreducible(std::uint32_t f) {
    const int d = odeg(f);
    if (d < 1)
        return false;
    for (std::uint32_t g = 2; odeg(g) < d; ++g)
        if (omod(f, g) == 0)
            return false;
    return true;
}

std::uint32_t omul(const Field& f, std::uint32_t a, std::uint32_t b) {
    return static_cast<std::uint32_t>(omod(omul_poly(a, b), f.modulus()));
}

} // namespace

TEST_CASE("smallest irreducible modulus per degree") {
    // frozen from the oracle sweep
    const std::uint32_t expected[17] = {0,  2,    7,    11,   19,   37,    67,    131,  283,
                                        515, 1033, 2053, 4105, 8219, 16417, 32771, 65579};
    for (int h = 1; h <= 16; ++h) {
        const Field f = Field::create(h);
        CHECK(f.modulus() == expected[h]);
        CHECK(f.q() == (1u << h));
        CHECK(oracle_irreducible(f.modulus()));
        for (std::uint32_t m = 1u << h; m < f.modulus(); ++m)
            CHECK_FALSE(oracle_irreducible(m));
    }
}

TEST_CASE("GF(4) basic arithmetic") {
    const Field f = Field::create(2);
    CHECK(f.mul(2, 3) == 1);
    CHECK(f.inv(2) == 3);
    CHECK(f.mul(3, 3) == 2);
    CHECK(f.trace(2) == 1);
    for (FieldElem a = 0; a < 4; ++a)
        CHECK(f.add(a, a) == 0);
}

TEST_CASE("GF(2) degenerate field") {
    const Field f = Field::create(1);
    CHECK(f.modulus() == 2);
    CHECK(f.mul(1, 1) == 1);
    CHECK(f.inv(1) == 1);
    CHECK(f.add(1, 1) == 0);
    CHECK(f.trace(1) == 1);
    CHECK(f.trace(0) == 0);
}

TEST_CASE("field axioms, exhaustive for small q") {
    for (const int h : {1, 2, 3, 4}) {
        const Field f = Field::create(h);
        for (FieldElem a = 0; a < f.q(); ++a) {
            if (a != 0)
                CHECK(f.mul(a, f.inv(a)) == 1);
            for (FieldElem b = 0; b < f.q(); ++b) {
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.mul(a, b) == omul(f, a, b)); // against the oracle path
                for (FieldElem c = 0; c < f.q(); ++c) {
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("field axioms, sampled for large q") {
    std::mt19937 rng(12345);
    for (const int h : {8, 11, 13, 16}) {
        const Field f = Field::create(h);
        std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
        for (int trial = 0; trial < 500; ++trial) {
            const FieldElem a = pick(rng), b = pick(rng), c = pick(rng);
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.mul(a, b) == omul(f, a, b));
            if (a != 0)
                CHECK(f.mul(a, f.inv(a)) == 1);
        }
    }
}

TEST_CASE("frobenius is a bijection") {
    for (int h = 1; h <= 16; ++h) {
        const Field f = Field::create(h);
        std::vector<char> hit(f.q(), 0);
        for (FieldElem a = 0; a < f.q(); ++a)
            hit[f.mul(a, a)] = 1;
        std::size_t n = 0;
        for (const char c : hit)
            n += c;
        CHECK(n == f.q());
    }
}

TEST_CASE("trace is GF(2)-linear and balanced") {
    for (const int h : {1, 2, 3, 4, 6, 8}) {
        const Field f = Field::create(h);
        std::size_t ones = 0;
        for (FieldElem a = 0; a < f.q(); ++a) {
            const FieldElem t = f.trace(a);
            CHECK((t == 0 || t == 1));
            ones += t;
            for (FieldElem b = 0; b < f.q(); ++b)
                CHECK(f.trace(f.add(a, b)) == (f.trace(a) ^ f.trace(b)));
        }
        CHECK(ones == f.q() / 2);
    }
}

TEST_CASE("pow") {
    const Field f = Field::create(3);
    CHECK(f.pow(2, 0) == 1);
    CHECK(f.pow(0, 0) == 1);
    CHECK(f.pow(0, 5) == 0);
    for (FieldElem a = 1; a < f.q(); ++a)
        CHECK(f.pow(a, f.q() - 1) == 1); // Lagrange
}

TEST_CASE("irreducible lambda values") {
    // frozen from the exhaustive root-check oracle
    CHECK(find_irreducible_lambda(Field::create(2)) == 2);
    CHECK(find_irreducible_lambda(Field::create(3)) == 1);
    CHECK(find_irreducible_lambda(Field::create(4)) == 2);

    // lambda = 1 rejected in GF(4): omega is a root of y^2 + y + 1
    const Field f4 = Field::create(2);
    CHECK(f4.add(f4.add(f4.mul(2, 2), f4.mul(1, 2)), 1) == 0);

    // the returned lambda really makes y^2 + lambda*y + 1 rootless
    for (const int h : {2, 3, 4, 5}) {
        const Field f = Field::create(h);
        const FieldElem lam = find_irreducible_lambda(f);
        for (FieldElem y = 0; y < f.q(); ++y)
            CHECK(f.add(f.add(f.mul(y, y), f.mul(lam, y)), 1) != 0);
    }
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(Field::create(0), std::invalid_argument);
    CHECK_THROWS_AS(Field::create(17), std::invalid_argument);
    const Field f = Field::create(2);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
    CHECK_THROWS_AS(f.mul(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(f.add(1, 7), std::invalid_argument);
    CHECK_THROWS_AS(find_irreducible_lambda(Field::create(1)), std::invalid_argument);
}

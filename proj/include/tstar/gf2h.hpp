#pragma once

#include <cstdint>
#include <vector>

namespace tstar {

// Element of GF(2^h) in the polynomial basis: bit i = coefficient of x^i.
using FieldElem = std::uint32_t;

// Returns true iff f, read as a polynomial over GF(2), is irreducible.
// Trial division by every polynomial of degree 1..deg(f)/2.
bool gf2_poly_irreducible(std::uint32_t f);

// GF(2^h), 1 <= h <= 16.  Immutable after creation; all operations pure.
class Field {
public:
    // Field with the lexicographically smallest irreducible modulus of
    // degree h (smallest integer encoding with the leading bit set).
    static Field create(int h);

    int h() const { return h_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t modulus() const { return modulus_; }

    bool valid(FieldElem a) const { return a < q_; }

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;                 // throws on a == 0
    FieldElem pow(FieldElem a, std::uint64_t e) const;
    FieldElem trace(FieldElem a) const;               // in {0, 1}

private:
    Field() = default;
    void build_tables();
    FieldElem mul_notable(FieldElem a, FieldElem b) const;
    void check(FieldElem a) const;

    int h_ = 0;
    std::uint32_t q_ = 0;
    std::uint32_t modulus_ = 0;
    // log/antilog tables for table sizes up to 2^12; larger fields reduce
    // on the fly
    std::vector<std::uint32_t> log_, exp_;
    std::uint32_t generator_ = 0;
};

// Smallest lambda such that y^2 + lambda*y + 1 has no root in GF(q).
// Exhaustive root check; requires h >= 2.
FieldElem find_irreducible_lambda(const Field& f);

} // namespace tstar

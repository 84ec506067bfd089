#include "tstar/gf2h.hpp"
#include "tstar/common.hpp"

#include <bit>
#include <stdexcept>

namespace tstar {

namespace {

int poly_degree(std::uint64_t f) {
    return f == 0 ? -1 : std::bit_width(f) - 1;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
    const int db = poly_degree(b);
    while (a != 0 && poly_degree(a) >= db)
        a ^= b << (poly_degree(a) - db);
    return a;
}

} // namespace

bool gf2_poly_irreducible(std::uint32_t f) {
    const int d = poly_degree(f);
    if (d < 1)
        return false;
    for (std::uint32_t g = 2; poly_degree(g) * 2 <= d; ++g)
        if (poly_mod(f, g) == 0)
            return false;
    return true;
}

Field Field::create(int h) {
    if (h < 1 || h > 16)
        throw std::invalid_argument("Field::create: h must be in [1, 16]");
    Field f;
    f.h_ = h;
    f.q_ = std::uint32_t{1} << h;
    for (std::uint32_t m = f.q_; m < (f.q_ << 1); ++m) {
        if (gf2_poly_irreducible(m)) {
            f.modulus_ = m;
            break;
        }
    }
    if (f.modulus_ == 0)
        throw InternalError("Field::create: no irreducible modulus found");
    if (h <= 12)
        f.build_tables();
    return f;
}

FieldElem Field::mul_notable(FieldElem a, FieldElem b) const {
    std::uint64_t r = 0, aa = a;
    for (std::uint32_t bb = b; bb != 0; bb >>= 1, aa <<= 1)
        if (bb & 1)
            r ^= aa;
    for (int i = poly_degree(r); i >= h_; i = poly_degree(r))
        r ^= std::uint64_t{modulus_} << (i - h_);
    return static_cast<FieldElem>(r);
}

void Field::build_tables() {
    const std::uint32_t n = q_ - 1; // multiplicative group order
    exp_.assign(n, 0);
    log_.assign(q_, 0);
    if (n == 1) { // GF(2)
        exp_[0] = 1;
        log_[1] = 0;
        generator_ = 1;
        return;
    }
    for (std::uint32_t g = 2; g < q_; ++g) {
        FieldElem b = 1;
        std::uint32_t i = 0;
        for (; i < n; ++i) {
            exp_[i] = b;
            b = mul_notable(b, g);
            if (b == 1)
                break;
        }
        if (i == n - 1) { // full period: g generates all q-1 nonzero elements
            generator_ = g;
            for (std::uint32_t j = 0; j < n; ++j)
                log_[exp_[j]] = j;
            return;
        }
    }
    throw InternalError("Field::build_tables: no generator found");
}

void Field::check(FieldElem a) const {
    if (!valid(a))
        throw std::invalid_argument("Field: element out of range");
}

FieldElem Field::add(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    return a ^ b;
}

FieldElem Field::mul(FieldElem a, FieldElem b) const {
    check(a);
    check(b);
    if (a == 0 || b == 0)
        return 0;
    if (!exp_.empty()) {
        std::uint32_t s = log_[a] + log_[b];
        const std::uint32_t n = q_ - 1;
        if (s >= n)
            s -= n;
        return exp_[s];
    }
    return mul_notable(a, b);
}

FieldElem Field::inv(FieldElem a) const {
    check(a);
    if (a == 0)
        throw std::domain_error("Field::inv: zero has no inverse");
    if (!exp_.empty()) {
        const std::uint32_t n = q_ - 1;
        return exp_[(n - log_[a]) % n];
    }
    return pow(a, q_ - 2);
}

FieldElem Field::pow(FieldElem a, std::uint64_t e) const {
    check(a);
    FieldElem r = 1, base = a;
    while (e != 0) {
        if (e & 1)
            r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FieldElem Field::trace(FieldElem a) const {
    check(a);
    FieldElem acc = 0, x = a;
    for (int i = 0; i < h_; ++i) {
        acc ^= x;
        x = mul(x, x);
    }
    if (acc > 1)
        throw InternalError("Field::trace: value outside GF(2)");
    return acc;
}

FieldElem find_irreducible_lambda(const Field& f) {
    if (f.h() < 2)
        throw std::invalid_argument("find_irreducible_lambda: requires h >= 2");
    for (FieldElem lam = 0; lam < f.q(); ++lam) {
        bool rootless = true;
        for (FieldElem y = 0; y < f.q(); ++y) {
            const FieldElem v = f.add(f.add(f.mul(y, y), f.mul(lam, y)), 1);
            if (v == 0) {
                rootless = false;
                break;
            }
        }
        if (rootless)
            return lam;
    }
    throw InternalError("find_irreducible_lambda: exhaustive search failed");
}

} // namespace tstar

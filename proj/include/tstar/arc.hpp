#pragma once

#include "tstar/geometry.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tstar {

// A point set K in the plane at infinity.
struct Arc {
    std::vector<ProjPoint> points; // normalized, distinct, sorted
    std::uint32_t q = 0;
    std::optional<int> declared_degree; // 2^m for Denniston arcs

    std::size_t size() const { return points.size(); }
    bool contains(const ProjPoint& p) const;
};

// |line ∩ K| for every line of PG(2,q).
struct IntersectionProfile {
    std::map<std::size_t, std::size_t> histogram; // intersection size -> #lines
    std::vector<std::size_t> secants;             // canonical indices of lines with |∩K| >= 2
    bool ok = false;                              // every size in {0, degree}
    std::optional<std::size_t> offending_line;    // first line violating the profile

    // alpha of the geometry carried by K: max line intersection minus one
    std::size_t geometric_alpha() const;
};

// Denniston arc of degree 2^m in PG(2,q), q = 2^h, 0 < m < h:
// {(x : y : 1) : x^2 + lambda*x*y + y^2 in A} with lambda the smallest
// element making the form anisotropic and A = {0, ..., 2^m - 1} (the span of
// the first m polynomial-basis vectors).
Arc denniston_arc(const Space& s, int m);

// Checks |l ∩ K| ∈ {0, degree} over all projective lines; the full profile
// and secant list are returned either way.
IntersectionProfile verify_maximal_arc(const Space& s, const Arc& k, int degree);

// Arc input format: one point per line, three space-separated integers
// (FieldElem encodings); '#' starts a comment.  Points are normalized,
// deduplicated (with a warning) and sorted.
Arc load_arc(const std::filesystem::path& path, const Space& s,
             std::vector<std::string>* warnings = nullptr);

} // namespace tstar

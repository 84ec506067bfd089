#include "tstar/arc.hpp"
#include "tstar/common.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace tstar {

bool Arc::contains(const ProjPoint& p) const {
    return std::binary_search(points.begin(), points.end(), p);
}

std::size_t IntersectionProfile::geometric_alpha() const {
    std::size_t mx = 0;
    for (const auto& [size, count] : histogram)
        if (count > 0)
            mx = std::max(mx, size);
    return mx == 0 ? 0 : mx - 1;
}

Arc denniston_arc(const Space& s, int m) {
    const Field& f = s.field();
    if (m <= 0 || m >= f.h())
        throw std::invalid_argument("denniston_arc: need 0 < m < h");
    const FieldElem lam = find_irreducible_lambda(f);
    const FieldElem degree = FieldElem{1} << m; // subgroup A = [0, 2^m)

    std::set<ProjPoint> pts;
    for (FieldElem x = 0; x < f.q(); ++x) {
        for (FieldElem y = 0; y < f.q(); ++y) {
            const FieldElem v =
                f.add(f.add(f.mul(x, x), f.mul(lam, f.mul(x, y))), f.mul(y, y));
            if (v < degree)
                pts.insert(s.proj_normalize({x, y, 1}));
        }
    }
    Arc k;
    k.points.assign(pts.begin(), pts.end());
    k.q = f.q();
    k.declared_degree = static_cast<int>(degree);

    const std::size_t expected =
        (std::size_t{f.q()} + 1) * (degree - 1) + 1; // (2^h+1)(2^m-1)+1
    if (k.size() != expected)
        throw InternalError("denniston_arc: wrong arc size");
    return k;
}

IntersectionProfile verify_maximal_arc(const Space& s, const Arc& k, int degree) {
    if (degree < 1)
        throw std::invalid_argument("verify_maximal_arc: degree must be positive");
    IntersectionProfile prof;
    prof.ok = true;
    const auto& lines = s.proj_lines();
    for (std::size_t li = 0; li < lines.size(); ++li) {
        std::size_t n = 0;
        for (const ProjPoint& p : lines[li].pts)
            if (k.contains(p))
                ++n;
        ++prof.histogram[n];
        if (n >= 2)
            prof.secants.push_back(li);
        if (n != 0 && n != static_cast<std::size_t>(degree) && prof.ok) {
            prof.ok = false;
            prof.offending_line = li;
        }
    }
    return prof;
}

Arc load_arc(const std::filesystem::path& path, const Space& s,
             std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("load_arc: cannot open " + path.string());

    std::set<ProjPoint> pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ss(line);
        long long a, b, c;
        if (!(ss >> a)) // blank or comment-only line
            continue;
        if (!(ss >> b >> c))
            throw std::runtime_error("load_arc: malformed line " + std::to_string(lineno));
        std::string rest;
        if (ss >> rest)
            throw std::runtime_error("load_arc: trailing tokens on line " + std::to_string(lineno));
        for (const long long v : {a, b, c})
            if (v < 0 || v >= static_cast<long long>(s.q()))
                throw std::runtime_error("load_arc: coordinate out of range on line " +
                                         std::to_string(lineno));
        if (a == 0 && b == 0 && c == 0)
            throw std::runtime_error("load_arc: zero vector on line " + std::to_string(lineno));
        const ProjPoint p = s.proj_normalize({static_cast<FieldElem>(a),
                                              static_cast<FieldElem>(b),
                                              static_cast<FieldElem>(c)});
        if (!pts.insert(p).second && warnings)
            warnings->push_back("duplicate point on line " + std::to_string(lineno));
    }
    Arc k;
    k.points.assign(pts.begin(), pts.end());
    k.q = s.q();
    return k;
}

} // namespace tstar

#include "tstar/linrep.hpp"
#include "tstar/common.hpp"

#include <algorithm>
#include <stdexcept>

namespace tstar {

LineSet::LineSet(const Space& s, const Arc& k) {
    if (k.points.empty())
        throw std::invalid_argument("LineSet: empty arc");
    if (k.q != s.q())
        throw std::invalid_argument("LineSet: arc/space field mismatch");
    q_ = s.q();
    n3_ = s.point_count();
    dirs_ = k.points; // sorted
    const std::size_t q2 = std::size_t{q_} * q_;

    lines_.reserve(dirs_.size() * q2);
    line_through_.assign(dirs_.size() * n3_, 0);
    for (std::size_t di = 0; di < dirs_.size(); ++di) {
        std::vector<char> seen(n3_, 0);
        std::size_t base_index = 0;
        for (std::size_t idx = 0; idx < n3_; ++idx) {
            if (seen[idx])
                continue;
            // first unseen point of the class is the line's canonical base
            const AffLine l{s.aff_point(idx), dirs_[di]};
            const std::size_t id = di * q2 + base_index;
            for (const AffPoint& p : s.line_points(l)) {
                const std::size_t pi = s.aff_index(p);
                seen[pi] = 1;
                line_through_[di * n3_ + pi] = static_cast<std::uint32_t>(id);
            }
            lines_.push_back(l);
            ++base_index;
        }
        if (base_index != q2)
            throw InternalError("LineSet: parallel class has wrong size");
    }
}

std::size_t LineSet::dir_index(const ProjPoint& d) const {
    const auto it = std::lower_bound(dirs_.begin(), dirs_.end(), d);
    if (it == dirs_.end() || *it != d)
        throw std::invalid_argument("LineSet::dir_index: direction not in arc");
    return static_cast<std::size_t>(it - dirs_.begin());
}

std::size_t LineSet::id_of(const AffLine& l) const {
    const std::size_t di = dir_index(l.dir);
    const std::uint64_t q = q_;
    const std::size_t bi =
        static_cast<std::size_t>((std::uint64_t{l.base.c[0]} * q + l.base.c[1]) * q + l.base.c[2]);
    const std::size_t id = line_through_.at(di * n3_ + bi);
    if (lines_[id] != l)
        throw std::invalid_argument("LineSet::id_of: line not canonical");
    return id;
}

std::size_t LineSet::id_through(std::size_t dir_idx, std::size_t aff_idx) const {
    if (dir_idx >= dirs_.size() || aff_idx >= n3_)
        throw std::out_of_range("LineSet::id_through: index out of range");
    return line_through_[dir_idx * n3_ + aff_idx];
}

Graph build_line_graph(const Space& s, const LineSet& l) {
    GraphBuilder b(l.size());
    const std::size_t nd = l.dirs().size();
    std::vector<std::size_t> pencil(nd);
    for (std::size_t p = 0; p < s.point_count(); ++p) {
        for (std::size_t di = 0; di < nd; ++di)
            pencil[di] = l.id_through(di, p);
        b.add_clique(pencil);
    }
    return std::move(b).build();
}

Graph build_line_graph_pairwise(const Space& s, const LineSet& l) {
    GraphBuilder b(l.size());
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j)
            if (s.lines_meet(l.line(i), l.line(j)))
                b.add_edge(i, j);
    return std::move(b).build();
}

} // namespace tstar

#pragma once

#include "space.hpp"

#include <stdexcept>
#include <vector>

namespace ultratree {

// Part structure of the diametrical graph. The graph itself is never
// materialized: two points are adjacent iff they lie in different parts.
struct DiametralPartition {
    std::vector<PointSet> parts;
    Rat space_diameter;
};

// Parts are the equivalence classes of d(u,v) < diam X, listed by lowest
// contained point index. In an ultrametric space this relation is an
// equivalence; transitivity is re-checked and a violation indicates a
// corrupt (unvalidated) matrix.
inline DiametralPartition diametral_partition(const UltraSpace& space) {
    if (space.size() < 2)
        throw SubsetError(SubsetError::Kind::TooSmall, "diametral partition needs at least 2 points");
    const Rat diam = diameter(space, space.all_points());
    std::vector<int> part_of(static_cast<size_t>(space.size()), -1);
    std::vector<PointSet> parts;
    for (int p = 0; p < space.size(); ++p) {
        if (part_of[static_cast<size_t>(p)] != -1) continue;
        PointSet part{p};
        part_of[static_cast<size_t>(p)] = static_cast<int>(parts.size());
        for (int q = p + 1; q < space.size(); ++q)
            if (part_of[static_cast<size_t>(q)] == -1 && space.dist(p, q) < diam) {
                part_of[static_cast<size_t>(q)] = static_cast<int>(parts.size());
                part.push_back(q);
            }
        parts.push_back(std::move(part));
    }
    for (int u = 0; u < space.size(); ++u)
        for (int v = u + 1; v < space.size(); ++v) {
            const bool same = part_of[static_cast<size_t>(u)] == part_of[static_cast<size_t>(v)];
            if (same != (space.dist(u, v) < diam))
                throw std::logic_error("below-diameter relation is not transitive; matrix is not ultrametric");
        }
    return DiametralPartition{std::move(parts), diam};
}

// True iff some part is a single point; equivalently the diametrical
// graph has a spanning star, equivalently X is a centered sphere.
inline bool has_singleton_part(const DiametralPartition& partition) {
    for (const auto& part : partition.parts)
        if (part.size() == 1) return true;
    return false;
}

} // namespace ultratree

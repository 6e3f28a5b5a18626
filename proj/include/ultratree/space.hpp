#pragma once

#include "rational.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ultratree {

// Point subset of a space, as sorted distinct indices into UltraSpace::points().
using PointSet = std::vector<int>;

struct SpaceError : std::runtime_error {
    enum class Kind {
        BadShape,
        DuplicateName,
        NegativeDistance,
        NonzeroDiagonal,
        ZeroOffDiagonal,
        Asymmetric,
        StrongTriangleViolation,
    };
    Kind kind;
    std::vector<std::string> witnesses;

    SpaceError(Kind k, std::vector<std::string> w, const std::string& msg)
        : std::runtime_error(msg), kind(k), witnesses(std::move(w)) {}
};

struct SubsetError : std::runtime_error {
    enum class Kind { EmptySubset, UnknownPoint, TooSmall, NotABall, EmptySpace };
    Kind kind;

    SubsetError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// A finite set of named points with a validated ultrametric distance
// matrix. Construction goes through validate(); every downstream
// operation may assume the axioms.
class UltraSpace {
public:
    static UltraSpace validate(std::vector<std::string> names,
                               std::vector<std::vector<Rat>> matrix) {
        const size_t n = names.size();
        if (n == 0)
            throw SpaceError(SpaceError::Kind::BadShape, {}, "space must have at least one point");
        if (matrix.size() != n)
            throw SpaceError(SpaceError::Kind::BadShape, {}, "matrix row count does not match point count");
        for (const auto& row : matrix)
            if (row.size() != n)
                throw SpaceError(SpaceError::Kind::BadShape, {}, "matrix is not square");
        {
            std::set<std::string> seen;
            for (const auto& name : names)
                if (!seen.insert(name).second)
                    throw SpaceError(SpaceError::Kind::DuplicateName, {name},
                                     "duplicate point name '" + name + "'");
        }
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (matrix[i][j] < 0)
                    throw SpaceError(SpaceError::Kind::NegativeDistance, {names[i], names[j]},
                                     "negative distance d(" + names[i] + "," + names[j] + ")");
        for (size_t i = 0; i < n; ++i)
            if (matrix[i][i] != 0)
                throw SpaceError(SpaceError::Kind::NonzeroDiagonal, {names[i]},
                                 "nonzero diagonal at " + names[i]);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                if (matrix[i][j] != matrix[j][i])
                    throw SpaceError(SpaceError::Kind::Asymmetric, {names[i], names[j]},
                                     "d(" + names[i] + "," + names[j] + ") != d(" + names[j] + "," + names[i] + ")");
                if (matrix[i][j] == 0)
                    throw SpaceError(SpaceError::Kind::ZeroOffDiagonal, {names[i], names[j]},
                                     "distinct points " + names[i] + "," + names[j] + " at distance 0");
            }
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k)
                    if (matrix[i][j] > std::max(matrix[i][k], matrix[k][j]))
                        throw SpaceError(SpaceError::Kind::StrongTriangleViolation,
                                         {names[i], names[j], names[k]},
                                         "d(" + names[i] + "," + names[j] + ") > max(d(" + names[i] + "," +
                                             names[k] + "), d(" + names[k] + "," + names[j] + "))");
        return UltraSpace(std::move(names), std::move(matrix));
    }

    // Caller guarantees the axioms (restrictions of validated matrices).
    static UltraSpace from_parts_unchecked(std::vector<std::string> names,
                                           std::vector<std::vector<Rat>> matrix) {
        return UltraSpace(std::move(names), std::move(matrix));
    }

    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<std::string>& points() const { return points_; }
    const std::string& name(int i) const { return points_[static_cast<size_t>(i)]; }
    const Rat& dist(int i, int j) const {
        return dist_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    const std::vector<std::vector<Rat>>& matrix() const { return dist_; }

    // -1 when absent.
    int index_of(std::string_view name) const {
        for (size_t i = 0; i < points_.size(); ++i)
            if (points_[i] == name) return static_cast<int>(i);
        return -1;
    }

    PointSet all_points() const {
        PointSet all(points_.size());
        for (size_t i = 0; i < points_.size(); ++i) all[i] = static_cast<int>(i);
        return all;
    }

    bool same_matrix(const UltraSpace& other) const {
        return points_ == other.points_ && dist_ == other.dist_;
    }

private:
    UltraSpace(std::vector<std::string> names, std::vector<std::vector<Rat>> matrix)
        : points_(std::move(names)), dist_(std::move(matrix)) {}

    std::vector<std::string> points_;
    std::vector<std::vector<Rat>> dist_;
};

// Nonempty point subset together with its diameter. Identity is the
// member set; the diameter is a cached derived quantity.
struct Ball {
    PointSet members;
    Rat diameter;

    bool operator==(const Ball& other) const { return members == other.members; }
    bool operator<(const Ball& other) const { return members < other.members; }
};

namespace detail {

inline void check_subset(const UltraSpace& space, const PointSet& subset) {
    if (subset.empty())
        throw SubsetError(SubsetError::Kind::EmptySubset, "empty point subset");
    for (int p : subset)
        if (p < 0 || p >= space.size())
            throw SubsetError(SubsetError::Kind::UnknownPoint,
                              "point index " + std::to_string(p) + " out of range");
}

inline PointSet sorted_unique(PointSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

} // namespace detail

inline Rat diameter(const UltraSpace& space, const PointSet& subset) {
    detail::check_subset(space, subset);
    Rat d = 0;
    for (size_t a = 0; a < subset.size(); ++a)
        for (size_t b = a + 1; b < subset.size(); ++b)
            d = std::max(d, space.dist(subset[a], subset[b]));
    return d;
}

// All distinct open balls. In a finite space every open ball equals
// {x : d(x,c) <= t} for some center c and threshold t drawn from the
// distances out of c (t = 0 gives the singleton).
inline std::vector<Ball> open_balls(const UltraSpace& space) {
    std::set<PointSet> seen;
    for (int c = 0; c < space.size(); ++c) {
        std::vector<Rat> thresholds{Rat(0)};
        for (int y = 0; y < space.size(); ++y)
            if (y != c) thresholds.push_back(space.dist(c, y));
        for (const Rat& t : thresholds) {
            PointSet members;
            for (int x = 0; x < space.size(); ++x)
                if (space.dist(c, x) <= t) members.push_back(x);
            seen.insert(members);
        }
    }
    std::vector<Ball> balls;
    balls.reserve(seen.size());
    for (const auto& members : seen)
        balls.push_back(Ball{members, diameter(space, members)});
    return balls;
}

// The center making `subset` a centered sphere of radius diam(subset),
// if one exists: d(x,c) = diam for every other member AND no point of
// the ambient space outside the subset sits at that distance from c.
// Tie-break: lowest point index.
inline std::optional<int> centered_sphere_center(const UltraSpace& space, const PointSet& subset_in) {
    detail::check_subset(space, subset_in);
    const PointSet subset = detail::sorted_unique(subset_in);
    const Rat r = diameter(space, subset);
    for (int c : subset) {
        bool ok = true;
        for (int x : subset)
            if (x != c && space.dist(x, c) != r) { ok = false; break; }
        if (!ok) continue;
        PointSet sphere;
        for (int x = 0; x < space.size(); ++x)
            if (space.dist(x, c) == r || x == c) sphere.push_back(x);
        if (sphere == subset) return c;
    }
    return std::nullopt;
}

// Cs_X: all sets {x : d(x,c) = r} ∪ {c} over centers c and radii drawn
// from {0} ∪ {d(c,y) : y != c}, de-duplicated.
inline std::vector<PointSet> centered_spheres(const UltraSpace& space) {
    std::set<PointSet> seen;
    for (int c = 0; c < space.size(); ++c) {
        std::vector<Rat> radii{Rat(0)};
        for (int y = 0; y < space.size(); ++y)
            if (y != c) radii.push_back(space.dist(c, y));
        for (const Rat& r : radii) {
            PointSet members;
            for (int x = 0; x < space.size(); ++x)
                if (space.dist(x, c) == r || x == c) members.push_back(x);
            seen.insert(members);
        }
    }
    return {seen.begin(), seen.end()};
}

inline bool is_discrete(const UltraSpace& space) {
    if (space.size() <= 1) return true;
    const Rat& k = space.dist(0, 1);
    for (int i = 0; i < space.size(); ++i)
        for (int j = i + 1; j < space.size(); ++j)
            if (space.dist(i, j) != k) return false;
    return true;
}

// Restriction of the matrix to a subset; restriction preserves the axioms.
inline UltraSpace induced_subspace(const UltraSpace& space, const PointSet& subset) {
    detail::check_subset(space, subset);
    PointSet s = detail::sorted_unique(subset);
    std::vector<std::string> names;
    names.reserve(s.size());
    for (int p : s) names.push_back(space.name(p));
    std::vector<std::vector<Rat>> m(s.size(), std::vector<Rat>(s.size()));
    for (size_t a = 0; a < s.size(); ++a)
        for (size_t b = 0; b < s.size(); ++b)
            m[a][b] = space.dist(s[a], s[b]);
    return UltraSpace::from_parts_unchecked(std::move(names), std::move(m));
}

} // namespace ultratree

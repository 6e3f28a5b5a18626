#pragma once

#include "represent.hpp"
#include "space.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ultratree {

struct OracleError : std::runtime_error {
    enum class Kind { PoolTooSmall, InputTooLarge, BadSpec };
    Kind kind;

    OracleError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Literal enumeration of open balls B_r(c) = {x : d(x,c) < r} over every
// center and every radius in the distance values, the midpoints between
// consecutive distinct values, and max + 1. Trusted-slow counterpart of
// open_balls.
inline std::vector<Ball> oracle_open_balls(const UltraSpace& space) {
    std::set<Rat> values;
    for (int i = 0; i < space.size(); ++i)
        for (int j = 0; j < space.size(); ++j) values.insert(space.dist(i, j));
    const std::vector<Rat> sorted_values(values.begin(), values.end());
    std::vector<Rat> radii = sorted_values;
    for (size_t i = 0; i + 1 < sorted_values.size(); ++i)
        radii.push_back((sorted_values[i] + sorted_values[i + 1]) / 2);
    radii.push_back(sorted_values.back() + 1);

    std::set<PointSet> seen;
    for (int c = 0; c < space.size(); ++c)
        for (const Rat& r : radii) {
            if (r <= 0) continue; // a ball needs a positive radius
            PointSet members;
            for (int x = 0; x < space.size(); ++x)
                if (space.dist(c, x) < r) members.push_back(x);
            seen.insert(members);
        }
    std::vector<Ball> out;
    for (const auto& members : seen) out.push_back(Ball{members, diameter(space, members)});
    return out;
}

// Raw-definition UGVL test: every oracle ball must be writable as
// {x : d(x,c) = r} ∪ {c} for some member c and some radius r. No
// representing tree involved.
inline bool oracle_is_ugvl(const UltraSpace& space) {
    for (const Ball& b : oracle_open_balls(space)) {
        bool is_sphere = false;
        for (int c : b.members) {
            std::set<Rat> radii{Rat(0)};
            for (int y = 0; y < space.size(); ++y) radii.insert(space.dist(c, y));
            for (const Rat& r : radii) {
                PointSet sphere;
                for (int x = 0; x < space.size(); ++x)
                    if (space.dist(x, c) == r || x == c) sphere.push_back(x);
                if (sphere == b.members) { is_sphere = true; break; }
            }
            if (is_sphere) break;
        }
        if (!is_sphere) return false;
    }
    return true;
}

struct RandomSpec {
    std::uint64_t seed = 0;
    int max_points = 8;
    std::vector<Rat> label_pool{Rat(0), Rat(1), Rat(2), Rat(3), Rat(5), Rat(7), Rat(11) / 2};
};

namespace detail {

inline void random_shape(RootedLabeledTree& tree, std::mt19937_64& rng,
                         const std::vector<Rat>& pool, int leaf_count, int label_idx, int parent) {
    if (leaf_count == 1) {
        tree.add_node(Rat(0), parent);
        return;
    }
    const int id = tree.add_node(pool[static_cast<size_t>(label_idx)], parent);
    int k;
    if (label_idx == 1) {
        // no strictly smaller positive label left: all children are leaves
        k = leaf_count;
    } else {
        k = static_cast<int>(std::uniform_int_distribution<int>(2, leaf_count)(rng));
    }
    // split leaf_count into k positive parts
    std::vector<int> parts(static_cast<size_t>(k), 1);
    for (int extra = leaf_count - k; extra > 0; --extra)
        ++parts[static_cast<size_t>(std::uniform_int_distribution<int>(0, k - 1)(rng))];
    for (int part : parts) {
        if (part == 1) {
            tree.add_node(Rat(0), id);
        } else {
            const int child_idx =
                static_cast<int>(std::uniform_int_distribution<int>(1, label_idx - 1)(rng));
            random_shape(tree, rng, pool, part, child_idx, id);
        }
    }
}

} // namespace detail

// Seed-deterministic random draw: a random valid representing shape
// (labels strictly decreasing along the pool, leaves labeled 0) plus
// its realization. Every finite ultrametric space arises this way.
inline std::pair<UltraSpace, RootedLabeledTree> random_space_with_shape(const RandomSpec& spec) {
    if (spec.max_points < 1)
        throw OracleError(OracleError::Kind::BadSpec, "max_points must be >= 1");
    std::vector<Rat> pool = spec.label_pool;
    std::sort(pool.begin(), pool.end());
    if (pool.empty() || pool.front() != 0)
        throw OracleError(OracleError::Kind::BadSpec, "label pool must contain 0");
    if (std::adjacent_find(pool.begin(), pool.end()) != pool.end())
        throw OracleError(OracleError::Kind::BadSpec, "label pool values must be distinct");

    std::mt19937_64 rng(spec.seed);
    const int n = static_cast<int>(std::uniform_int_distribution<int>(1, spec.max_points)(rng));
    RootedLabeledTree shape;
    if (n == 1) {
        shape.add_node(Rat(0), -1);
    } else {
        if (pool.size() < 2)
            throw OracleError(OracleError::Kind::PoolTooSmall,
                              "need a positive label for a multi-point space");
        const int root_idx = static_cast<int>(
            std::uniform_int_distribution<int>(1, static_cast<int>(pool.size()) - 1)(rng));
        detail::random_shape(shape, rng, pool, n, root_idx, -1);
    }
    return {realize_space(shape), shape};
}

inline UltraSpace random_space(const RandomSpec& spec) {
    return random_space_with_shape(spec).first;
}

// All-bijections isometry search; only meant for tiny differential tests.
inline bool oracle_isometric(const UltraSpace& s1, const UltraSpace& s2) {
    if (s1.size() > 7 || s2.size() > 7)
        throw OracleError(OracleError::Kind::InputTooLarge, "all-bijections search is gated to 7 points");
    if (s1.size() != s2.size()) return false;
    std::vector<int> perm(static_cast<size_t>(s1.size()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < s1.size() && ok; ++i)
            for (int j = i + 1; j < s1.size() && ok; ++j)
                if (s1.dist(i, j) != s2.dist(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]))
                    ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace ultratree

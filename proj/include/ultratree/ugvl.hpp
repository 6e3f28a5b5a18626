#pragma once

#include "diametrical.hpp"
#include "labeled_tree.hpp"
#include "represent.hpp"
#include "space.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ultratree {

struct UgvlError : std::runtime_error {
    enum class Kind { NotUGVL, InternalCriterionMismatch, InputTooLarge };
    Kind kind;
    std::vector<std::string> witness_ball; // point names, for NotUGVL

    UgvlError(Kind k, std::vector<std::string> witness, const std::string& msg)
        : std::runtime_error(msg), kind(k), witness_ball(std::move(witness)) {}
};

namespace detail {

inline bool ball_sphere_criterion(const UltraSpace& space) {
    for (const Ball& b : open_balls(space))
        if (!centered_sphere_center(space, b.members)) return false;
    return true;
}

inline bool leaf_successor_criterion(const UltraSpace& space) {
    const auto tree = representing_tree(space);
    for (int i = 0; i < tree.size(); ++i) {
        if (tree.is_leaf(i)) continue;
        bool has_leaf_child = false;
        for (int c : tree.node(i).children)
            if (tree.is_leaf(c)) { has_leaf_child = true; break; }
        if (!has_leaf_child) return false;
    }
    return true;
}

} // namespace detail

// UGVL membership decided by two theorem-equivalent criteria: every
// open ball is a centered sphere, and every internal node of the
// representing tree has a leaf direct successor. A disagreement is an
// implementation bug, never a property of the input.
inline bool is_ugvl(const UltraSpace& space) {
    const bool by_spheres = detail::ball_sphere_criterion(space);
    const bool by_tree = detail::leaf_successor_criterion(space);
    if (by_spheres != by_tree)
        throw UgvlError(UgvlError::Kind::InternalCriterionMismatch, {},
                        "ball/sphere and leaf-successor criteria disagree");
    return by_spheres;
}

namespace detail {

// Recursive generating-tree construction: a singleton diametral part
// {c1} becomes the hub labeled diam X, joined to the lowest-index point
// of every other part, whose trees are built recursively.
inline void build_generating(const UltraSpace& space, const PointSet& subset,
                             std::map<int, Rat>& labels,
                             std::vector<std::pair<int, int>>& edges) {
    if (subset.size() == 1) {
        labels[subset.front()] = Rat(0);
        return;
    }
    const auto sub = induced_subspace(space, subset);
    const auto partition = diametral_partition(sub);
    int hub = -1;
    for (const auto& part : partition.parts)
        if (part.size() == 1) { hub = subset[static_cast<size_t>(part.front())]; break; }
    if (hub < 0) {
        std::vector<std::string> witness;
        for (int p : subset) witness.push_back(space.name(p));
        std::string msg = "ball {";
        for (size_t i = 0; i < witness.size(); ++i) msg += (i ? "," : "") + witness[i];
        msg += "} is not a centered sphere";
        throw UgvlError(UgvlError::Kind::NotUGVL, std::move(witness), msg);
    }
    for (const auto& part : partition.parts) {
        PointSet part_global;
        for (int local : part) part_global.push_back(subset[static_cast<size_t>(local)]);
        if (part_global.size() == 1 && part_global.front() == hub) continue;
        build_generating(space, part_global, labels, edges);
        edges.push_back({hub, part_global.front()});
    }
    labels[hub] = partition.space_diameter;
}

} // namespace detail

// A labeled tree on exactly the points of the space whose path-max
// ultrametric reproduces the matrix entrywise.
inline LabeledTree generating_tree(const UltraSpace& space) {
    std::map<int, Rat> labels;
    std::vector<std::pair<int, int>> edges;
    detail::build_generating(space, space.all_points(), labels, edges);
    std::vector<Rat> label_vec;
    for (int p = 0; p < space.size(); ++p) label_vec.push_back(labels.at(p));
    return LabeledTree::validate(space.points(), std::move(label_vec), std::move(edges));
}

// Number of open balls that are not centered spheres. Computed from the
// raw definition and cross-checked against the representing-tree count
// of internal nodes lacking a leaf child.
inline std::size_t delta(const UltraSpace& space) {
    std::size_t by_spheres = 0;
    for (const Ball& b : open_balls(space))
        if (!centered_sphere_center(space, b.members)) ++by_spheres;
    std::size_t by_tree = 0;
    const auto tree = representing_tree(space);
    for (int i = 0; i < tree.size(); ++i) {
        if (tree.is_leaf(i)) continue;
        bool has_leaf_child = false;
        for (int c : tree.node(i).children)
            if (tree.is_leaf(c)) { has_leaf_child = true; break; }
        if (!has_leaf_child) ++by_tree;
    }
    if (by_spheres != by_tree)
        throw UgvlError(UgvlError::Kind::InternalCriterionMismatch, {},
                        "deficient-ball count disagrees with representing-tree count");
    return by_spheres;
}

struct ExtensionResult {
    UltraSpace extended;
    // original point index -> extended point index
    std::vector<int> embedding;
    // (new point name, members of the ball it was glued for)
    std::vector<std::pair<std::string, std::vector<std::string>>> added;
};

// Glue one new point under every deficient ball B: the new point sits
// at distance max(diam B, d(b, .)) from everything, b a fixed member of
// B. With reversed_tiebreak the balls are processed in reverse order
// and b is the highest-index member; both orders give isometric results.
inline ExtensionResult minimal_extension(const UltraSpace& space, bool reversed_tiebreak = false) {
    std::vector<Ball> deficient;
    for (const Ball& b : open_balls(space))
        if (!centered_sphere_center(space, b.members)) deficient.push_back(b);
    if (reversed_tiebreak) std::reverse(deficient.begin(), deficient.end());

    const int n = space.size();
    const int k = static_cast<int>(deficient.size());
    if (k == 0) {
        std::vector<int> id(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) id[static_cast<size_t>(i)] = i;
        return ExtensionResult{space, std::move(id), {}};
    }

    std::set<std::string> used(space.points().begin(), space.points().end());
    std::vector<std::string> names = space.points();
    std::vector<std::pair<std::string, std::vector<std::string>>> added;
    std::vector<int> rep(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        rep[static_cast<size_t>(i)] =
            reversed_tiebreak ? deficient[static_cast<size_t>(i)].members.back()
                              : deficient[static_cast<size_t>(i)].members.front();
        std::string name = "w#" + std::to_string(i + 1);
        while (used.count(name)) name += "_";
        used.insert(name);
        std::vector<std::string> ball_names;
        for (int p : deficient[static_cast<size_t>(i)].members) ball_names.push_back(space.name(p));
        added.push_back({name, std::move(ball_names)});
        names.push_back(std::move(name));
    }

    auto at = [&](int i, int j) -> Rat {
        if (i == j) return Rat(0);
        if (i > j) std::swap(i, j);
        if (j < n) return space.dist(i, j);
        const int bj = j - n;
        const Ball& Bj = deficient[static_cast<size_t>(bj)];
        if (i < n) return std::max(Bj.diameter, space.dist(rep[static_cast<size_t>(bj)], i));
        const int bi = i - n;
        const Ball& Bi = deficient[static_cast<size_t>(bi)];
        return std::max({Bi.diameter, Bj.diameter,
                         space.dist(rep[static_cast<size_t>(bi)], rep[static_cast<size_t>(bj)])});
    };

    const int total = n + k;
    std::vector<std::vector<Rat>> m(static_cast<size_t>(total), std::vector<Rat>(static_cast<size_t>(total)));
    for (int i = 0; i < total; ++i)
        for (int j = 0; j < total; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = at(i, j);

#ifndef NDEBUG
    // The formula must not depend on the chosen ball representative.
    for (int bi = 0; bi < k; ++bi) {
        const Ball& B = deficient[static_cast<size_t>(bi)];
        if (B.members.size() < 2) continue;
        const int alt = reversed_tiebreak ? B.members.front() : B.members.back();
        for (int x = 0; x < n; ++x) {
            const Rat via_alt = std::max(B.diameter, space.dist(alt, x));
            if (via_alt != m[static_cast<size_t>(n + bi)][static_cast<size_t>(x)])
                throw std::logic_error("extension distance depends on ball representative");
        }
    }
#endif

    auto extended = UltraSpace::validate(std::move(names), std::move(m));
    std::vector<int> id(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) id[static_cast<size_t>(i)] = i;
    return ExtensionResult{std::move(extended), std::move(id), std::move(added)};
}

// Exhaustive check that `big` is a UGVL-extension of `small`: big must
// be UGVL and some subset of its points must induce a subspace
// isometric to small. Exists for minimality testing; exponential and
// gated to 16 points.
inline bool is_ugvl_extension(const UltraSpace& big, const UltraSpace& small) {
    if (big.size() > 16)
        throw UgvlError(UgvlError::Kind::InputTooLarge, {},
                        "subset search is gated to 16 points");
    if (!is_ugvl(big)) return false;
    const int k = small.size();
    if (k > big.size()) return false;

    std::vector<Rat> want;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) want.push_back(small.dist(i, j));
    std::sort(want.begin(), want.end());

    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        std::vector<Rat> have;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                have.push_back(big.dist(idx[static_cast<size_t>(a)], idx[static_cast<size_t>(b)]));
        std::sort(have.begin(), have.end());
        if (have == want && isometric(induced_subspace(big, idx), small)) return true;

        // next combination
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == big.size() - k + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
        for (int q = pos + 1; q < k; ++q)
            idx[static_cast<size_t>(q)] = idx[static_cast<size_t>(q - 1)] + 1;
    }
    return false;
}

} // namespace ultratree

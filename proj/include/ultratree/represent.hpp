#pragma once

#include "diametrical.hpp"
#include "labeled_tree.hpp"
#include "space.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ultratree {

struct RepresentError : std::runtime_error {
    enum class Kind { EmptySpace, InvalidShape, NotABall };
    Kind kind;

    RepresentError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Node of a rooted labeled tree. The payload carries the point subset a
// node stands for when the tree was built from a space; it is ignored
// by canonical codes.
struct RNode {
    Rat label;
    std::vector<int> children;
    int parent = -1;
    std::vector<std::string> payload; // point names, empty when absent
    std::string name;                 // display name, may be empty
};

struct RootedLabeledTree {
    std::vector<RNode> nodes;
    int root = 0;

    int size() const { return static_cast<int>(nodes.size()); }
    const RNode& node(int i) const { return nodes[static_cast<size_t>(i)]; }
    bool is_leaf(int i) const { return nodes[static_cast<size_t>(i)].children.empty(); }

    int add_node(Rat label, int parent, std::vector<std::string> payload = {},
                 std::string name = {}) {
        const int id = static_cast<int>(nodes.size());
        nodes.push_back(RNode{std::move(label), {}, parent, std::move(payload), std::move(name)});
        if (parent >= 0) nodes[static_cast<size_t>(parent)].children.push_back(id);
        return id;
    }

    std::vector<int> preorder() const {
        std::vector<int> order;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            order.push_back(u);
            const auto& ch = nodes[static_cast<size_t>(u)].children;
            for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
        }
        return order;
    }
};

// Canonical encoding, unique up to labeled-rooted-tree isomorphism:
// each node encodes its label in lowest terms followed by the
// lexicographically sorted child codes. Payloads and names are excluded.
using CanonicalCode = std::string;

namespace detail {

inline CanonicalCode canonical_code_at(const RootedLabeledTree& tree, int node) {
    const RNode& n = tree.node(node);
    std::vector<CanonicalCode> child_codes;
    child_codes.reserve(n.children.size());
    for (int c : n.children) child_codes.push_back(canonical_code_at(tree, c));
    std::sort(child_codes.begin(), child_codes.end());
    CanonicalCode code = "(" + format_rat(n.label);
    for (const auto& cc : child_codes) code += cc;
    code += ")";
    return code;
}

} // namespace detail

inline CanonicalCode canonical_code(const RootedLabeledTree& tree) {
    return detail::canonical_code_at(tree, tree.root);
}

inline bool isomorphic_rooted(const RootedLabeledTree& t1, const RootedLabeledTree& t2) {
    return canonical_code(t1) == canonical_code(t2);
}

namespace detail {

inline void build_representing(RootedLabeledTree& tree, const UltraSpace& space,
                               const PointSet& subset, int parent) {
    std::vector<std::string> payload;
    for (int p : subset) payload.push_back(space.name(p));
    const Rat diam = diameter(space, subset);
    const int id = tree.add_node(diam, parent, std::move(payload));
    if (subset.size() == 1) return;
    const auto partition = diametral_partition(induced_subspace(space, subset));
    for (const auto& part : partition.parts) {
        PointSet part_global;
        for (int local : part) part_global.push_back(subset[static_cast<size_t>(local)]);
        build_representing(tree, space, part_global, id);
    }
}

} // namespace detail

// Gurvich-Vyalyi representing tree: root is X labeled diam X, children
// of each node are the diametral parts of its payload subspace, leaves
// are the singletons. Node payloads enumerate exactly the open balls.
inline RootedLabeledTree representing_tree(const UltraSpace& space) {
    if (space.size() == 0)
        throw RepresentError(RepresentError::Kind::EmptySpace, "representing tree of empty space");
    RootedLabeledTree tree;
    detail::build_representing(tree, space, space.all_points(), -1);
    tree.root = 0;
    return tree;
}

// Shape criterion for being a representing tree of some finite
// ultrametric space: no node with out-degree 1, leaf <=> label 0, and
// strictly decreasing labels along parent->child links.
inline bool validate_representing_shape(const RootedLabeledTree& tree) {
    if (tree.nodes.empty()) return false;
    for (int i = 0; i < tree.size(); ++i) {
        const RNode& n = tree.node(i);
        if (n.children.size() == 1) return false;
        if (n.children.empty() != (n.label == 0)) return false;
        for (int c : n.children)
            if (!(tree.node(c).label < n.label)) return false;
    }
    return true;
}

// Points are the leaves; the distance of two leaves is the label of
// their lowest common ancestor (parent-pointer climb, instances are tiny).
inline UltraSpace realize_space(const RootedLabeledTree& tree) {
    if (!validate_representing_shape(tree))
        throw RepresentError(RepresentError::Kind::InvalidShape, "not a valid representing shape");

    std::vector<int> leaves;
    const auto order = tree.preorder();
    for (int u : order)
        if (tree.is_leaf(u)) leaves.push_back(u);

    // Leaf payloads give point names when they are unambiguous.
    std::vector<std::string> names;
    {
        std::set<std::string> seen;
        bool from_payload = true;
        for (int u : leaves) {
            const RNode& n = tree.node(u);
            if (n.payload.size() != 1 || !seen.insert(n.payload.front()).second) {
                from_payload = false;
                break;
            }
            names.push_back(n.payload.front());
        }
        if (!from_payload) {
            names.clear();
            seen.clear();
            bool from_names = true;
            for (int u : leaves) {
                const RNode& n = tree.node(u);
                if (n.name.empty() || !seen.insert(n.name).second) {
                    from_names = false;
                    break;
                }
                names.push_back(n.name);
            }
            if (!from_names) {
                names.clear();
                for (size_t k = 0; k < leaves.size(); ++k) names.push_back("p" + std::to_string(k));
            }
        }
    }

    std::vector<int> depth(static_cast<size_t>(tree.size()), 0);
    for (int u : order)
        if (u != tree.root) depth[static_cast<size_t>(u)] = depth[static_cast<size_t>(tree.node(u).parent)] + 1;

    auto lca_label = [&](int a, int b) {
        while (a != b) {
            if (depth[static_cast<size_t>(a)] >= depth[static_cast<size_t>(b)])
                a = tree.node(a).parent;
            else
                b = tree.node(b).parent;
        }
        return tree.node(a).label;
    };

    const size_t n = leaves.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            m[i][j] = m[j][i] = lca_label(leaves[i], leaves[j]);
    return UltraSpace::validate(std::move(names), std::move(m));
}

// Labeled-rooted-tree isomorphism of representing trees characterizes
// isometry of finite ultrametric spaces.
inline bool isometric(const UltraSpace& s1, const UltraSpace& s2) {
    return isomorphic_rooted(representing_tree(s1), representing_tree(s2));
}

namespace detail {

// Exact max/min form of the sup/inf Hausdorff definition (finite sets);
// assumes both arguments are open balls.
inline Rat hausdorff_unchecked(const UltraSpace& space, const Ball& b1, const Ball& b2) {
    auto directed = [&space](const Ball& from, const Ball& to) {
        Rat worst = 0;
        for (int x : from.members) {
            std::optional<Rat> best;
            for (int y : to.members) {
                Rat d = space.dist(x, y);
                if (!best || d < *best) best = d;
            }
            worst = std::max(worst, *best);
        }
        return worst;
    };
    return std::max(directed(b1, b2), directed(b2, b1));
}

} // namespace detail

// Hausdorff distance between two open balls of the space.
inline Rat hausdorff_distance(const UltraSpace& space, const Ball& b1, const Ball& b2) {
    const auto balls = open_balls(space);
    if (std::find(balls.begin(), balls.end(), b1) == balls.end() ||
        std::find(balls.begin(), balls.end(), b2) == balls.end())
        throw RepresentError(RepresentError::Kind::NotABall, "argument is not an open ball of the space");
    return detail::hausdorff_unchecked(space, b1, b2);
}

// The representing tree viewed as a free vertex-labeled tree on its
// ball-nodes; with the tree labeling it generates (B_X, d_H).
inline LabeledTree as_free_tree(const RootedLabeledTree& tree) {
    std::vector<std::string> names;
    std::vector<Rat> labels;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < tree.size(); ++i) {
        const RNode& n = tree.node(i);
        std::string name;
        if (!n.payload.empty()) {
            name = "{";
            for (size_t k = 0; k < n.payload.size(); ++k) {
                if (k) name += ";";
                name += n.payload[k];
            }
            name += "}";
        } else if (!n.name.empty()) {
            name = n.name;
        } else {
            name = "n" + std::to_string(i);
        }
        names.push_back(std::move(name));
        labels.push_back(n.label);
        if (n.parent >= 0) edges.push_back({n.parent, i});
    }
    return LabeledTree::validate(std::move(names), std::move(labels), std::move(edges));
}

} // namespace ultratree

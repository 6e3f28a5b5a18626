#pragma once

#include "space.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ultratree {

struct TreeError : std::runtime_error {
    enum class Kind {
        DuplicateName,
        SelfLoop,
        DuplicateEdge,
        UnknownVertex,
        HasCycle,
        Disconnected,
        NegativeLabel,
        NotAnUltrametricGenerator,
        NotABall,
    };
    Kind kind;
    std::vector<std::string> witnesses;

    TreeError(Kind k, std::vector<std::string> w, const std::string& msg)
        : std::runtime_error(msg), kind(k), witnesses(std::move(w)) {}
};

// Free (unrooted) tree with one nonnegative rational label per vertex.
// Generates an ultrametric via the path-maximum of labels.
class LabeledTree {
public:
    static LabeledTree validate(std::vector<std::string> vertices, std::vector<Rat> labels,
                                std::vector<std::pair<int, int>> edges) {
        const size_t n = vertices.size();
        if (n == 0)
            throw TreeError(TreeError::Kind::Disconnected, {}, "tree must have at least one vertex");
        if (labels.size() != n)
            throw TreeError(TreeError::Kind::Disconnected, {}, "label count does not match vertex count");
        {
            std::set<std::string> seen;
            for (const auto& v : vertices)
                if (!seen.insert(v).second)
                    throw TreeError(TreeError::Kind::DuplicateName, {v},
                                    "duplicate vertex name '" + v + "'");
        }
        for (size_t i = 0; i < n; ++i)
            if (labels[i] < 0)
                throw TreeError(TreeError::Kind::NegativeLabel, {vertices[i]},
                                "negative label at " + vertices[i]);
        std::set<std::pair<int, int>> edge_set;
        for (auto& [u, v] : edges) {
            if (u < 0 || u >= static_cast<int>(n) || v < 0 || v >= static_cast<int>(n))
                throw TreeError(TreeError::Kind::UnknownVertex, {}, "edge endpoint out of range");
            if (u == v)
                throw TreeError(TreeError::Kind::SelfLoop, {vertices[static_cast<size_t>(u)]},
                                "self loop at " + vertices[static_cast<size_t>(u)]);
            if (u > v) std::swap(u, v);
            if (!edge_set.insert({u, v}).second)
                throw TreeError(TreeError::Kind::DuplicateEdge,
                                {vertices[static_cast<size_t>(u)], vertices[static_cast<size_t>(v)]},
                                "duplicate edge");
        }
        if (edges.size() != n - 1)
            throw TreeError(TreeError::Kind::HasCycle, {},
                            "edge count " + std::to_string(edges.size()) + " != n-1");
        LabeledTree t(std::move(vertices), std::move(labels), std::move(edges));
        // n-1 edges + connected <=> tree; a disconnect here means some
        // component carries a cycle as well, but we report Disconnected.
        std::vector<char> visited(n, 0);
        std::vector<int> stack{0};
        visited[0] = 1;
        size_t count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : t.neighbors(u))
                if (!visited[static_cast<size_t>(w)]) {
                    visited[static_cast<size_t>(w)] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        if (count != n)
            throw TreeError(TreeError::Kind::Disconnected, {}, "graph is not connected");
        return t;
    }

    int size() const { return static_cast<int>(vertices_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::string& name(int i) const { return vertices_[static_cast<size_t>(i)]; }
    const Rat& label(int i) const { return labels_[static_cast<size_t>(i)]; }
    const std::vector<Rat>& labels() const { return labels_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int i) const { return adjacency_[static_cast<size_t>(i)]; }

    int index_of(std::string_view name) const {
        for (size_t i = 0; i < vertices_.size(); ++i)
            if (vertices_[i] == name) return static_cast<int>(i);
        return -1;
    }

private:
    LabeledTree(std::vector<std::string> vertices, std::vector<Rat> labels,
                std::vector<std::pair<int, int>> edges)
        : vertices_(std::move(vertices)), labels_(std::move(labels)), edges_(std::move(edges)),
          adjacency_(vertices_.size()) {
        for (const auto& [u, v] : edges_) {
            adjacency_[static_cast<size_t>(u)].push_back(v);
            adjacency_[static_cast<size_t>(v)].push_back(u);
        }
        for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
    }

    std::vector<std::string> vertices_;
    std::vector<Rat> labels_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

// Edge condition of the tree-ultrametric theorem: every edge must have
// at least one strictly positive endpoint label.
inline bool generates_ultrametric(const LabeledTree& tree) {
    for (const auto& [u, v] : tree.edges())
        if (tree.label(u) == 0 && tree.label(v) == 0) return false;
    return true;
}

namespace detail {

// Distances from one source: depth-first walk carrying the running
// path-maximum of labels, source and target labels included.
inline std::vector<Rat> path_max_from(const LabeledTree& tree, int source) {
    std::vector<Rat> out(static_cast<size_t>(tree.size()), Rat(0));
    std::vector<char> visited(static_cast<size_t>(tree.size()), 0);
    std::vector<std::pair<int, Rat>> stack{{source, tree.label(source)}};
    visited[static_cast<size_t>(source)] = 1;
    while (!stack.empty()) {
        auto [u, running] = stack.back();
        stack.pop_back();
        for (int w : tree.neighbors(u))
            if (!visited[static_cast<size_t>(w)]) {
                visited[static_cast<size_t>(w)] = 1;
                Rat m = std::max(running, tree.label(w));
                out[static_cast<size_t>(w)] = m;
                stack.push_back({w, m});
            }
    }
    return out;
}

} // namespace detail

inline Rat d_l(const LabeledTree& tree, int u, int v) {
    if (u < 0 || u >= tree.size() || v < 0 || v >= tree.size())
        throw TreeError(TreeError::Kind::UnknownVertex, {}, "vertex index out of range");
    if (u == v) return Rat(0);
    return detail::path_max_from(tree, u)[static_cast<size_t>(v)];
}

// The space (V(T), d_l). Must pass full validation, which it does for
// every tree satisfying the edge condition.
inline UltraSpace space_from_tree(const LabeledTree& tree) {
    for (const auto& [u, v] : tree.edges())
        if (tree.label(u) == 0 && tree.label(v) == 0)
            throw TreeError(TreeError::Kind::NotAnUltrametricGenerator, {tree.name(u), tree.name(v)},
                            "edge {" + tree.name(u) + "," + tree.name(v) + "} has both labels 0");
    const size_t n = static_cast<size_t>(tree.size());
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (int u = 0; u < tree.size(); ++u) {
        auto row = detail::path_max_from(tree, u);
        for (int v = 0; v < tree.size(); ++v)
            if (v != u) m[static_cast<size_t>(u)][static_cast<size_t>(v)] = row[static_cast<size_t>(v)];
    }
    return UltraSpace::validate(tree.vertices(), std::move(m));
}

// Subtree spanned by the ball: union of the paths from the ball's
// lowest-index member to every other member. Its vertex set is exactly
// the ball and the restricted labeling generates the induced subspace.
inline LabeledTree ball_subtree(const LabeledTree& tree, const UltraSpace& generated_space,
                                const Ball& ball) {
    const auto balls = open_balls(generated_space);
    if (std::find(balls.begin(), balls.end(), ball) == balls.end())
        throw TreeError(TreeError::Kind::NotABall, {}, "subset is not an open ball of the space");

    // Tree vertices and space points share names but may be ordered
    // differently; work in tree indices.
    std::vector<int> members;
    for (int p : ball.members) {
        int t = tree.index_of(generated_space.name(p));
        if (t < 0)
            throw TreeError(TreeError::Kind::UnknownVertex, {generated_space.name(p)},
                            "tree does not contain point " + generated_space.name(p));
        members.push_back(t);
    }
    std::sort(members.begin(), members.end());
    const int anchor = members.front();
    // BFS parents from the anchor.
    std::vector<int> parent(static_cast<size_t>(tree.size()), -2);
    parent[static_cast<size_t>(anchor)] = -1;
    std::vector<int> queue{anchor};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int w : tree.neighbors(u))
            if (parent[static_cast<size_t>(w)] == -2) {
                parent[static_cast<size_t>(w)] = u;
                queue.push_back(w);
            }
    }

    std::set<int> verts{anchor};
    std::set<std::pair<int, int>> edge_set;
    for (int x : members) {
        int cur = x;
        while (cur != anchor) {
            int p = parent[static_cast<size_t>(cur)];
            verts.insert(cur);
            edge_set.insert({std::min(cur, p), std::max(cur, p)});
            cur = p;
        }
    }

    std::map<int, int> remap;
    std::vector<std::string> names;
    std::vector<Rat> labels;
    for (int v : verts) {
        remap[v] = static_cast<int>(names.size());
        names.push_back(tree.name(v));
        labels.push_back(tree.label(v));
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : edge_set) edges.push_back({remap[u], remap[v]});
    return LabeledTree::validate(std::move(names), std::move(labels), std::move(edges));
}

} // namespace ultratree

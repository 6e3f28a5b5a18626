#pragma once

#include "labeled_tree.hpp"
#include "represent.hpp"
#include "space.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ultratree {

// Document-level failures (unreadable file, bad JSON, bad rational
// literal, bad name). Axiom violations keep their own error types.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using json = nlohmann::json;

// Point and vertex names: UTF-8 without whitespace, comma or quotes,
// so DOT emission needs no escaping.
inline void check_name(const std::string& name) {
    if (name.empty()) throw IoError("empty name");
    for (unsigned char c : name)
        if (std::isspace(c) || c == ',' || c == '"' || c == '\'')
            throw IoError("forbidden character in name '" + name + "'");
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw IoError("malformed JSON");
    return j;
}

// SpaceDocument: {"points":["x","y"],"matrix":[["0","2"],["2","0"]]}
inline UltraSpace space_from_json(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j.contains("matrix"))
        throw IoError("space document needs 'points' and 'matrix'");
    std::vector<std::string> names;
    for (const auto& p : j.at("points")) {
        if (!p.is_string()) throw IoError("point names must be strings");
        names.push_back(p.get<std::string>());
        check_name(names.back());
    }
    std::vector<std::vector<Rat>> matrix;
    for (const auto& row : j.at("matrix")) {
        std::vector<Rat> r;
        for (const auto& cell : row) {
            if (!cell.is_string()) throw IoError("matrix entries must be rational strings");
            try {
                r.push_back(parse_rat(cell.get<std::string>()));
            } catch (const RatParseError& e) {
                throw IoError(e.what());
            }
        }
        matrix.push_back(std::move(r));
    }
    return UltraSpace::validate(std::move(names), std::move(matrix));
}

inline json space_to_json(const UltraSpace& space) {
    json j;
    j["points"] = space.points();
    json matrix = json::array();
    for (int i = 0; i < space.size(); ++i) {
        json row = json::array();
        for (int k = 0; k < space.size(); ++k) row.push_back(format_rat(space.dist(i, k)));
        matrix.push_back(std::move(row));
    }
    j["matrix"] = std::move(matrix);
    return j;
}

// TreeDocument: {"vertices":[{"name":..,"label":..}],"edges":[[a,b]],"root":..?}
struct TreeDocument {
    LabeledTree tree;
    std::optional<std::string> root;
};

inline TreeDocument tree_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw IoError("tree document needs 'vertices' and 'edges'");
    std::vector<std::string> names;
    std::vector<Rat> labels;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_object() || !v.contains("name") || !v.contains("label"))
            throw IoError("tree vertex needs 'name' and 'label'");
        names.push_back(v.at("name").get<std::string>());
        check_name(names.back());
        try {
            labels.push_back(parse_rat(v.at("label").get<std::string>()));
        } catch (const RatParseError& e) {
            throw IoError(e.what());
        }
    }
    auto index_of = [&names](const std::string& name) {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        throw IoError("edge references unknown vertex '" + name + "'");
    };
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw IoError("edges must be name pairs");
        edges.push_back({index_of(e.at(0).get<std::string>()), index_of(e.at(1).get<std::string>())});
    }
    std::optional<std::string> root;
    if (j.contains("root") && !j.at("root").is_null()) {
        root = j.at("root").get<std::string>();
        index_of(*root);
    }
    return TreeDocument{LabeledTree::validate(std::move(names), std::move(labels), std::move(edges)),
                        std::move(root)};
}

// Root a TreeDocument: children ordered by vertex list order.
inline RootedLabeledTree to_rooted(const TreeDocument& doc) {
    if (!doc.root) throw IoError("tree document has no root");
    const LabeledTree& t = doc.tree;
    const int root_idx = t.index_of(*doc.root);
    RootedLabeledTree rooted;
    // map free-tree vertex -> rooted node id, breadth-first from the root
    std::vector<int> node_of(static_cast<size_t>(t.size()), -1);
    node_of[static_cast<size_t>(root_idx)] = rooted.add_node(t.label(root_idx), -1, {}, t.name(root_idx));
    std::vector<int> queue{root_idx};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        const int u = queue[qi];
        for (int w : t.neighbors(u))
            if (node_of[static_cast<size_t>(w)] == -1) {
                node_of[static_cast<size_t>(w)] =
                    rooted.add_node(t.label(w), node_of[static_cast<size_t>(u)], {}, t.name(w));
                queue.push_back(w);
            }
    }
    return rooted;
}

inline json tree_to_json(const LabeledTree& tree) {
    json j;
    json verts = json::array();
    for (int i = 0; i < tree.size(); ++i)
        verts.push_back({{"name", tree.name(i)}, {"label", format_rat(tree.label(i))}});
    j["vertices"] = std::move(verts);
    json edges = json::array();
    for (const auto& [u, v] : tree.edges())
        edges.push_back(json::array({tree.name(u), tree.name(v)}));
    j["edges"] = std::move(edges);
    return j;
}

namespace detail {

inline std::string rooted_node_name(const RootedLabeledTree& tree, int i) {
    const RNode& n = tree.node(i);
    if (!n.name.empty()) return n.name;
    if (!n.payload.empty()) {
        std::string name = "{";
        for (size_t k = 0; k < n.payload.size(); ++k) {
            if (k) name += ";";
            name += n.payload[k];
        }
        return name + "}";
    }
    return "n" + std::to_string(i);
}

} // namespace detail

inline json rooted_tree_to_json(const RootedLabeledTree& tree) {
    json j;
    json verts = json::array();
    for (int i = 0; i < tree.size(); ++i) {
        json v = {{"name", detail::rooted_node_name(tree, i)},
                  {"label", format_rat(tree.node(i).label)}};
        if (!tree.node(i).payload.empty()) v["payload"] = tree.node(i).payload;
        verts.push_back(std::move(v));
    }
    j["vertices"] = std::move(verts);
    json edges = json::array();
    for (int i = 0; i < tree.size(); ++i)
        for (int c : tree.node(i).children)
            edges.push_back(json::array(
                {detail::rooted_node_name(tree, i), detail::rooted_node_name(tree, c)}));
    j["edges"] = std::move(edges);
    j["root"] = detail::rooted_node_name(tree, tree.root);
    return j;
}

// DOT is render-only, never parsed back. Undirected for free trees.
inline std::string tree_to_dot(const LabeledTree& tree) {
    std::ostringstream out;
    out << "graph T {\n";
    for (int i = 0; i < tree.size(); ++i)
        out << "  \"" << tree.name(i) << "\" [label=\"" << tree.name(i) << " / "
            << format_rat(tree.label(i)) << "\"];\n";
    for (const auto& [u, v] : tree.edges())
        out << "  \"" << tree.name(u) << "\" -- \"" << tree.name(v) << "\";\n";
    out << "}\n";
    return out.str();
}

// Directed parent->child; representing-tree nodes captioned "label | {members}".
inline std::string rooted_tree_to_dot(const RootedLabeledTree& tree) {
    std::ostringstream out;
    out << "digraph T {\n";
    for (int i = 0; i < tree.size(); ++i) {
        const RNode& n = tree.node(i);
        out << "  n" << i << " [label=\"" << format_rat(n.label);
        if (!n.payload.empty()) {
            out << " | {";
            for (size_t k = 0; k < n.payload.size(); ++k) {
                if (k) out << ",";
                out << n.payload[k];
            }
            out << "}";
        } else if (!n.name.empty()) {
            out << " | " << n.name;
        }
        out << "\"];\n";
    }
    for (int i = 0; i < tree.size(); ++i)
        for (int c : tree.node(i).children) out << "  n" << i << " -> n" << c << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace ultratree

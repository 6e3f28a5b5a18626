#pragma once

#include <ultratree/ultratree.hpp>

#include <string>
#include <vector>

namespace fixtures {

using ultratree::LabeledTree;
using ultratree::Rat;
using ultratree::UltraSpace;

inline std::vector<std::vector<Rat>> to_matrix(const std::vector<std::vector<int>>& m) {
    std::vector<std::vector<Rat>> out;
    for (const auto& row : m) out.emplace_back(row.begin(), row.end());
    return out;
}

// Four points on a square: sides 2, diagonals 1. Not UGVL.
inline UltraSpace quadruple() {
    return UltraSpace::validate({"x", "y", "z", "t"}, to_matrix({{0, 2, 1, 2},
                                                                 {2, 0, 2, 1},
                                                                 {1, 2, 0, 2},
                                                                 {2, 1, 2, 0}}));
}

// The quadruple plus an apex w at distance 2 from everything. UGVL.
inline UltraSpace pyramid() {
    return UltraSpace::validate({"x", "y", "z", "t", "w"}, to_matrix({{0, 2, 1, 2, 2},
                                                                      {2, 0, 2, 1, 2},
                                                                      {1, 2, 0, 2, 2},
                                                                      {2, 1, 2, 0, 2},
                                                                      {2, 2, 2, 2, 0}}));
}

inline UltraSpace one_point() {
    return UltraSpace::validate({"a"}, {{Rat(0)}});
}

// Isosceles triple: d(x,y) = d(y,z) = a, d(x,z) = b, a >= b > 0.
inline UltraSpace triple(int a, int b) {
    return UltraSpace::validate({"x", "y", "z"}, to_matrix({{0, a, b}, {a, 0, a}, {b, a, 0}}));
}

// Labeled path y--x--z with labels (a, 0, b); generates triple(a, b).
inline LabeledTree labeled_path(int a, int b) {
    return LabeledTree::validate({"y", "x", "z"}, {Rat(a), Rat(0), Rat(b)}, {{0, 1}, {1, 2}});
}

} // namespace fixtures

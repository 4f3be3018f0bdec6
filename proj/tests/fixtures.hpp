#pragma once

#include <utility>
#include <vector>

#include "pairdom/graph.hpp"

namespace fixtures {

using pairdom::Graph;
using pairdom::Vertex;
using Edges = std::vector<std::pair<Vertex, Vertex>>;

inline Graph path(int n) {
    Edges e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return pairdom::make_graph(n, e);
}

// Star K_{1,k} with the center as vertex k (leaves 0..k-1).
inline Graph star(int k) {
    Edges e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, k);
    return pairdom::make_graph(k + 1, e);
}

inline Graph complete(int n) {
    Edges e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return pairdom::make_graph(n, e);
}

// Two triangles sharing vertex 2: {0,1,2} and {2,3,4}.
inline Graph bowtie() {
    return pairdom::make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

// Triangles {0,1,2} and {3,4,5} joined by the bridge 2-3.
inline Graph triangle_edge_triangle() {
    return pairdom::make_graph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

// Triangles {0,1,2} and {4,5,6} joined by the path 2-3-4.
inline Graph triangle_path_triangle() {
    return pairdom::make_graph(
        7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}});
}

// Chain 0-1-2 into triangle {2,3,4} with pendants 5-3 and 6-4. Vertex 0 is a
// leaf, so rooting there exercises the non-cut special case; the cut
// vertices give assorted prune shapes.
inline Graph chain_triangle_pendants() {
    return pairdom::make_graph(7, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 6}});
}

// Rooted at 0: branch 0-1-2-triangle{2,3,4} (pendants 5,6) leaves block
// {0,1} a first-kind TYPE-1 residue; branch 0-7-triangle{7,8,9} (pendants
// 10,11) leaves block {0,7} a first-kind TYPE-2 residue. Neither alone
// forces r, so the verdict is false with |L3|=1.
inline Graph type1_plus_type2() {
    return pairdom::make_graph(12, {{0, 1},
                                    {1, 2},
                                    {2, 3},
                                    {2, 4},
                                    {3, 4},
                                    {3, 5},
                                    {4, 6},
                                    {0, 7},
                                    {7, 8},
                                    {7, 9},
                                    {8, 9},
                                    {8, 10},
                                    {9, 11}});
}

// TYPE-1 first-kind residue on {0,1} plus an odd live-r1 block {0,7} (path
// 0-7-8): rule 5 territory.
inline Graph type1_rule5() {
    return pairdom::make_graph(
        9, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 6}, {0, 7}, {7, 8}});
}

// Same branch shape twice below r=0; both blocks {0,1} and {0,7} end up
// first-kind TYPE-1, so the judgement fires rule 4.
inline Graph type1_first_double() {
    return pairdom::make_graph(13, {{0, 1},
                                    {1, 2},
                                    {2, 3},
                                    {2, 4},
                                    {3, 4},
                                    {3, 5},
                                    {4, 6},
                                    {0, 7},
                                    {7, 8},
                                    {8, 9},
                                    {8, 10},
                                    {9, 10},
                                    {9, 11},
                                    {10, 12}});
}

// r=0 with a pendant 0-1 and a branch 0-2, triangle {2,3,4}, pendants 5-3,
// 6-4. Block {0,2} becomes a first-kind TYPE-2 residue; block {0,1} stays L1.
inline Graph type2_first_branch() {
    return pairdom::make_graph(7, {{0, 1}, {0, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 6}});
}

// K4 {1,2,3,4} with pendants 5-3 and 6-4, plus 0-1 and 0-7. Vertex 1 ends up
// r1 but no end block below it exists, so its mark is void.
inline Graph r1_without_end_block() {
    return pairdom::make_graph(8, {{1, 2},
                                   {1, 3},
                                   {1, 4},
                                   {2, 3},
                                   {2, 4},
                                   {3, 4},
                                   {3, 5},
                                   {4, 6},
                                   {0, 1},
                                   {0, 7}});
}

inline std::vector<Graph> acceptance_fixtures() {
    std::vector<Graph> out;
    for (int n = 2; n <= 8; ++n) out.push_back(path(n));
    for (int k = 2; k <= 5; ++k) out.push_back(star(k));
    out.push_back(bowtie());
    for (int n = 3; n <= 6; ++n) out.push_back(complete(n));
    out.push_back(triangle_edge_triangle());
    out.push_back(triangle_path_triangle());
    out.push_back(chain_triangle_pendants());
    out.push_back(type1_plus_type2());
    out.push_back(type1_rule5());
    out.push_back(type1_first_double());
    out.push_back(type2_first_branch());
    out.push_back(r1_without_end_block());
    return out;
}

}  // namespace fixtures

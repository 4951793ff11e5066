// Constructors for the named graphs and parameterized families the test
// corpus is built around: the Herschel graph, its triangulated augmentation,
// the g_k extension family, prisms with optional face diagonals, and a
// uniform dispatch wrapper.

#ifndef MINORHAM_FAMILIES_HPP
#define MINORHAM_FAMILIES_HPP

#include <string>

#include "minorham/graph.hpp"

namespace minorham {

struct FamilySpec {
    std::string name;  // herschel | goldner-harary | gk | prism-chords |
                       // petersen | wheel | complete-bipartite
    std::vector<long> params;
};

// Herschel graph.  Ids: u1..u7 = 0..6, x = 7, y = 8, z = 9, v1 = 10.
// 11 vertices, 18 edges, bipartite with parts {x,u5,z,u4,y} / rest.
inline Graph herschel() {
    Graph g = build_graph(11, {{7, 0}, {7, 1}, {7, 2}, {7, 10},  // x
                               {4, 0}, {4, 1}, {4, 5}, {4, 6},   // u5
                               {9, 2}, {9, 5}, {9, 6}, {9, 10},  // z
                               {3, 0}, {3, 2}, {3, 5},           // u4
                               {8, 1}, {8, 6}, {8, 10}});        // y
    g.labels = {"u1", "u2", "u3", "u4", "u5", "u6", "u7", "x", "y", "z", "v1"};
    return g;
}

// Non-Hamiltonian planar triangulation on the Herschel graph: one diagonal
// per quadrilateral face of the fixed embedding.  The 9-edge augmentation
// below is the unique choice (over all 2^9 diagonal patterns) that stays
// simple, triangulates every face, and remains non-Hamiltonian; computed once
// by search and frozen.
inline Graph goldner_harary() {
    Graph g = herschel();
    for (auto [u, v] : std::vector<Edge>{{3, 4}, {4, 7}, {3, 7}, {4, 8}, {7, 8},
                                         {7, 9}, {3, 9}, {4, 9}, {8, 9}})
        g.add_edge(u, v);
    return g;
}

// Herschel with v1 replaced by the path v1..vk: x-v1, z-vk, y-vi for all i.
// Ids: u1..u7 = 0..6, x = 7, y = 8, z = 9, v1..vk = 10..9+k.
inline Graph g_k(int k) {
    if (k < 1) throw std::invalid_argument("g_k: k must be at least 1");
    Graph g(10 + k);
    for (auto [u, v] : std::vector<Edge>{{7, 0}, {7, 1}, {7, 2}, {4, 0}, {4, 1}, {4, 5},
                                         {4, 6}, {9, 2}, {9, 5}, {9, 6}, {3, 0}, {3, 2},
                                         {3, 5}, {8, 1}, {8, 6}})
        g.add_edge(u, v);
    g.add_edge(7, 10);          // x - v1
    g.add_edge(9, 9 + k);       // z - vk
    for (int i = 0; i < k; ++i) {
        g.add_edge(8, 10 + i);  // y - vi
        if (i + 1 < k) g.add_edge(10 + i, 11 + i);
    }
    g.labels = {"u1", "u2", "u3", "u4", "u5", "u6", "u7", "x", "y", "z"};
    for (int i = 1; i <= k; ++i) g.labels.push_back("v" + std::to_string(i));
    return g;
}

// Prism C_m x K_2 (bottom 0..m-1, top m..2m-1) with a diagonal from bottom-i
// to top-(i+1) added in quadrilateral face i iff mask bit i is set.
inline Graph prism_with_chords(int m, std::uint64_t mask) {
    if (m < 3) throw std::invalid_argument("prism_with_chords: m must be at least 3");
    if (mask >> m) throw std::invalid_argument("prism_with_chords: mask wider than m bits");
    Graph g(2 * m);
    for (int i = 0; i < m; ++i) {
        g.add_edge(i, (i + 1) % m);
        g.add_edge(m + i, m + (i + 1) % m);
        g.add_edge(i, m + i);
        if (mask >> i & 1) g.add_edge(i, m + (i + 1) % m);
    }
    return g;
}

inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

inline Graph wheel(int rim) {
    if (rim < 3) throw std::invalid_argument("wheel: rim must be at least 3");
    Graph g(rim + 1);
    for (int i = 0; i < rim; ++i) {
        g.add_edge(i, (i + 1) % rim);
        g.add_edge(i, rim);
    }
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: parts must be nonempty");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

inline Graph named_graph(const FamilySpec& spec) {
    auto want = [&](std::size_t k) {
        if (spec.params.size() != k)
            throw std::invalid_argument("named_graph: wrong parameter count for " + spec.name);
    };
    if (spec.name == "herschel") {
        want(0);
        return herschel();
    }
    if (spec.name == "goldner-harary") {
        want(0);
        return goldner_harary();
    }
    if (spec.name == "gk") {
        want(1);
        return g_k((int)spec.params[0]);
    }
    if (spec.name == "prism-chords") {
        want(2);
        return prism_with_chords((int)spec.params[0], (std::uint64_t)spec.params[1]);
    }
    if (spec.name == "petersen") {
        want(0);
        return petersen();
    }
    if (spec.name == "wheel") {
        want(1);
        return wheel((int)spec.params[0]);
    }
    if (spec.name == "complete-bipartite") {
        want(2);
        return complete_bipartite((int)spec.params[0], (int)spec.params[1]);
    }
    throw std::invalid_argument("named_graph: unknown family " + spec.name);
}

}  // namespace minorham

#endif  // MINORHAM_FAMILIES_HPP

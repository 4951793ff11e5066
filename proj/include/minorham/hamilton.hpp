// Exact Hamilton-cycle and longest-cycle search with checkable witnesses,
// toughness-cut certificates of non-Hamiltonicity, and the constructive
// Hamilton-path procedures on outerplanar graphs.

#ifndef MINORHAM_HAMILTON_HPP
#define MINORHAM_HAMILTON_HPP

#include <cstdint>

#include "minorham/topology.hpp"

namespace minorham {

struct Cycle {
    std::vector<int> vertices;  // cyclic sequence of distinct ids, length >= 3

    int length() const { return (int)vertices.size(); }
};

struct ExhaustionProof {
    std::uint64_t nodes = 0;     // backtracking nodes expanded
    std::string graph_code;      // canonical code of the searched graph
};

struct ToughnessCut {
    VertexSet cut;
    int component_count = 0;
};

struct HamPath {
    std::vector<int> vertices;
    int terminal_degree = 0;  // degree of the last vertex in the host graph
};

inline bool verify_cycle(const Graph& g, const Cycle& c) {
    if (c.vertices.size() < 3) return false;
    std::uint64_t seen = 0;
    for (int v : c.vertices) {
        if (v < 0 || v >= g.n || (seen >> v & 1)) return false;
        seen |= 1ULL << v;
    }
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
        if (!g.has_edge(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Hamilton cycle search

namespace detail {

// Backtracking with two pruning rules: an unvisited vertex with fewer than
// two usable neighbors kills the branch, and so does a disconnection of the
// unvisited set (together with both path ends).
inline bool ham_extend(const Graph& g, std::vector<int>& path, std::uint64_t visited,
                       std::uint64_t& nodes) {
    ++nodes;
    int n = g.n;
    int cur = path.back();
    if ((int)path.size() == n) return g.has_edge(cur, path.front());

    std::uint64_t unvisited = g.full_mask() & ~visited;
    std::uint64_t usable = unvisited | (1ULL << cur) | (1ULL << path.front());
    for (std::uint64_t m = unvisited; m; m &= m - 1) {
        int u = lowest_bit(m);
        if (popcount64(g.adj[u] & usable) < 2) return false;
    }
    if (!is_connected_on(g, unvisited | (1ULL << cur))) return false;

    for (std::uint64_t m = g.adj[cur] & unvisited; m; m &= m - 1) {
        int w = lowest_bit(m);
        path.push_back(w);
        if (ham_extend(g, path, visited | (1ULL << w), nodes)) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace detail

// A Hamilton cycle, or a certified exhaustive negative.
inline std::variant<Cycle, ExhaustionProof> hamilton_cycle(const Graph& g) {
    if (g.n < 3) throw std::invalid_argument("hamilton_cycle: need at least 3 vertices");
    std::uint64_t nodes = 0;
    std::vector<int> path = {0};
    if (detail::ham_extend(g, path, 1, nodes)) {
        Cycle c{std::move(path)};
        if (!verify_cycle(g, c)) throw std::logic_error("hamilton_cycle: invalid cycle produced");
        return c;
    }
    return ExhaustionProof{nodes, canonical_code(g).bytes};
}

inline bool is_hamiltonian(const Graph& g) {
    return g.n >= 3 && std::holds_alternative<Cycle>(hamilton_cycle(g));
}

// ---------------------------------------------------------------------------
// Longest cycle (exact)

namespace detail {

inline void longest_extend(const Graph& g, int start, std::vector<int>& path,
                           std::uint64_t visited, std::uint64_t lower_bits,
                           std::vector<int>& best) {
    int cur = path.back();
    if (path.size() >= 3 && g.has_edge(cur, start) && path.size() > best.size()) best = path;

    // bound: current length + vertices still reachable from cur
    std::uint64_t unvisited = g.full_mask() & ~visited & ~lower_bits;
    std::uint64_t reach = 1ULL << cur, frontier = reach;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1) next |= g.adj[lowest_bit(m)];
        next &= unvisited & ~reach;
        reach |= next;
        frontier = next;
    }
    if (path.size() + (std::size_t)popcount64(reach & unvisited) <= best.size()) return;

    for (std::uint64_t m = g.adj[cur] & unvisited; m; m &= m - 1) {
        int w = lowest_bit(m);
        path.push_back(w);
        longest_extend(g, start, path, visited | (1ULL << w), lower_bits, best);
        path.pop_back();
    }
}

}  // namespace detail

// Maximum-length cycle, by exhaustive search anchored at each cycle's
// smallest vertex.
inline Cycle longest_cycle(const Graph& g) {
    std::vector<int> best;
    std::uint64_t lower = 0;
    for (int s = 0; s < g.n; ++s) {
        std::vector<int> path = {s};
        detail::longest_extend(g, s, path, 1ULL << s, lower, best);
        lower |= 1ULL << s;
        if ((int)best.size() == g.n) break;
    }
    if (best.empty()) throw std::invalid_argument("longest_cycle: graph is acyclic");
    return Cycle{std::move(best)};
}

// ---------------------------------------------------------------------------
// Toughness cuts

inline bool verify_tough_cut(const Graph& g, const ToughnessCut& tc) {
    std::uint64_t cut = to_mask(tc.cut.members);
    auto comps = component_masks(g, g.full_mask() & ~cut);
    return (int)comps.size() == tc.component_count &&
           tc.component_count > (int)tc.cut.members.size();
}

// Smallest vertex set S with more than |S| components after removal, up to
// max_size, else nullopt.
inline std::optional<ToughnessCut> find_tough_cut(const Graph& g, int max_size) {
    for (int k = 1; k <= max_size && k < g.n; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            std::uint64_t cut = 0;
            for (int i : idx) cut |= 1ULL << i;
            int comps = (int)component_masks(g, g.full_mask() & ~cut).size();
            if (comps > k) return ToughnessCut{{mask_to_vec(cut)}, comps};
            // next combination
            int i = k - 1;
            while (i >= 0 && idx[i] == g.n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Outerplanar Hamilton paths (constructive)

namespace detail {

// cycle_order[0] = x, cycle_order[1] = y; returns Hamilton path x y ... t
// with deg(t) = 2 in the induced subgraph on cycle_order.
inline std::vector<int> outer_ham_path_rec(const Graph& g, std::vector<int> z) {
    int len = (int)z.size();
    std::uint64_t in_sub = to_mask(z);
    int w = z.back();  // the other outer neighbor of x
    if (popcount64(g.adj[w] & in_sub) == 2) return z;  // x Z w is the path

    // chord neighbor v of w, not an outer-cycle edge of this subgraph;
    // take the largest position = shortest recursed segment
    int p = -1;
    for (int i = len - 3; i >= 1; --i)
        if (g.has_edge(z[i], w)) {
            p = i;
            break;
        }
    if (p < 0) throw std::logic_error("outer_ham_path_rec: no chord at w (not 2-connected?)");

    // subgraph on v..w, re-rooted so its outer cycle starts v, w
    std::vector<int> sub;
    sub.push_back(z[p]);
    sub.push_back(w);
    for (int i = len - 2; i >= p + 1; --i) sub.push_back(z[i]);
    std::vector<int> q = outer_ham_path_rec(g, std::move(sub));

    std::vector<int> out(z.begin(), z.begin() + p);  // x .. just before v
    out.insert(out.end(), q.begin(), q.end());       // v w ... t
    return out;
}

}  // namespace detail

// Hamilton path starting with outer-cycle edge xy and ending at a degree-2
// vertex, for 2-connected outerplanar g.
inline HamPath outerplanar_ham_path(const Graph& g, int x, int y) {
    if (!is_block(g) || g.n < 3)
        throw std::invalid_argument("outerplanar_ham_path: graph is not 2-connected");
    auto cyc = outer_cycle_of_2connected(g);
    if (!cyc) throw std::invalid_argument("outerplanar_ham_path: graph is not outerplanar");
    int k = (int)cyc->size();
    int ix = -1;
    for (int i = 0; i < k; ++i)
        if ((*cyc)[i] == x) ix = i;
    if (ix < 0) throw std::invalid_argument("outerplanar_ham_path: x not a vertex");
    std::vector<int> z;
    if ((*cyc)[(ix + 1) % k] == y) {
        for (int i = 0; i < k; ++i) z.push_back((*cyc)[(ix + i) % k]);
    } else if ((*cyc)[(ix - 1 + k) % k] == y) {
        for (int i = 0; i < k; ++i) z.push_back((*cyc)[(ix - i + 2 * k) % k]);
    } else {
        throw std::invalid_argument("outerplanar_ham_path: xy is not an outer-cycle edge");
    }
    std::vector<int> path = detail::outer_ham_path_rec(g, std::move(z));
    return HamPath{path, g.degree(path.back())};
}

// Hamilton path of g-y starting at x (Corollary to the above): add xy if
// absent, walk y x ... t, drop y.  t = x when |V| = 2.
inline HamPath outerplanar_ham_path_minus(const Graph& g, int x, int y) {
    auto oe = xy_outerplanar_embedding(g, x, y);
    if (!oe) throw std::invalid_argument("outerplanar_ham_path_minus: graph is not xy-outerplanar");
    if (g.n == 2) return HamPath{{x}, g.degree(x)};
    Graph g2 = g;
    if (!g2.has_edge(x, y)) g2.add_edge(x, y);
    HamPath p = outerplanar_ham_path(g2, y, x);
    p.vertices.erase(p.vertices.begin());  // drop y
    p.terminal_degree = g.degree(p.vertices.back());
    return p;
}

}  // namespace minorham

#endif  // MINORHAM_HAMILTON_HPP

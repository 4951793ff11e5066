// K_{2,t} minor detection via standard models: two disjoint connected branch
// sets R1, R2 plus t single vertices each adjacent to both sides.  Absent
// answers are exhaustive (branch-and-bound with an admissible bound), and a
// rooted variant pins R1, R2 to contain given roots.

#ifndef MINORHAM_MINORS_HPP
#define MINORHAM_MINORS_HPP

#include "minorham/topology.hpp"

namespace minorham {

struct StandardModel {
    VertexSet r1, r2, s;  // |s| = t
};

struct RootedK22Model {
    VertexSet r1, r2, s;  // roots: x in r1, y in r2; |s| = 2
};

// Independent of the searchers: checks the standard-model invariants.
inline bool verify_standard_model(const Graph& g, const VertexSet& r1, const VertexSet& r2,
                                  const VertexSet& s, int t) {
    std::uint64_t m1 = to_mask(r1.members), m2 = to_mask(r2.members), ms = to_mask(s.members);
    if ((int)s.members.size() != t) return false;
    if (m1 == 0 || m2 == 0) return false;
    if ((m1 & m2) || (m1 & ms) || (m2 & ms)) return false;
    if ((m1 | m2 | ms) & ~g.full_mask()) return false;
    if (!is_connected_on(g, m1) || !is_connected_on(g, m2)) return false;
    for (int v : s.members)
        if (!(g.adj[v] & m1) || !(g.adj[v] & m2)) return false;
    return true;
}

namespace detail {

inline std::uint64_t neighborhood(const Graph& g, std::uint64_t mask) {
    std::uint64_t out = 0;
    for (std::uint64_t m = mask; m; m &= m - 1) out |= g.adj[lowest_bit(m)];
    return out & ~mask;
}

// Component of `seed` inside seed|allowed: every future grown branch set
// lives within this closure.
inline std::uint64_t closure(const Graph& g, std::uint64_t seed, std::uint64_t allowed) {
    std::uint64_t reach = seed, frontier = seed;
    while (frontier) {
        std::uint64_t next = neighborhood(g, reach) & allowed & ~reach;
        reach |= next;
        frontier = next;
    }
    return reach;
}

// Enumerates connected supersets of r2 inside ~x2 (one node per set, the
// classic extend-then-forbid scheme), with r1 fixed.  Prunes when the number
// of vertices that can attach to r1 and to r2's reachable closure drops
// below t.  Success fills out_s with the t lowest common attachments.
inline bool grow_r2(const Graph& g, int t, std::uint64_t r1, std::uint64_t r2, std::uint64_t x2,
                    std::uint64_t& out2, std::uint64_t& out_s) {
    std::uint64_t common = neighborhood(g, r1) & neighborhood(g, r2) & ~r1 & ~r2;
    if (popcount64(common) >= t) {
        out2 = r2;
        out_s = 0;
        for (int i = 0; i < t; ++i) {
            out_s |= common & -common;
            common &= common - 1;
        }
        return true;
    }
    std::uint64_t avail = g.full_mask() & ~r1 & ~r2 & ~x2;
    std::uint64_t c2 = closure(g, r2, avail);
    int bound = 0;
    for (std::uint64_t m = g.full_mask() & ~r1 & ~r2; m; m &= m - 1) {
        int v = lowest_bit(m);
        if ((g.adj[v] & r1) && (g.adj[v] & c2)) ++bound;
    }
    if (bound < t) return false;
    for (std::uint64_t ext = neighborhood(g, r2) & avail; ext; ext &= ext - 1) {
        std::uint64_t ub = ext & -ext;
        if (grow_r2(g, t, r1, r2 | ub, x2, out2, out_s)) return true;
        x2 |= ub;  // later branches exclude u from r2 for good
    }
    return false;
}

// Enumerates connected supersets of r1 inside ~x1.  At every node first tries
// to complete the model with some seed for the second side; fixed_b pins that
// seed (rooted search), fixed_b < 0 sweeps seeds above r1's minimum element.
inline bool grow_r1(const Graph& g, int t, std::uint64_t r1, std::uint64_t x1, int fixed_b,
                    std::uint64_t& out1, std::uint64_t& out2, std::uint64_t& out_s) {
    if (fixed_b >= 0) {
        if (grow_r2(g, t, r1, 1ULL << fixed_b, 0, out2, out_s)) {
            out1 = r1;
            return true;
        }
    } else {
        for (int b = lowest_bit(r1) + 1; b < g.n; ++b) {
            if (r1 >> b & 1) continue;
            // min(R2) = b: everything below b is barred from the second side
            if (grow_r2(g, t, r1, 1ULL << b, (1ULL << b) - 1, out2, out_s)) {
                out1 = r1;
                return true;
            }
        }
    }
    std::uint64_t avail = g.full_mask() & ~r1 & ~x1;
    std::uint64_t c1 = closure(g, r1, avail);
    // admissible: any future attachment vertex must touch r1's closure
    int bound = 0;
    for (std::uint64_t m = g.full_mask() & ~r1; m; m &= m - 1) {
        int v = lowest_bit(m);
        if (g.adj[v] & (r1 | c1)) ++bound;
    }
    if (bound < t) return false;
    for (std::uint64_t ext = neighborhood(g, r1) & avail; ext; ext &= ext - 1) {
        std::uint64_t ub = ext & -ext;
        if (grow_r1(g, t, r1 | ub, x1, fixed_b, out1, out2, out_s)) return true;
        x1 |= ub;
    }
    return false;
}

}  // namespace detail

// A standard model of K_{2,t}, or nullopt as an exhaustive-search guarantee
// that g has no K_{2,t} minor.
inline std::optional<StandardModel> find_k2t_model(const Graph& g, int t) {
    if (t < 2) throw std::invalid_argument("find_k2t_model: t must be at least 2");
    std::uint64_t o1, o2, os;
    for (int a = 0; a < g.n; ++a) {
        // min(R1) = a < min(R2): vertices below a are barred from the first side
        if (detail::grow_r1(g, t, 1ULL << a, (1ULL << a) - 1, -1, o1, o2, os)) {
            StandardModel m{{mask_to_vec(o1)}, {mask_to_vec(o2)}, {mask_to_vec(os)}};
            if (!verify_standard_model(g, m.r1, m.r2, m.s, t))
                throw std::logic_error("find_k2t_model: invalid model produced");
            return m;
        }
    }
    return std::nullopt;
}

// Every standard model, deduplicated as (R1,R2,S) with {R1,R2} unordered
// (reported with min(R1) < min(R2)).
inline std::vector<StandardModel> enumerate_k2t_models(const Graph& g, int t) {
    if (t < 2) throw std::invalid_argument("enumerate_k2t_models: t must be at least 2");
    int n = g.n;
    std::vector<std::uint64_t> conn;
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask)
        if (is_connected_on(g, mask)) conn.push_back(mask);

    std::vector<StandardModel> out;
    std::vector<int> pick;
    for (std::uint64_t m1 : conn)
        for (std::uint64_t m2 : conn) {
            if (m1 & m2) continue;
            if ((m1 & -m1) >= (m2 & -m2)) continue;  // min(R1) < min(R2)
            std::uint64_t common =
                detail::neighborhood(g, m1) & detail::neighborhood(g, m2) & ~m1 & ~m2;
            std::vector<int> cand = mask_to_vec(common);
            if ((int)cand.size() < t) continue;
            // all t-subsets of the common attachments
            pick.assign(t, 0);
            std::iota(pick.begin(), pick.end(), 0);
            for (;;) {
                std::vector<int> s;
                for (int i : pick) s.push_back(cand[i]);
                out.push_back({{mask_to_vec(m1)}, {mask_to_vec(m2)}, {std::move(s)}});
                int i = t - 1;
                while (i >= 0 && pick[i] == (int)cand.size() - t + i) --i;
                if (i < 0) break;
                ++pick[i];
                for (int j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
    return out;
}

// K_{2,2} model with x in R1 and y in R2, or nullopt (exhaustive).
inline std::optional<RootedK22Model> find_rooted_k22(const Graph& g, int x, int y) {
    if (x == y || x < 0 || y < 0 || x >= g.n || y >= g.n)
        throw std::invalid_argument("find_rooted_k22: bad roots");
    Graph g2 = g;
    if (!g2.has_edge(x, y)) g2.add_edge(x, y);
    if (!is_block(g2)) throw std::invalid_argument("find_rooted_k22: g+xy is not a block");
    std::uint64_t o1, o2, os;
    if (detail::grow_r1(g, 2, 1ULL << x, 1ULL << y, y, o1, o2, os)) {
        RootedK22Model m{{mask_to_vec(o1)}, {mask_to_vec(o2)}, {mask_to_vec(os)}};
        if (!verify_standard_model(g, m.r1, m.r2, m.s, 2) || !(o1 >> x & 1) || !(o2 >> y & 1))
            throw std::logic_error("find_rooted_k22: invalid model produced");
        return m;
    }
    return std::nullopt;
}

}  // namespace minorham

#endif  // MINORHAM_MINORS_HPP

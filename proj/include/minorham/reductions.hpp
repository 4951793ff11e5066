// Cycle-preserving reductions of a 3-connected graph: contracting an outside
// component with three attachments, contracting a degree-3 outside vertex
// along a connectivity-preserving edge, deleting a chord with three disjoint
// bypass paths, the normalization pipeline combining them, and lifting cycles
// of the reduced graph back to the original with no loss of length.

#ifndef MINORHAM_REDUCTIONS_HPP
#define MINORHAM_REDUCTIONS_HPP

#include "minorham/hamilton.hpp"
#include "minorham/topology.hpp"

namespace minorham {

struct ReductionStep {
    enum class Kind { ContractComponent, ContractDeg3Edge, DeleteEdge };
    Kind kind;
    std::vector<int> component;  // ContractComponent: the contracted set (pre-step ids)
    Edge edge{-1, -1};           // ContractDeg3Edge / DeleteEdge (pre-step ids)
    std::vector<int> id_map;     // pre-step id -> post-step id
};

inline const char* step_kind_name(ReductionStep::Kind k) {
    switch (k) {
        case ReductionStep::Kind::ContractComponent: return "contract-component";
        case ReductionStep::Kind::ContractDeg3Edge: return "contract-deg3-edge";
        case ReductionStep::Kind::DeleteEdge: return "delete-edge";
    }
    return "?";
}

struct ReductionTrace {
    Graph original;
    Cycle cycle;  // in original ids; survives every step
    std::vector<ReductionStep> steps;
    Graph result;
};

struct ReducedGraph {
    Graph graph;
    ReductionStep step;
};

namespace detail {

// Contract a vertex set to a single vertex (at the slot of its minimum
// element, then dense renumbering).  A singleton set is the identity.
inline EditResult contract_set(const Graph& g, std::uint64_t bmask) {
    int rep = lowest_bit(bmask);
    std::vector<int> id_map(g.n, -1);
    int k = 0;
    for (int v = 0; v < g.n; ++v)
        if (!(bmask >> v & 1) || v == rep) id_map[v] = k++;
    for (int v = 0; v < g.n; ++v)
        if (bmask >> v & 1) id_map[v] = id_map[rep];
    Graph h(k);
    for (auto [u, v] : g.edges())
        if (id_map[u] != id_map[v]) h.add_edge(id_map[u], id_map[v]);
    return {std::move(h), std::move(id_map)};
}

inline std::vector<int> map_cycle(const std::vector<int>& cyc, const std::vector<int>& id_map) {
    std::vector<int> out;
    out.reserve(cyc.size());
    for (int v : cyc) out.push_back(id_map[v]);
    return out;
}

inline void require_cycle(const Graph& g, const std::vector<int>& cyc, const char* who) {
    if (!verify_cycle(g, Cycle{cyc})) throw std::invalid_argument(std::string(who) + ": not a cycle of the graph");
}

}  // namespace detail

// An edge at the degree-3 vertex v whose contraction keeps g 3-connected;
// guaranteed to exist, tried in ascending neighbor order.
inline Edge halin_edge(const Graph& g, int v) {
    if (v < 0 || v >= g.n || g.degree(v) != 3)
        throw std::invalid_argument("halin_edge: vertex degree is not 3");
    if (g.n < 5 || !is_3_connected(g))
        throw std::invalid_argument("halin_edge: graph is not 3-connected with n >= 5");
    for (int w : g.neighbors(v))
        if (is_3_connected(contract_edge(g, {v, w}).graph)) return {v, w};
    throw std::logic_error("halin_edge: no contractible edge at a degree-3 vertex");
}

// Contract an outside component with exactly three attachments on c down to a
// single degree-3 vertex.
inline ReducedGraph contract_outside_component(const Graph& g, const Cycle& c,
                                               const VertexSet& b) {
    detail::require_cycle(g, c.vertices, "contract_outside_component");
    if (!is_3_connected(g))
        throw std::invalid_argument("contract_outside_component: graph is not 3-connected");
    std::uint64_t cmask = to_mask(c.vertices), bmask = to_mask(b.members);
    auto comps = component_masks(g, g.full_mask() & ~cmask);
    if (std::find(comps.begin(), comps.end(), bmask) == comps.end())
        throw std::invalid_argument("contract_outside_component: not a component off the cycle");
    std::uint64_t attach = 0;
    for (int v : b.members) attach |= g.adj[v] & cmask;
    if (popcount64(attach) != 3)
        throw std::invalid_argument("contract_outside_component: attachment count is not 3");

    auto r = detail::contract_set(g, bmask);
    if (!is_3_connected(r.graph))
        throw std::logic_error("contract_outside_component: result lost 3-connectivity");
    ReductionStep step{ReductionStep::Kind::ContractComponent, b.members, {-1, -1},
                       std::move(r.id_map)};
    return {std::move(r.graph), std::move(step)};
}

// Contract a degree-3 vertex off c into one of its neighbors, chosen so the
// result stays 3-connected.
inline ReducedGraph reduce_deg3_vertex(const Graph& g, const Cycle& c, int b) {
    detail::require_cycle(g, c.vertices, "reduce_deg3_vertex");
    if (to_mask(c.vertices) >> b & 1)
        throw std::invalid_argument("reduce_deg3_vertex: vertex lies on the cycle");
    Edge e = halin_edge(g, b);  // checks degree, connectivity, n >= 5
    auto r = contract_edge(g, e);
    ReductionStep step{ReductionStep::Kind::ContractDeg3Edge, {}, e, std::move(r.id_map)};
    return {std::move(r.graph), std::move(step)};
}

// Delete a non-cycle edge whose ends stay linked by three internally disjoint
// paths (of length >= min_len) avoiding the edge.
inline ReducedGraph reduce_chord(const Graph& g, const Cycle& c, Edge e, int min_len = 2) {
    detail::require_cycle(g, c.vertices, "reduce_chord");
    if (!g.has_edge(e.first, e.second)) throw std::invalid_argument("reduce_chord: not an edge");
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        int u = c.vertices[i], v = c.vertices[(i + 1) % c.vertices.size()];
        if ((u == e.first && v == e.second) || (u == e.second && v == e.first))
            throw std::invalid_argument("reduce_chord: edge lies on the cycle");
    }
    if (!internally_disjoint_paths(g, e.first, e.second, 3, min_len))
        throw std::invalid_argument("reduce_chord: no three disjoint bypass paths");
    bool was3 = is_3_connected(g);
    Graph h = g;
    h.remove_edge(e.first, e.second);
    if (was3 && !is_3_connected(h))
        throw std::logic_error("reduce_chord: result lost 3-connectivity");
    std::vector<int> id(g.n);
    std::iota(id.begin(), id.end(), 0);
    ReductionStep step{ReductionStep::Kind::DeleteEdge, {}, e, std::move(id)};
    return {std::move(h), std::move(step)};
}

// Full pipeline: collapse every outside component to a degree-3 vertex,
// contract away every outside vertex except the one from d_component, then
// delete qualifying chords until none remain.
inline ReductionTrace normalize_claim3(const Graph& g, const Cycle& c,
                                       const VertexSet& d_component) {
    detail::require_cycle(g, c.vertices, "normalize_claim3");
    if (!is_3_connected(g) || !is_planar(g))
        throw std::invalid_argument("normalize_claim3: graph is not 3-connected planar");
    std::uint64_t cmask = to_mask(c.vertices);
    auto comps = component_masks(g, g.full_mask() & ~cmask);
    std::uint64_t dmask = to_mask(d_component.members);
    if (std::find(comps.begin(), comps.end(), dmask) == comps.end())
        throw std::invalid_argument("normalize_claim3: d is not a component off the cycle");
    for (std::uint64_t bm : comps) {
        std::uint64_t attach = 0;
        for (int v : mask_to_vec(bm)) attach |= g.adj[v] & cmask;
        if (popcount64(attach) != 3)
            throw std::invalid_argument("normalize_claim3: a component has attachment count != 3");
    }

    ReductionTrace trace{g, c, {}, g};
    Graph cur = g;
    std::vector<int> cyc = c.vertices;
    int d = lowest_bit(dmask);

    auto apply = [&](ReducedGraph rg) {
        cyc = detail::map_cycle(cyc, rg.step.id_map);
        d = rg.step.id_map[d];
        detail::require_cycle(rg.graph, cyc, "normalize_claim3 (cycle lost)");
        cur = std::move(rg.graph);
        trace.steps.push_back(std::move(rg.step));
    };

    for (std::uint64_t bm : comps) {
        std::vector<int> members = mask_to_vec(bm);
        // earlier contractions renumbered; map members forward
        // (components are processed in one pass over the original ids)
        for (auto& s : trace.steps)
            for (auto& v : members) v = s.id_map[v];
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        apply(contract_outside_component(cur, Cycle{cyc}, {members}));
    }

    for (;;) {
        std::uint64_t outside = cur.full_mask() & ~to_mask(cyc) & ~(1ULL << d);
        if (!outside) break;
        apply(reduce_deg3_vertex(cur, Cycle{cyc}, lowest_bit(outside)));
    }

    for (bool changed = true; changed;) {
        changed = false;
        for (auto [u, v] : cur.edges()) {
            bool on_c = false;
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
                if ((a == u && b == v) || (a == v && b == u)) on_c = true;
            }
            if (on_c) continue;
            if (!internally_disjoint_paths(cur, u, v, 3, 2)) continue;
            apply(reduce_chord(cur, Cycle{cyc}, {u, v}, 2));
            changed = true;
            break;
        }
    }

    trace.result = std::move(cur);
    return trace;
}

// ---------------------------------------------------------------------------
// Lifting

namespace detail {

// Shortest path through the contracted set B from a neighbor of ai to a
// neighbor of aj (pre-step ids); both ends inside B.
inline std::vector<int> path_through(const Graph& g, std::uint64_t bmask, int ai, int aj) {
    std::vector<int> prev(g.n, -2);
    std::vector<int> queue;
    for (std::uint64_t m = g.adj[ai] & bmask; m; m &= m - 1) {
        int v = lowest_bit(m);
        prev[v] = -1;
        queue.push_back(v);
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        if (g.adj[v] >> aj & 1) {
            std::vector<int> path;
            for (int u = v; u != -1; u = prev[u]) path.push_back(u);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (std::uint64_t m = g.adj[v] & bmask; m; m &= m - 1) {
            int w = lowest_bit(m);
            if (prev[w] == -2) {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    throw std::logic_error("path_through: attachments not linked through the component");
}

}  // namespace detail

// Replay the trace backwards, turning a cycle of trace.result into a cycle of
// trace.original that is at least as long.
inline Cycle lift_cycle(const ReductionTrace& trace, const Cycle& z) {
    detail::require_cycle(trace.result, z.vertices, "lift_cycle");

    // forward replay to recover each step's pre-step graph
    std::vector<Graph> pre;
    Graph cur = trace.original;
    for (auto& s : trace.steps) {
        pre.push_back(cur);
        switch (s.kind) {
            case ReductionStep::Kind::ContractComponent:
                cur = detail::contract_set(cur, to_mask(s.component)).graph;
                break;
            case ReductionStep::Kind::ContractDeg3Edge:
                cur = contract_edge(cur, s.edge).graph;
                break;
            case ReductionStep::Kind::DeleteEdge:
                cur.remove_edge(s.edge.first, s.edge.second);
                break;
        }
    }
    if (!(cur == trace.result)) throw std::invalid_argument("lift_cycle: trace does not replay");

    std::vector<int> cyc = z.vertices;
    for (int si = (int)trace.steps.size() - 1; si >= 0; --si) {
        const ReductionStep& s = trace.steps[si];
        const Graph& gpre = pre[si];
        if (s.kind == ReductionStep::Kind::DeleteEdge) continue;  // ids unchanged

        if (s.kind == ReductionStep::Kind::ContractComponent) {
            std::uint64_t bmask = to_mask(s.component);
            int rep = lowest_bit(bmask);
            int zb = s.id_map[rep];
            std::vector<int> out;
            int k = (int)cyc.size();
            for (int i = 0; i < k; ++i) {
                if (cyc[i] != zb) {
                    // unique pre-image outside B (rep maps to zb too, but
                    // inv[zb] is only consulted in the zb branch)
                    int v = -1;
                    for (int u = 0; u < gpre.n; ++u)
                        if (s.id_map[u] == cyc[i] && !(bmask >> u & 1)) v = u;
                    out.push_back(v);
                    continue;
                }
                if (popcount64(bmask) == 1) {
                    out.push_back(rep);
                    continue;
                }
                int ai = -1, aj = -1;  // pre-images of the cycle neighbors of zb
                for (int u = 0; u < gpre.n; ++u) {
                    if (s.id_map[u] == cyc[(i - 1 + k) % k] && !(bmask >> u & 1)) ai = u;
                    if (s.id_map[u] == cyc[(i + 1) % k] && !(bmask >> u & 1)) aj = u;
                }
                for (int v : detail::path_through(gpre, bmask, ai, aj)) out.push_back(v);
            }
            cyc = std::move(out);
        } else {  // ContractDeg3Edge: b (off-cycle, degree 3) merged into its neighbor
            int b = s.edge.first, cvx = s.edge.second;
            int zb = s.id_map[b];
            std::vector<int> out;
            int k = (int)cyc.size();
            for (int i = 0; i < k; ++i) {
                if (cyc[i] != zb) {
                    int v = -1;
                    for (int u = 0; u < gpre.n; ++u)
                        if (s.id_map[u] == cyc[i] && u != b && u != cvx) v = u;
                    out.push_back(v);
                    continue;
                }
                int p = -1, q = -1;
                for (int u = 0; u < gpre.n; ++u) {
                    if (s.id_map[u] == cyc[(i - 1 + k) % k] && u != b && u != cvx) p = u;
                    if (s.id_map[u] == cyc[(i + 1) % k] && u != b && u != cvx) q = u;
                }
                // each cycle edge at the merged vertex comes from cvx if
                // possible, else from b (then that neighbor is one of b's)
                bool p_via_b = !gpre.has_edge(p, cvx);
                bool q_via_b = !gpre.has_edge(q, cvx);
                if (!p_via_b && !q_via_b) {
                    out.push_back(cvx);
                } else if (p_via_b && q_via_b) {
                    out.push_back(b);
                } else if (p_via_b) {
                    out.push_back(b);
                    out.push_back(cvx);
                } else {
                    out.push_back(cvx);
                    out.push_back(b);
                }
            }
            cyc = std::move(out);
        }
        detail::require_cycle(gpre, cyc, "lift_cycle (intermediate)");
    }

    if (cyc.size() < z.vertices.size()) throw std::logic_error("lift_cycle: lost length");
    return Cycle{std::move(cyc)};
}

}  // namespace minorham

#endif  // MINORHAM_REDUCTIONS_HPP

// Planarity with combinatorial embeddings, outerplanarity, vertex
// connectivity and disjoint-path search.
//
// Planarity is the incremental face/fragment method: embed a cycle, then
// repeatedly place a path of some unembedded fragment into an admissible
// face.  Quadratic, which is fine at this scale, and it produces the
// rotation system the rest of the code needs.  Face walks follow the
// counterclockwise convention: the successor of directed edge (a,v) is
// (v,b) where b precedes a in the rotation at v.

#ifndef MINORHAM_TOPOLOGY_HPP
#define MINORHAM_TOPOLOGY_HPP

#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <variant>

#include "minorham/graph.hpp"

namespace minorham {

struct PlanarEmbedding {
    std::vector<std::vector<int>> rotation;  // cyclic neighbor order per vertex
    std::vector<std::vector<int>> faces;     // closed walks (vertex sequences)
    int outer_face = -1;
};

struct NonplanarWitness {
    std::vector<Edge> kuratowski_edges;  // edge-minimal nonplanar subgraph
};

struct OuterplaneEmbedding {
    PlanarEmbedding embedding;
    std::vector<int> outer_path;  // Hamilton xy-path on the disk boundary
};

struct DisjointPaths {
    std::vector<std::vector<int>> paths;
};

// ---------------------------------------------------------------------------
// Blocks

namespace detail {

// Edge sets of the biconnected components (blocks), via DFS lowpoints.
inline std::vector<std::vector<Edge>> block_edge_sets(const Graph& g) {
    std::vector<std::vector<Edge>> blocks;
    std::vector<int> num(g.n, -1), low(g.n, 0), parent(g.n, -1);
    std::vector<Edge> stack;
    int timer = 0;

    struct Frame {
        int v;
        std::vector<int> nbrs;
        std::size_t idx = 0;
    };
    for (int root = 0; root < g.n; ++root) {
        if (num[root] >= 0) continue;
        std::vector<Frame> st;
        num[root] = low[root] = timer++;
        st.push_back({root, g.neighbors(root)});
        while (!st.empty()) {
            Frame& f = st.back();
            if (f.idx < f.nbrs.size()) {
                int w = f.nbrs[f.idx++];
                if (num[w] < 0) {
                    parent[w] = f.v;
                    num[w] = low[w] = timer++;
                    stack.push_back({f.v, w});
                    st.push_back({w, g.neighbors(w)});
                } else if (w != parent[f.v] && num[w] < num[f.v]) {
                    stack.push_back({f.v, w});
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                int v = f.v;
                st.pop_back();
                if (st.empty()) break;
                int u = st.back().v;
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= num[u]) {
                    std::vector<Edge> block;
                    while (!stack.empty()) {
                        Edge e = stack.back();
                        stack.pop_back();
                        block.push_back(e);
                        if (e == Edge{u, v} || e == Edge{v, u}) break;
                    }
                    if (!block.empty()) blocks.push_back(std::move(block));
                }
            }
        }
    }
    return blocks;
}

}  // namespace detail

// true iff g is connected with no cutvertex (2-connected, K2, or K1)
inline bool is_block(const Graph& g) {
    if (g.n == 0) return false;
    if (!is_connected(g)) return false;
    if (g.n <= 2) return true;
    for (int v = 0; v < g.n; ++v)
        if (!is_connected_on(g, g.full_mask() & ~(1ULL << v))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Planarity

namespace detail {

// Faces of a 2-connected planar graph (n >= 3), or nullopt if nonplanar.
// All face walks are simple cycles with globally consistent orientation.
inline std::optional<std::vector<std::vector<int>>> incremental_faces(const Graph& g) {
    int n = g.n;
    if (g.edge_count() > 3 * n - 6) return std::nullopt;

    // initial cycle: spanning tree + any non-tree edge, joined at the LCA
    std::vector<int> parent(n, -1), depth(n, 0);
    std::vector<char> seen(n, 0);
    std::vector<int> cyc;
    {
        std::vector<int> st = {0};
        seen[0] = 1;
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    st.push_back(w);
                }
        }
        int bu = -1, bv = -1;
        for (auto [u, v] : g.edges())
            if (parent[u] != v && parent[v] != u) {
                bu = u;
                bv = v;
                break;
            }
        if (bu < 0) return std::nullopt;  // acyclic: not 2-connected with n>=3
        std::vector<int> left, right;
        int a = bu, b = bv;
        while (depth[a] > depth[b]) {
            left.push_back(a);
            a = parent[a];
        }
        while (depth[b] > depth[a]) {
            right.push_back(b);
            b = parent[b];
        }
        while (a != b) {
            left.push_back(a);
            right.push_back(b);
            a = parent[a];
            b = parent[b];
        }
        cyc = left;
        cyc.push_back(a);
        for (auto it = right.rbegin(); it != right.rend(); ++it) cyc.push_back(*it);
    }

    std::uint64_t in_h = to_mask(cyc);
    Graph embedded(n);
    for (std::size_t i = 0; i < cyc.size(); ++i)
        embedded.add_edge(cyc[i], cyc[(i + 1) % cyc.size()]);

    std::vector<std::vector<int>> faces;
    faces.push_back(cyc);
    faces.push_back({cyc.rbegin(), cyc.rend()});

    int remaining = g.edge_count() - embedded.edge_count();
    while (remaining > 0) {
        // fragments: unembedded chords + components of g - H with attachments
        struct Fragment {
            std::uint64_t comp = 0;          // interior vertices (empty for chords)
            std::uint64_t attachments = 0;   // H-vertices touching the fragment
            Edge chord{-1, -1};
        };
        std::vector<Fragment> fragments;
        for (auto [u, v] : g.edges())
            if ((in_h >> u & 1) && (in_h >> v & 1) && !embedded.has_edge(u, v))
                fragments.push_back({0, (1ULL << u) | (1ULL << v), {u, v}});
        for (auto comp : component_masks(g, g.full_mask() & ~in_h)) {
            std::uint64_t att = 0;
            for (std::uint64_t m = comp; m; m &= m - 1) att |= g.adj[lowest_bit(m)];
            fragments.push_back({comp, att & in_h, {-1, -1}});
        }

        std::vector<std::uint64_t> face_mask(faces.size());
        for (std::size_t f = 0; f < faces.size(); ++f) face_mask[f] = to_mask(faces[f]);

        int best_frag = -1, best_count = -1, best_face = -1;
        for (std::size_t i = 0; i < fragments.size(); ++i) {
            int count = 0, last = -1;
            for (std::size_t f = 0; f < faces.size(); ++f)
                if ((face_mask[f] & fragments[i].attachments) == fragments[i].attachments) {
                    ++count;
                    last = (int)f;
                }
            if (count == 0) return std::nullopt;
            if (best_count < 0 || count < best_count) {
                best_count = count;
                best_frag = (int)i;
                best_face = last;
                if (count == 1) break;
            }
        }

        // path through the chosen fragment between two attachments
        const Fragment& fr = fragments[best_frag];
        std::vector<int> path;
        if (fr.chord.first >= 0) {
            path = {fr.chord.first, fr.chord.second};
        } else {
            auto att = mask_to_vec(fr.attachments);
            int a = att[0];
            std::uint64_t targets = fr.attachments & ~(1ULL << a);
            // BFS from a through the component to any other attachment
            std::vector<int> prev(n, -1);
            std::queue<int> q;
            std::uint64_t visited = 1ULL << a;
            q.push(a);
            int hit = -1;
            while (!q.empty() && hit < 0) {
                int v = q.front();
                q.pop();
                for (int w : g.neighbors(v)) {
                    if (visited >> w & 1) continue;
                    if ((targets >> w & 1) && (v == a ? false : true)) {
                        prev[w] = v;
                        hit = w;
                        break;
                    }
                    if (fr.comp >> w & 1) {
                        visited |= 1ULL << w;
                        prev[w] = v;
                        q.push(w);
                    }
                }
            }
            if (hit < 0) return std::nullopt;  // cannot happen in 2-connected input
            for (int v = hit; v >= 0; v = prev[v]) path.push_back(v);
            std::reverse(path.begin(), path.end());
        }

        // split best_face at path ends, keeping orientation
        std::vector<int>& walk = faces[best_face];
        int u = path.front(), v = path.back();
        int iu = -1, iv = -1;
        for (std::size_t i = 0; i < walk.size(); ++i) {
            if (walk[i] == u) iu = (int)i;
            if (walk[i] == v) iv = (int)i;
        }
        std::vector<int> seg1, seg2;
        for (int i = iu;; i = (i + 1) % (int)walk.size()) {
            seg1.push_back(walk[i]);
            if (i == iv) break;
        }
        for (int i = iv;; i = (i + 1) % (int)walk.size()) {
            seg2.push_back(walk[i]);
            if (i == iu) break;
        }
        std::vector<int> f1 = seg1;  // u..v then path interior reversed
        for (int i = (int)path.size() - 2; i >= 1; --i) f1.push_back(path[i]);
        std::vector<int> f2 = seg2;  // v..u then path interior forward
        for (std::size_t i = 1; i + 1 < path.size(); ++i) f2.push_back(path[i]);

        faces[best_face] = std::move(f1);
        faces.push_back(std::move(f2));

        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            embedded.add_edge(path[i], path[i + 1]);
            --remaining;
        }
        in_h |= to_mask(path);
    }
    return faces;
}

// rotation system from oriented face cycles of one 2-connected piece
inline std::vector<std::vector<int>> rotation_from_faces(
    const Graph& g, const std::vector<std::vector<int>>& faces) {
    int n = g.n;
    // next_at[v][b] = a  for each face triple (a, v, b)
    std::vector<std::map<int, int>> next_at(n);
    for (const auto& walk : faces) {
        int k = (int)walk.size();
        for (int i = 0; i < k; ++i) {
            int a = walk[i], v = walk[(i + 1) % k], b = walk[(i + 2) % k];
            next_at[v][b] = a;
        }
    }
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 0) continue;
        int start = lowest_bit(g.adj[v]);
        int cur = start;
        do {
            rot[v].push_back(cur);
            auto it = next_at[v].find(cur);
            if (it == next_at[v].end())
                throw std::logic_error("rotation_from_faces: inconsistent face set");
            cur = it->second;
        } while (cur != start);
        if ((int)rot[v].size() != g.degree(v))
            throw std::logic_error("rotation_from_faces: rotation does not cover degree");
    }
    return rot;
}

// face walks by traversing the rotation system (connected graph)
inline std::vector<std::vector<int>> faces_from_rotation(
    const Graph& g, const std::vector<std::vector<int>>& rot) {
    int n = g.n;
    std::vector<std::map<int, int>> pos(n);  // neighbor -> index in rot[v]
    for (int v = 0; v < n; ++v)
        for (std::size_t i = 0; i < rot[v].size(); ++i) pos[v][rot[v][i]] = (int)i;
    std::set<std::pair<int, int>> used;
    std::vector<std::vector<int>> faces;
    for (int v = 0; v < n; ++v) {
        for (int w : rot[v]) {
            if (used.count({v, w})) continue;
            std::vector<int> walk;
            int a = v, b = w;
            do {
                used.insert({a, b});
                walk.push_back(a);
                // successor of (a,b): (b, predecessor of a in rot[b])
                int i = pos[b][a];
                int d = (int)rot[b].size();
                int c = rot[b][(i - 1 + d) % d];
                a = b;
                b = c;
            } while (!(a == v && b == w));
            faces.push_back(std::move(walk));
        }
    }
    if (g.n == 1 && faces.empty()) faces.push_back({0});
    return faces;
}

inline std::vector<int> canonical_walk(const std::vector<int>& walk) {
    std::vector<int> best = walk;
    std::vector<int> rot = walk;
    for (std::size_t i = 1; i < walk.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

inline int pick_outer_face(const std::vector<std::vector<int>>& faces) {
    int best = 0;
    std::vector<int> best_walk = canonical_walk(faces[0]);
    for (int f = 1; f < (int)faces.size(); ++f) {
        if (faces[f].size() < faces[best].size()) continue;
        std::vector<int> w = canonical_walk(faces[f]);
        if (faces[f].size() > faces[best].size() || w < best_walk) {
            best = f;
            best_walk = std::move(w);
        }
    }
    return best;
}

}  // namespace detail

inline bool is_planar(const Graph& g) {
    if (g.n <= 4) return true;
    for (const auto& block : detail::block_edge_sets(g)) {
        if (block.size() <= 2) continue;
        std::uint64_t verts = 0;
        for (auto [u, v] : block) verts |= (1ULL << u) | (1ULL << v);
        auto vs = mask_to_vec(verts);
        std::vector<int> local(g.n, -1);
        for (std::size_t i = 0; i < vs.size(); ++i) local[vs[i]] = (int)i;
        Graph b((int)vs.size());
        for (auto [u, v] : block) b.add_edge(local[u], local[v]);
        if (b.n >= 5 && !detail::incremental_faces(b)) return false;
    }
    return true;
}

// Edge-minimal nonplanar subgraph: a K5 or K3,3 subdivision by Kuratowski.
inline NonplanarWitness kuratowski_witness(const Graph& g) {
    Graph h = g;
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (auto [u, v] : h.edges()) {
            Graph h2 = h;
            h2.remove_edge(u, v);
            if (!is_planar(h2)) {
                h = std::move(h2);
                shrunk = true;
                break;
            }
        }
    }
    return {h.edges()};
}

// Combinatorial embedding of a connected planar graph, or a Kuratowski
// subdivision witness.  Disconnected input is rejected.
inline std::variant<PlanarEmbedding, NonplanarWitness> planar_embedding(const Graph& g) {
    if (g.n == 0 || !is_connected(g))
        throw std::invalid_argument("planar_embedding: input must be connected and nonempty");
    if (!is_planar(g)) return kuratowski_witness(g);

    std::vector<std::vector<int>> rot(g.n);
    for (const auto& block : detail::block_edge_sets(g)) {
        std::uint64_t verts = 0;
        for (auto [u, v] : block) verts |= (1ULL << u) | (1ULL << v);
        auto vs = mask_to_vec(verts);
        std::vector<int> local(g.n, -1);
        for (std::size_t i = 0; i < vs.size(); ++i) local[vs[i]] = (int)i;
        Graph b((int)vs.size());
        for (auto [u, v] : block) b.add_edge(local[u], local[v]);
        std::vector<std::vector<int>> brot;
        if (b.n <= 2) {
            brot.assign(b.n, {});
            for (int v = 0; v < b.n; ++v) brot[v] = b.neighbors(v);
        } else {
            auto faces = detail::incremental_faces(b);
            if (!faces) throw std::logic_error("planar_embedding: block unexpectedly nonplanar");
            brot = detail::rotation_from_faces(b, *faces);
        }
        for (int lv = 0; lv < b.n; ++lv)
            for (int lw : brot[lv]) rot[vs[lv]].push_back(vs[lw]);
    }

    PlanarEmbedding emb;
    emb.rotation = std::move(rot);
    emb.faces = detail::faces_from_rotation(g, emb.rotation);
    emb.outer_face = detail::pick_outer_face(emb.faces);

    // Euler check
    int F = (int)emb.faces.size();
    if (g.n - g.edge_count() + F != 2)
        throw std::logic_error("planar_embedding: Euler check failed");
    return emb;
}

// ---------------------------------------------------------------------------
// Connectivity / disjoint paths (unit-capacity vertex-split max flow)

namespace detail {

// max number of internally disjoint x-y paths; writes the paths if out != null
inline int max_disjoint_paths(const Graph& g, int x, int y, int stop_at,
                              std::vector<std::vector<int>>* out) {
    int n = g.n;
    int N = 2 * n;  // v_in = 2v, v_out = 2v+1
    auto IN = [](int v) { return 2 * v; };
    auto OUT = [](int v) { return 2 * v + 1; };
    std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
    for (int v = 0; v < n; ++v) cap[IN(v)][OUT(v)] = (v == x || v == y) ? 1 << 20 : 1;
    for (auto [u, v] : g.edges()) {
        cap[OUT(u)][IN(v)] = 1;
        cap[OUT(v)][IN(u)] = 1;
    }
    int s = OUT(x), t = IN(y);
    int flow = 0;
    while (stop_at < 0 || flow < stop_at) {
        std::vector<int> prev(N, -1);
        std::queue<int> q;
        q.push(s);
        prev[s] = s;
        while (!q.empty() && prev[t] < 0) {
            int v = q.front();
            q.pop();
            for (int w = 0; w < N; ++w)
                if (cap[v][w] > 0 && prev[w] < 0) {
                    prev[w] = v;
                    q.push(w);
                }
        }
        if (prev[t] < 0) break;
        for (int v = t; v != s; v = prev[v]) {
            cap[prev[v]][v] -= 1;
            cap[v][prev[v]] += 1;
        }
        ++flow;
    }
    if (out) {
        out->clear();
        // decompose flow (cap deficit on forward arcs) into paths
        std::vector<std::vector<int>> flow_succ(N);
        for (auto [u, v] : g.edges()) {
            if (cap[OUT(u)][IN(v)] == 0) flow_succ[u].push_back(v);
            if (cap[OUT(v)][IN(u)] == 0) flow_succ[v].push_back(u);
        }
        // cancel opposite unit flows on the same edge
        for (int u = 0; u < n; ++u)
            for (int v : std::vector<int>(flow_succ[u])) {
                auto& fu = flow_succ[u];
                auto& fv = flow_succ[v];
                auto iu = std::find(fu.begin(), fu.end(), v);
                auto iv = std::find(fv.begin(), fv.end(), u);
                if (iu != fu.end() && iv != fv.end()) {
                    fu.erase(iu);
                    fv.erase(iv);
                }
            }
        for (int k = 0; k < flow; ++k) {
            if (flow_succ[x].empty()) break;
            std::vector<int> path = {x};
            int cur = x;
            while (cur != y) {
                int nxt = flow_succ[cur].back();
                flow_succ[cur].pop_back();
                path.push_back(nxt);
                cur = nxt;
            }
            out->push_back(std::move(path));
        }
    }
    return flow;
}

}  // namespace detail

// Exact vertex connectivity (|V|-1 for complete graphs).
inline int vertex_connectivity(const Graph& g) {
    if (g.n < 2) throw std::invalid_argument("vertex_connectivity: need at least 2 vertices");
    if (!is_connected(g)) return 0;
    int best = g.n - 1;
    bool complete = true;
    for (int x = 0; x < g.n && best > 0; ++x)
        for (int y = x + 1; y < g.n; ++y) {
            if (g.has_edge(x, y)) continue;
            complete = false;
            best = std::min(best, detail::max_disjoint_paths(g, x, y, best, nullptr));
        }
    (void)complete;
    return best;
}

// Fast exact test used in hot loops: no <=2 vertex set disconnects g.
inline bool is_3_connected(const Graph& g) {
    if (g.n < 4) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) < 3) return false;
    std::uint64_t full = g.full_mask();
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            if (!is_connected_on(g, full & ~(1ULL << a) & ~(1ULL << b))) return false;
    return true;
}

// k internally disjoint x-y paths with >= min_len edges each, or nullopt.
// min_len <= 1 is plain Menger; min_len == 2 forbids the direct edge, which
// for a present edge xy is exactly "drop xy first".
inline std::optional<DisjointPaths> internally_disjoint_paths(const Graph& g, int x, int y,
                                                              int k, int min_len = 1) {
    if (x == y) throw std::invalid_argument("internally_disjoint_paths: x == y");
    if (min_len > 2)
        throw std::invalid_argument("internally_disjoint_paths: min_len > 2 unsupported");
    Graph h = g;
    if (min_len >= 2) h.remove_edge(x, y);
    std::vector<std::vector<int>> paths;
    int flow = detail::max_disjoint_paths(h, x, y, k, &paths);
    if (flow < k) return std::nullopt;
    paths.resize(k);
    return DisjointPaths{std::move(paths)};
}

// ---------------------------------------------------------------------------
// Outerplanarity

// Embedding with every vertex on the outer face, or nullopt.  Implemented by
// planarity of g plus an apex adjacent to all of V(g).
inline std::optional<PlanarEmbedding> outerplanar_embedding(const Graph& g) {
    if (g.n == 0 || !is_connected(g))
        throw std::invalid_argument("outerplanar_embedding: input must be connected, nonempty");
    if (g.n == 1) {
        PlanarEmbedding e;
        e.rotation = {{}};
        e.faces = {{0}};
        e.outer_face = 0;
        return e;
    }
    Graph h(g.n + 1);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    for (int v = 0; v < g.n; ++v) h.add_edge(v, g.n);
    auto res = planar_embedding(h);
    if (std::holds_alternative<NonplanarWitness>(res)) return std::nullopt;
    auto& hemb = std::get<PlanarEmbedding>(res);

    PlanarEmbedding emb;
    emb.rotation.resize(g.n);
    for (int v = 0; v < g.n; ++v)
        for (int w : hemb.rotation[v])
            if (w != g.n) emb.rotation[v].push_back(w);
    emb.faces = detail::faces_from_rotation(g, emb.rotation);
    // outer face: the one covering all vertices (created by removing the apex)
    std::uint64_t full = g.full_mask();
    emb.outer_face = -1;
    for (int f = 0; f < (int)emb.faces.size(); ++f)
        if (to_mask(emb.faces[f]) == full) {
            if (emb.outer_face < 0 ||
                emb.faces[f].size() > emb.faces[emb.outer_face].size())
                emb.outer_face = f;
        }
    if (emb.outer_face < 0)
        throw std::logic_error("outerplanar_embedding: no all-vertex face after apex removal");
    return emb;
}

// Cyclic vertex order around the apex = boundary order of the outer disk.
// For a 2-connected outerplanar graph this is its unique Hamilton cycle.
inline std::optional<std::vector<int>> outer_cycle_of_2connected(const Graph& g) {
    if (g.n < 3) return std::nullopt;
    Graph h(g.n + 1);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    for (int v = 0; v < g.n; ++v) h.add_edge(v, g.n);
    if (!is_planar(h)) return std::nullopt;
    auto res = planar_embedding(h);
    auto& hemb = std::get<PlanarEmbedding>(res);
    std::vector<int> cyc = hemb.rotation[g.n];
    for (std::size_t i = 0; i < cyc.size(); ++i)
        if (!g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]))
            throw std::logic_error("outer_cycle_of_2connected: apex rotation is not a cycle");
    return cyc;
}

// Hamilton xy-path on the disk boundary, or nullopt.  Reduction: g+xy must be
// a 2-connected outerplanar graph with xy on the outer cycle.
inline std::optional<OuterplaneEmbedding> xy_outerplanar_embedding(const Graph& g, int x, int y) {
    if (x == y) throw std::invalid_argument("xy_outerplanar_embedding: x == y");
    if (g.n == 2) {
        if (!g.has_edge(x, y)) return std::nullopt;
        OuterplaneEmbedding oe;
        oe.embedding.rotation = {{1}, {0}};
        oe.embedding.faces = {{x, y}};
        oe.embedding.outer_face = 0;
        oe.outer_path = {x, y};
        return oe;
    }
    if (g.n < 2) return std::nullopt;
    Graph g2 = g;
    bool added = false;
    if (!g2.has_edge(x, y)) {
        g2.add_edge(x, y);
        added = true;
    }
    if (!is_block(g2)) return std::nullopt;
    auto cyc = outer_cycle_of_2connected(g2);
    if (!cyc) return std::nullopt;
    // xy must be consecutive on the outer cycle
    int k = (int)cyc->size();
    int ix = -1;
    for (int i = 0; i < k; ++i)
        if ((*cyc)[i] == x) ix = i;
    int before = (*cyc)[(ix - 1 + k) % k], after = (*cyc)[(ix + 1) % k];
    if (before != y && after != y) return std::nullopt;

    // outer path: walk the cycle from x the long way round to y
    std::vector<int> path;
    int dir = (after == y) ? -1 : 1;
    for (int i = 0, p = ix; i < k; ++i, p = (p + dir + k) % k) path.push_back((*cyc)[p]);

    auto oemb = outerplanar_embedding(g2);
    if (!oemb) return std::nullopt;
    OuterplaneEmbedding oe;
    oe.embedding = std::move(*oemb);
    if (added) {
        auto& rot = oe.embedding.rotation;
        rot[x].erase(std::find(rot[x].begin(), rot[x].end(), y));
        rot[y].erase(std::find(rot[y].begin(), rot[y].end(), x));
        oe.embedding.faces = detail::faces_from_rotation(g, rot);
        std::uint64_t full = g.full_mask();
        oe.embedding.outer_face = -1;
        for (int f = 0; f < (int)oe.embedding.faces.size(); ++f)
            if (to_mask(oe.embedding.faces[f]) == full) oe.embedding.outer_face = f;
    }
    oe.outer_path = std::move(path);
    return oe;
}

// ---------------------------------------------------------------------------
// Embedding text format: one line per vertex, "v: cyclic neighbor list"

inline std::string embedding_to_text(const PlanarEmbedding& e) {
    std::ostringstream os;
    for (std::size_t v = 0; v < e.rotation.size(); ++v) {
        os << v << ":";
        for (int w : e.rotation[v]) os << " " << w;
        os << "\n";
    }
    return os.str();
}

inline PlanarEmbedding embedding_from_text(const Graph& g, const std::string& text) {
    PlanarEmbedding e;
    e.rotation.assign(g.n, {});
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("embedding_from_text: missing ':'");
        int v = std::stoi(line.substr(0, colon));
        if (v < 0 || v >= g.n) throw std::invalid_argument("embedding_from_text: bad vertex");
        std::istringstream rest(line.substr(colon + 1));
        int w;
        while (rest >> w) {
            if (!g.has_edge(v, w))
                throw std::invalid_argument("embedding_from_text: rotation lists a non-edge");
            e.rotation[v].push_back(w);
        }
        if ((int)e.rotation[v].size() != g.degree(v))
            throw std::invalid_argument("embedding_from_text: rotation misses neighbors");
    }
    e.faces = detail::faces_from_rotation(g, e.rotation);
    int F = (int)e.faces.size();
    if (g.n - g.edge_count() + F != 2)
        throw std::invalid_argument("embedding_from_text: Euler check failed");
    e.outer_face = detail::pick_outer_face(e.faces);
    return e;
}

}  // namespace minorham

#endif  // MINORHAM_TOPOLOGY_HPP

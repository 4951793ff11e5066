// Simple undirected graphs on up to 64 vertices, stored as adjacency bitmasks.
// Vertex ids are always 0..n-1; structural edits renumber densely and return
// the id mapping so callers can translate traces.

#ifndef MINORHAM_GRAPH_HPP
#define MINORHAM_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minorham {

using Edge = std::pair<int, int>;

constexpr int kMaxVertices = 64;

inline int popcount64(std::uint64_t x) { return std::popcount(x); }
inline int lowest_bit(std::uint64_t x) { return std::countr_zero(x); }

struct Graph {
    int n = 0;
    std::vector<std::uint64_t> adj;     // adj[v] bit u set iff uv is an edge
    std::vector<std::string> labels;    // optional external names, empty or size n

    Graph() = default;

    explicit Graph(int n_) : n(n_), adj(n_, 0) {
        if (n_ < 0 || n_ > kMaxVertices)
            throw std::invalid_argument("Graph: vertex count out of range 0..64");
    }

    bool has_edge(int u, int v) const {
        return u >= 0 && u < n && v >= 0 && v < n && (adj[u] >> v & 1);
    }

    void add_edge(int u, int v) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("add_edge: endpoint out of range (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("add_edge: loop at vertex " + std::to_string(u));
        adj[u] |= 1ULL << v;
        adj[v] |= 1ULL << u;
    }

    void remove_edge(int u, int v) {
        adj[u] &= ~(1ULL << v);
        adj[v] &= ~(1ULL << u);
    }

    int degree(int v) const { return popcount64(adj[v]); }

    int edge_count() const {
        int s = 0;
        for (int v = 0; v < n; ++v) s += degree(v);
        return s / 2;
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (std::uint64_t m = adj[v]; m; m &= m - 1) out.push_back(lowest_bit(m));
        return out;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n; ++u)
            for (std::uint64_t m = adj[u] & ~((1ULL << (u + 1)) - 1); m; m &= m - 1)
                out.emplace_back(u, lowest_bit(m));
        return out;
    }

    std::uint64_t full_mask() const { return n == 64 ? ~0ULL : (1ULL << n) - 1; }

    bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }
};

inline Graph build_graph(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);  // add_edge rejects loops/out-of-range
    return g;
}

// ---------------------------------------------------------------------------
// Connectivity primitives

// Component masks of the subgraph induced on `allowed`.
inline std::vector<std::uint64_t> component_masks(const Graph& g, std::uint64_t allowed) {
    std::vector<std::uint64_t> comps;
    std::uint64_t todo = allowed;
    while (todo) {
        std::uint64_t comp = 1ULL << lowest_bit(todo);
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t m = frontier; m; m &= m - 1)
                next |= g.adj[lowest_bit(m)];
            next &= allowed & ~comp;
            comp |= next;
            frontier = next;
        }
        comps.push_back(comp);
        todo &= ~comp;
    }
    return comps;
}

inline bool is_connected_on(const Graph& g, std::uint64_t allowed) {
    if (!allowed) return true;
    return component_masks(g, allowed).size() == 1;
}

inline bool is_connected(const Graph& g) {
    return is_connected_on(g, g.full_mask());
}

struct VertexSet {
    std::vector<int> members;
};

inline std::uint64_t to_mask(const std::vector<int>& vs) {
    std::uint64_t m = 0;
    for (int v : vs) m |= 1ULL << v;
    return m;
}

inline std::vector<int> mask_to_vec(std::uint64_t m) {
    std::vector<int> out;
    for (; m; m &= m - 1) out.push_back(lowest_bit(m));
    return out;
}

// Maximal connected sets of V(g) - removed.
inline std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& removed) {
    for (int v : removed.members)
        if (v < 0 || v >= g.n)
            throw std::invalid_argument("connected_components: removed vertex out of range");
    std::uint64_t allowed = g.full_mask() & ~to_mask(removed.members);
    std::vector<VertexSet> out;
    for (auto comp : component_masks(g, allowed)) out.push_back({mask_to_vec(comp)});
    return out;
}

// ---------------------------------------------------------------------------
// Structural edits.  Every edit returns a fresh graph plus the dense renaming
// old id -> new id (-1 for deleted vertices).

struct EditResult {
    Graph graph;
    std::vector<int> id_map;
};

// Contract edge uv: both endpoints become one vertex carrying min(u,v)'s slot;
// the result is simplified (loops dropped, parallels merged) and renumbered.
inline EditResult contract_edge(const Graph& g, Edge e) {
    auto [u, v] = e;
    if (!g.has_edge(u, v))
        throw std::invalid_argument("contract_edge: not an edge (" + std::to_string(u) +
                                    "," + std::to_string(v) + ")");
    if (u > v) std::swap(u, v);
    std::vector<int> id_map(g.n);
    for (int w = 0; w < g.n; ++w) id_map[w] = w < v ? w : (w == v ? u : w - 1);
    Graph h(g.n - 1);
    for (auto [a, b] : g.edges()) {
        int a2 = id_map[a], b2 = id_map[b];
        if (a2 != b2 && !h.has_edge(a2, b2)) h.add_edge(a2, b2);
    }
    if (!g.labels.empty()) {
        h.labels.resize(h.n);
        for (int w = 0; w < g.n; ++w)
            if (w != v) h.labels[id_map[w]] = g.labels[w];
    }
    return {std::move(h), std::move(id_map)};
}

// Delete a set of vertices, renumbering densely.
inline EditResult delete_vertices(const Graph& g, std::uint64_t victims) {
    std::vector<int> id_map(g.n);
    int next = 0;
    for (int w = 0; w < g.n; ++w) id_map[w] = (victims >> w & 1) ? -1 : next++;
    Graph h(next);
    for (auto [a, b] : g.edges())
        if (id_map[a] >= 0 && id_map[b] >= 0) h.add_edge(id_map[a], id_map[b]);
    if (!g.labels.empty()) {
        h.labels.resize(h.n);
        for (int w = 0; w < g.n; ++w)
            if (id_map[w] >= 0) h.labels[id_map[w]] = g.labels[w];
    }
    return {std::move(h), std::move(id_map)};
}

inline Graph induced_subgraph(const Graph& g, std::uint64_t keep) {
    return delete_vertices(g, g.full_mask() & ~keep).graph;
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.n);
    for (auto [a, b] : g.edges()) h.add_edge(perm[a], perm[b]);
    return h;
}

// ---------------------------------------------------------------------------
// graph6 / sparse6 (bit-exact per the formal format description: 6-bit
// big-endian groups, offset 63)

namespace detail {

inline void append_bits(std::string& out, std::uint64_t value, int bits, int& acc, int& nacc) {
    for (int i = bits - 1; i >= 0; --i) {
        acc = acc << 1 | (int)(value >> i & 1);
        if (++nacc == 6) {
            out.push_back(char(acc + 63));
            acc = 0;
            nacc = 0;
        }
    }
}

inline void flush_bits(std::string& out, int& acc, int& nacc) {
    if (nacc > 0) {
        acc <<= (6 - nacc);
        out.push_back(char(acc + 63));
        acc = 0;
        nacc = 0;
    }
}

inline std::string encode_n(int n) {
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        out.push_back(126);
        int acc = 0, nacc = 0;
        append_bits(out, (std::uint64_t)n, 18, acc, nacc);
    }
    return out;
}

struct BitReader {
    const std::string& s;
    std::size_t pos;
    int bit = 0;  // 0..5 within current byte

    int next() {
        if (pos >= s.size()) throw std::invalid_argument("graph6: truncated input");
        int c = (unsigned char)s[pos] - 63;
        if (c < 0 || c > 63)
            throw std::invalid_argument("graph6: invalid byte at offset " + std::to_string(pos));
        int b = c >> (5 - bit) & 1;
        if (++bit == 6) {
            bit = 0;
            ++pos;
        }
        return b;
    }

    std::uint64_t take(int k) {
        std::uint64_t v = 0;
        while (k--) v = v << 1 | (std::uint64_t)next();
        return v;
    }

    void align() {
        if (bit) {
            bit = 0;
            ++pos;
        }
    }
};

inline int decode_n(const std::string& s, std::size_t& pos) {
    if (pos >= s.size()) throw std::invalid_argument("graph6: empty input");
    unsigned char c = s[pos];
    if (c == 126) {
        ++pos;
        if (pos < s.size() && (unsigned char)s[pos] == 126)
            throw std::invalid_argument("graph6: vertex counts above 2^18 unsupported");
        BitReader br{s, pos};
        int n = (int)br.take(18);
        br.align();
        pos = br.pos;
        return n;
    }
    if (c < 63 || c > 125)
        throw std::invalid_argument("graph6: invalid size byte at offset " + std::to_string(pos));
    ++pos;
    return c - 63;
}

}  // namespace detail

inline std::string to_graph6(const Graph& g) {
    std::string out = detail::encode_n(g.n);
    int acc = 0, nacc = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i)
            detail::append_bits(out, g.has_edge(i, j) ? 1 : 0, 1, acc, nacc);
    detail::flush_bits(out, acc, nacc);
    return out;
}

inline Graph from_graph6(std::string line) {
    const std::string header = ">>graph6<<";
    if (line.rfind(header, 0) == 0) line = line.substr(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    std::size_t pos = 0;
    int n = detail::decode_n(line, pos);
    if (n > kMaxVertices)
        throw std::invalid_argument("graph6: graph too large (n=" + std::to_string(n) + ")");
    Graph g(n);
    detail::BitReader br{line, pos};
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (br.take(1)) g.add_edge(i, j);
    return g;
}

inline std::string to_sparse6(const Graph& g) {
    int n = g.n;
    int k = 1;
    while ((1 << k) < n) ++k;  // bits needed for a vertex id (n>=2)
    if (n < 2) k = 1;
    std::string out = ":";
    out += detail::encode_n(n);
    int acc = 0, nacc = 0;
    int cur = 0;
    auto es = g.edges();  // sparse6 wants edges ordered by larger endpoint
    std::sort(es.begin(), es.end(),
              [](Edge a, Edge b) { return std::pair(a.second, a.first) < std::pair(b.second, b.first); });
    for (auto [u, v] : es) {
        int hi = v, lo = u;
        if (hi == cur) {
            detail::append_bits(out, 0, 1, acc, nacc);
            detail::append_bits(out, (std::uint64_t)lo, k, acc, nacc);
        } else if (hi == cur + 1) {
            cur = hi;
            detail::append_bits(out, 1, 1, acc, nacc);
            detail::append_bits(out, (std::uint64_t)lo, k, acc, nacc);
        } else {
            cur = hi;
            detail::append_bits(out, 1, 1, acc, nacc);
            detail::append_bits(out, (std::uint64_t)hi, k, acc, nacc);
            detail::append_bits(out, 0, 1, acc, nacc);
            detail::append_bits(out, (std::uint64_t)lo, k, acc, nacc);
        }
    }
    // padding rule: if the partial group could be mistaken for another edge
    // starting with b=1, pad with 1s (standard sparse6 padding)
    if (nacc > 0) {
        while (nacc != 0) {
            acc = acc << 1 | 1;
            if (++nacc == 6) {
                out.push_back(char(acc + 63));
                acc = 0;
                nacc = 0;
            }
        }
    }
    return out;
}

inline Graph from_sparse6(std::string line) {
    const std::string header = ">>sparse6<<";
    if (line.rfind(header, 0) == 0) line = line.substr(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.empty() || line[0] != ':')
        throw std::invalid_argument("sparse6: missing ':' prefix");
    std::size_t pos = 1;
    int n = detail::decode_n(line, pos);
    if (n > kMaxVertices)
        throw std::invalid_argument("sparse6: graph too large (n=" + std::to_string(n) + ")");
    Graph g(n);
    int k = 1;
    while ((1 << k) < n) ++k;
    if (n < 2) k = 1;
    detail::BitReader br{line, pos};
    int cur = 0;
    std::size_t total_bits = (line.size() - pos) * 6;
    std::size_t used = 0;
    while (used + 1 + k <= total_bits) {
        int b = (int)br.take(1);
        int x = (int)br.take(k);
        used += 1 + k;
        if (b) ++cur;
        if (cur >= n) break;
        if (x > cur) {
            cur = x;
        } else if (x < cur) {
            if (x >= 0 && !g.has_edge(x, cur)) g.add_edge(x, cur);
        }
        // x == cur would be a loop; sparse6 encoders for simple graphs never emit it
    }
    return g;
}

// ---------------------------------------------------------------------------
// Canonical code: exact canonical labeling by equitable refinement with full
// backtracking over the first non-singleton cell.  The code is the graph6
// string of the canonically relabeled graph, so equal codes == isomorphic.

struct CanonicalCode {
    std::string bytes;

    bool operator==(const CanonicalCode& o) const { return bytes == o.bytes; }
    bool operator<(const CanonicalCode& o) const { return bytes < o.bytes; }
};

namespace detail {

// Refine colors to an equitable partition.  Colors are 0-based and ordered;
// refinement splits cells stably so the ordering stays canonical.
inline void refine_colors(const Graph& g, std::vector<int>& color) {
    int n = g.n;
    for (;;) {
        int ncolors = 0;
        for (int v = 0; v < n; ++v) ncolors = std::max(ncolors, color[v] + 1);
        std::vector<std::uint64_t> cell_mask(ncolors, 0);
        for (int v = 0; v < n; ++v) cell_mask[color[v]] |= 1ULL << v;

        // signature: (old color, neighbor count per color)
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s(ncolors + 1);
            s[0] = color[v];
            for (int c = 0; c < ncolors; ++c)
                s[c + 1] = popcount64(g.adj[v] & cell_mask[c]);
            sig[v] = {std::move(s), v};
        }
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return sig[a].first < sig[b].first; });
        std::vector<int> new_color(n);
        int c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sig[order[i]].first != sig[order[i - 1]].first) ++c;
            new_color[order[i]] = c;
        }
        if (c + 1 == ncolors && new_color == color) return;
        bool changed = (new_color != color);
        color = std::move(new_color);
        if (!changed) return;
    }
}

inline std::string leaf_code(const Graph& g, const std::vector<int>& color) {
    // discrete coloring: vertex with color i goes to position i
    std::vector<int> perm(g.n);
    for (int v = 0; v < g.n; ++v) perm[v] = color[v];
    return to_graph6(relabel(g, perm));
}

inline void canon_search(const Graph& g, std::vector<int> color, std::string& best) {
    refine_colors(g, color);
    int n = g.n;
    // find first non-singleton cell
    std::vector<int> cell_size(n, 0);
    for (int v = 0; v < n; ++v) ++cell_size[color[v]];
    int target = -1;
    for (int c = 0; c < n; ++c)
        if (cell_size[c] >= 2) {
            target = c;
            break;
        }
    if (target < 0) {
        std::string code = leaf_code(g, color);
        if (best.empty() || code < best) best = std::move(code);
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (color[v] != target) continue;
        std::vector<int> child(color);
        for (int w = 0; w < n; ++w)
            if (child[w] > target || (child[w] == target && w != v)) ++child[w];
        // v keeps color `target`, rest of its old cell moves to target+1
        canon_search(g, std::move(child), best);
    }
}

}  // namespace detail

inline CanonicalCode canonical_code(const Graph& g) {
    if (g.n == 0) return {to_graph6(g)};
    std::vector<int> color(g.n, 0);
    std::string best;
    detail::canon_search(g, std::move(color), best);
    return {std::move(best)};
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    return canonical_code(a) == canonical_code(b);
}

}  // namespace minorham

#endif  // MINORHAM_GRAPH_HPP

// Canonical enumeration: planar triangulations by vertex splitting from K4,
// all 3-connected planar graphs by edge-deletion closure of the
// triangulations, and filtered counting on top (K_{2,5}-minor-free and
// Hamiltonian tallies).  One representative per isomorphism class throughout.

#ifndef MINORHAM_ENUMERATE_HPP
#define MINORHAM_ENUMERATE_HPP

#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "json.hpp"
#include "minorham/hamilton.hpp"
#include "minorham/minors.hpp"
#include "minorham/topology.hpp"

namespace minorham {

struct GenerationCheckpoint {
    int order = 0;
    std::vector<std::string> seen;      // canonical codes of emitted graphs
    std::vector<std::string> frontier;  // pending expansion queue
    std::map<std::string, std::uint64_t> counters;
};

struct CountReport {
    int n = 0;
    std::uint64_t total_3c_planar = 0;
    std::uint64_t k25_free = 0;
    std::uint64_t k25_free_hamiltonian = 0;
    double elapsed = 0;
};

inline nlohmann::json checkpoint_to_json(const GenerationCheckpoint& cp) {
    return {{"schema", 1},
            {"order", cp.order},
            {"seen", cp.seen},
            {"frontier", cp.frontier},
            {"counters", cp.counters}};
}

inline GenerationCheckpoint checkpoint_from_json(const nlohmann::json& j) {
    GenerationCheckpoint cp;
    cp.order = j.at("order").get<int>();
    cp.seen = j.at("seen").get<std::vector<std::string>>();
    cp.frontier = j.at("frontier").get<std::vector<std::string>>();
    cp.counters = j.at("counters").get<std::map<std::string, std::uint64_t>>();
    return cp;
}

namespace detail {

// Split vertex v of a triangulation along its rotation: positions i..j of the
// link go to v, the rest to a new vertex n, with the two split vertices
// adjacent and the arc ends r[i], r[j] adjacent to both.
inline Graph split_vertex(const Graph& g, const std::vector<int>& rot, int v, int i, int j) {
    int d = (int)rot.size();
    Graph h(g.n + 1);
    for (auto [a, b] : g.edges())
        if (a != v && b != v) h.add_edge(a, b);
    for (int k = 0; k <= j - i; ++k) h.add_edge(v, rot[i + k]);
    for (int k = 0; k <= d - (j - i); ++k) h.add_edge(g.n, rot[(j + k) % d]);
    h.add_edge(v, g.n);
    return h;
}

}  // namespace detail

// One representative per isomorphism class of planar triangulations
// (maximal planar graphs) on n vertices.
inline std::vector<Graph> generate_triangulations(int n) {
    if (n < 4) throw std::invalid_argument("generate_triangulations: n must be at least 4");
    Graph k4(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
    std::vector<Graph> level = {k4};
    for (int sz = 5; sz <= n; ++sz) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const Graph& g : level) {
            auto emb = std::get<PlanarEmbedding>(planar_embedding(g));
            for (int v = 0; v < g.n; ++v) {
                const auto& rot = emb.rotation[v];
                int d = (int)rot.size();
                for (int i = 0; i < d; ++i)
                    for (int j = i + 1; j < d; ++j) {
                        Graph h = detail::split_vertex(g, rot, v, i, j);
                        if (h.edge_count() != 3 * h.n - 6) continue;
                        if (seen.insert(canonical_code(h).bytes).second) {
                            if (!is_planar(h))
                                throw std::logic_error("generate_triangulations: split broke planarity");
                            next.push_back(std::move(h));
                        }
                    }
            }
        }
        level = std::move(next);
    }
    return level;
}

namespace detail {

struct ClosureState {
    std::set<std::string> seen;
    std::vector<std::string> queue;  // canonical graph6, pending expansion
    std::mutex mu;
};

// Expand one state: every single-edge deletion that keeps the graph
// 3-connected is a neighbor state.
inline void expand_3c(const Graph& g, ClosureState& st) {
    for (auto [u, v] : g.edges()) {
        Graph h = g;
        h.remove_edge(u, v);
        if (!is_3_connected(h)) continue;
        std::string code = canonical_code(h).bytes;
        std::lock_guard<std::mutex> lock(st.mu);
        if (st.seen.insert(code).second) st.queue.push_back(code);
    }
}

}  // namespace detail

// One representative per isomorphism class of 3-connected planar graphs on n
// vertices, as canonical graph6 codes in sorted order.  Closure argument: a
// 3-connected planar graph is a spanning subgraph of a triangulation on the
// same vertices, and every supergraph in between is itself 3-connected, so
// breadth-first edge deletion from all triangulations reaches everything.
inline std::vector<std::string> generate_3c_planar_codes(
    int n, int workers = 1, const std::string& checkpoint_dir = "",
    const GenerationCheckpoint* resume = nullptr) {
    if (n < 4) throw std::invalid_argument("generate_3c_planar: n must be at least 4");
    detail::ClosureState st;
    if (resume) {
        if (resume->order != n)
            throw std::invalid_argument("generate_3c_planar: checkpoint order mismatch");
        st.seen.insert(resume->seen.begin(), resume->seen.end());
        st.queue = resume->frontier;
    } else {
        for (const Graph& t : generate_triangulations(n)) {
            std::string code = canonical_code(t).bytes;
            if (st.seen.insert(code).second) st.queue.push_back(code);
        }
    }

    std::uint64_t expanded = 0, checkpoint_serial = 0;
    auto maybe_checkpoint = [&]() {
        if (checkpoint_dir.empty() || ++expanded % 100000 != 0) return;
        GenerationCheckpoint cp;
        cp.order = n;
        cp.seen.assign(st.seen.begin(), st.seen.end());
        cp.frontier = st.queue;
        cp.counters["expanded"] = expanded;
        std::ofstream out(checkpoint_dir + "/gen3c-n" + std::to_string(n) + "-" +
                          std::to_string(++checkpoint_serial) + ".json");
        out << checkpoint_to_json(cp) << "\n";
    };

    if (workers <= 1) {
        while (!st.queue.empty()) {
            std::string code = std::move(st.queue.back());
            st.queue.pop_back();
            detail::expand_3c(from_graph6(code), st);
            maybe_checkpoint();
        }
    } else {
        std::atomic<int> active{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&st, &active] {
                for (;;) {
                    std::string code;
                    {
                        std::lock_guard<std::mutex> lock(st.mu);
                        if (!st.queue.empty()) {
                            code = std::move(st.queue.back());
                            st.queue.pop_back();
                            ++active;
                        }
                    }
                    if (code.empty()) {
                        if (active.load() == 0) return;  // drained and nobody producing
                        std::this_thread::yield();
                        continue;
                    }
                    detail::expand_3c(from_graph6(code), st);
                    --active;
                }
            });
        for (auto& t : pool) t.join();
    }

    std::vector<std::string> out(st.seen.begin(), st.seen.end());
    return out;  // std::set iteration is already sorted
}

inline std::vector<Graph> generate_3c_planar(int n, int workers = 1) {
    std::vector<Graph> out;
    for (const std::string& code : generate_3c_planar_codes(n, workers)) {
        Graph g = from_graph6(code);
        if (!is_planar(g) || !is_3_connected(g))
            throw std::logic_error("generate_3c_planar: emitted graph fails its predicate");
        out.push_back(std::move(g));
    }
    return out;
}

// g(n) and friends: count 3-connected planar classes, the K_{2,5}-minor-free
// ones, and how many of those are Hamiltonian.
inline CountReport count_k25_free(int n, int workers = 1) {
    auto t0 = std::chrono::steady_clock::now();
    CountReport rep;
    rep.n = n;
    for (const std::string& code : generate_3c_planar_codes(n, workers)) {
        Graph g = from_graph6(code);
        ++rep.total_3c_planar;
        if (find_k2t_model(g, 5)) continue;
        ++rep.k25_free;
        if (is_hamiltonian(g)) ++rep.k25_free_hamiltonian;
    }
    rep.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace minorham

#endif  // MINORHAM_ENUMERATE_HPP
